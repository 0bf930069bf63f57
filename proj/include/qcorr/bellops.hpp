#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/behaviors.hpp"
#include "qcorr/qalgebra.hpp"

namespace qcorr {

/// Real coefficient map over setting tuples, two settings per party.
/// Tuple bits: 0 = unprimed, 1 = primed, party 0 most significant.
struct BellPolynomial {
  int parties = 2;
  std::vector<double> coeffs;  // indexed by setting tuple, size 2^parties

  double coeff(int tuple) const { return coeffs[tuple]; }
  double absolute_max() const;  // sum of |coefficients|

  /// Expectation under an assignment of product expectation values.
  double evaluate(const std::vector<double>& product_expectations) const;
  double evaluate(const Behavior& b) const;
};

struct BoundTable {
  std::optional<double> local;
  std::optional<double> plhv;
  std::optional<double> quantum;
  std::optional<double> absolute;
};

BellPolynomial chsh();

/// Mermin polynomial via the half-sum recursion; M_2 = CHSH.
BellPolynomial mermin(int n);
BellPolynomial mermin_primed(int n);

/// Svetlichny polynomial: coefficient nu^{+-}_t = (-1)^{t(t+-1)/2} on
/// the tuple with t primed settings.
BellPolynomial svetlichny(int n, int sign);

/// Conversion factor to the Collins et al. normalization (S~_N = M_N
/// for even N, (M_N+M'_N)/2 for odd N): the bound tables here divided
/// by this factor give the bounds quoted for S~_N.
double svetlichny_collins_factor(int n);

CMat to_operator(const BellPolynomial& p, const std::vector<std::vector<CMat>>& observables);

enum class BellKind { chsh, mermin, svetlichny };

BoundTable bounds(BellKind kind, int n);

/// Exact local bound by enumeration of per-party deterministic
/// assignments (independent oracle for small n).
double local_bound_brute_force(const BellPolynomial& p);

/// Exact PLHV bound: max over bipartitions of deterministic
/// block-response functions (outcomes may depend on all settings
/// inside a block). Feasible for n <= 4.
double plhv_bound_brute_force(const BellPolynomial& p);

/// Measurement angles in the x-y plane: per party the pair
/// (alpha_unprimed, alpha_primed); observable = cos a sx + sin a sy.
struct XyAngles {
  std::vector<double> unprimed;
  std::vector<double> primed;
  double ghz_phase = 0.0;  // phase of the GHZ state the settings target
};

/// Settings for which <S_n^{+-}> on the n-qubit GHZ state equals
/// 2^{n-1} sqrt(2).
XyAngles ghz_optimal_settings(int n, int sign);

/// Settings (0, pi/2 per party) plus the GHZ phase for which <M_n>
/// reaches the quantum maximum 2^{(n+1)/2}.
XyAngles mermin_optimal_settings(int n);

CMat xy_observable(double angle);
std::vector<std::vector<CMat>> xy_observables(const XyAngles& a);

/// Largest CHSH expectation over all observable choices for a
/// two-qubit state: 2 sqrt(t1^2 + t2^2) with t1 >= t2 the two largest
/// singular values of the correlation matrix.
double horodecki_chsh_max(const DensityMatrix& rho);

struct CorrOfCorrResult {
  double bell_value = 0.0;      // |<B>| on the four-qubit state
  double max_eigenvalue = 0.0;  // Tsirelson cap of the Bell operator
  bool observables_square_to_identity = false;
};

/// The two-pair correlations-between-correlations test: projector-sum
/// observables on each pair, CHSH combination across the pairs.
CorrOfCorrResult corr_of_corr_test();

/// The four projector-sum observables of the test, each on C^2 x C^2.
std::vector<CMat> corr_of_corr_observables();

}  // namespace qcorr
