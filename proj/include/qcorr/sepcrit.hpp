#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/qalgebra.hpp"

namespace qcorr {

/// One quadruple {X_x, Y_x, Z_x, I_x} of the local-orthogonal-observable
/// construction; I_x projects onto the two basis states the pair couples.
struct LooQuadruple {
  CMat x, y, z, i;
};

/// The 2^{n-1} quadruples built recursively from per-qubit orthogonal
/// spin triples.
struct LooFamily {
  int n = 0;
  std::vector<LooQuadruple> quadruples;
  std::vector<std::array<CMat, 3>> singles;  // per-qubit X, Y, Z

  const LooQuadruple& q(int x) const { return quadruples[x]; }
};

LooFamily loo_family(int n, const std::vector<OrthonormalTriple>& triples);
LooFamily loo_family_pauli(int n);

/// Representative bit string (first bit 0) of the anti-diagonal pair
/// the family label x couples, and its inverse.
std::vector<int> loo_pair_bits(int x, int n);
int loo_label_of_bits(std::vector<int> bits);
/// 0-based row index of the pair representative: (j, 2^n-1-j).
int loo_pair_index(int x, int n);
int loo_label_of_pair_index(int j, int n);

/// Partition of {0..n-1} into k disjoint nonempty blocks.
struct Split {
  std::vector<std::vector<int>> blocks;

  int n_parties() const;
  int k() const { return static_cast<int>(blocks.size()); }
  static Split bipartition(const std::vector<int>& first_block, int n);
  std::string to_string() const;
};

/// All k-block partitions of n parties.
std::vector<Split> all_splits(int n, int k);
std::vector<Split> all_bipartitions(int n);

/// Orbits of the family labels under flipping the split's blocks; the
/// groups of labels sharing one separability inequality.
std::vector<std::vector<int>> solution_sets(const Split& split, int n);

struct CriterionVerdict {
  std::string criterion;
  double lhs = 0.0;
  double rhs = 0.0;
  double bound = 0.0;  // state-independent numeric cap, if any
  bool violated = false;
  double margin = 0.0;  // lhs - rhs

  static CriterionVerdict make(std::string name, double lhs, double rhs, double bound,
                               double tol = 1e-12);
};

/// max{<X_0>^2+<Y_0>^2, <X_1>^2+<Y_1>^2} <= min{<I_1>^2-<Z_1>^2,
/// <I_0>^2-<Z_0>^2} <= 1/4 for separable two-qubit states; necessary
/// and sufficient over all triples.
CriterionVerdict two_qubit_criterion(const DensityMatrix& rho, const LooFamily& family);
CriterionVerdict two_qubit_criterion(const DensityMatrix& rho);

/// Per-solution-set verdicts for separability under one split.
std::vector<CriterionVerdict> split_criterion(const DensityMatrix& rho, const Split& split,
                                              const LooFamily& family);

/// k-separability: the state-independent cap 4^{1-k} per label plus the
/// tuple-minimized state-dependent bound.
CriterionVerdict k_sep_criterion(const DensityMatrix& rho, int k, const LooFamily& family);

/// Same inequalities read off the density matrix elements in the
/// z-basis (valid for Pauli triples, same orientation on each qubit).
CriterionVerdict two_qubit_criterion_elements(const DensityMatrix& rho);
std::vector<CriterionVerdict> split_criterion_elements(const DensityMatrix& rho,
                                                       const Split& split);
CriterionVerdict k_sep_criterion_elements(const DensityMatrix& rho, int k);

/// max_j |rho_{j,jbar}| <= (1/2)^k for k-separable states.
CriterionVerdict laskowski_zukowski(const DensityMatrix& rho, int k);

/// F(rho) = (rho_11 + rho_dd)/2 + |rho_1d| <= 1/2 for bi-separable states.
CriterionVerdict fidelity_criterion(const DensityMatrix& rho);

/// |lambda_0^+ - lambda_0^-| <= 2 lambda_j for separability under the
/// bi-partite split labelled j (bits over the first n-1 qubits; bit = 0
/// puts the qubit with the last one).
struct DurCiracResult {
  double lambda0_plus = 0.0;
  double lambda0_minus = 0.0;
  std::vector<double> lambda;  // indexed 1..2^{n-1}-1
  CriterionVerdict verdict;
};
DurCiracResult dur_cirac(const DensityMatrix& rho, int split_label);

/// Split label for the Dur-Cirac scheme from a bipartition.
int dur_cirac_label(const Split& split, int n);

/// <M>^2 + <M'>^2 <= 2^{n+3} (1/4)^k and |<M>| <= 2^{(n+3)/2} (1/2)^k.
struct MerminKsepVerdict {
  CriterionVerdict quadratic;
  CriterionVerdict linear;
};
MerminKsepVerdict mermin_ksep(double mermin_value, double mermin_primed_value, int n, int k);
MerminKsepVerdict mermin_ksep(const DensityMatrix& rho, const LooFamily& family, int k);

enum class RobustnessKind { full_ent, some_ent, split, all_splits };

/// White-noise threshold p0: the criterion detects rho mixed with a
/// fraction p of 1/2^n exactly for p < p0. Closed-form root when the
/// threshold equation is affine/quadratic, bisection otherwise.
double noise_robustness(const DensityMatrix& rho, RobustnessKind kind,
                        const std::optional<Split>& split = std::nullopt, double tol = 1e-10);

/// Threshold of an arbitrary monotone detection family, by bisection.
double family_threshold(const std::function<bool(double)>& detected_at, double tol = 1e-10);

/// Measurement settings M_l and M~_l determining Re/Im of the far
/// anti-diagonal element; sum_l (-1)^l M_l = n X_0.
struct SettingsConstruction {
  std::vector<CMat> real_settings;       // n operators
  std::vector<CMat> imaginary_settings;  // n operators
  CMat unitary;                          // U_j conjugation for the target element
};
SettingsConstruction settings_construction(int n, int target_pair_index);

/// Hierarchy report: per level k and per split, excluded or consistent.
struct ClassifyReport {
  struct Level {
    int k;
    CriterionVerdict simpliciter;           // k-separability
    std::vector<std::pair<Split, bool>> split_excluded;
  };
  std::vector<Level> levels;  // k = 2..n
  bool fully_entangled_certified = false;   // k = 2 criterion violated
  bool some_entanglement_certified = false; // k = n criterion violated
};
ClassifyReport classify(const DensityMatrix& rho, const LooFamily& family);

}  // namespace qcorr
