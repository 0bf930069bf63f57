#pragma once

#include <random>
#include <vector>

#include "qcorr/behaviors.hpp"
#include "qcorr/qalgebra.hpp"

namespace qcorr {

/// Two CHSH triads acting on a three-qubit state: the a-wing
/// observables are shared between the ab and ac CHSH operators. All
/// observables are spin directions in the x-z plane, parameterized by
/// their angle from the z axis.
struct SharedSettingChshPair {
  double a0, a1;  // party a (shared)
  double b0, b1;  // party b
  double c0, c1;  // party c

  CMat obs(double angle) const;  // cos sz + sin sx
};

/// (<B_ab>, <B_ac>) with shared a-wing observables.
std::pair<double, double> tv_values(const DensityMatrix& rho3,
                                    const SharedSettingChshPair& pair);

struct MonogamyVerdict {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

/// <B_ab>^2 + <B_ac>^2 <= 8.
MonogamyVerdict tv_monogamy(const DensityMatrix& rho3, const SharedSettingChshPair& pair);

/// Strengthened form: <B_ab>^2 + <B_ac>^2 <= 8 (1 - <sigma_y>_a^2);
/// sigma_y is the out-of-plane direction of the shared wing.
MonogamyVerdict tv_strengthened(const DensityMatrix& rho3, const SharedSettingChshPair& pair);

/// |<B_ab>| + |<B_ac>| <= 4 for no-signaling three-party behaviors.
struct NsMonogamyVerdict {
  double b_ab = 0.0;
  double b_ac = 0.0;
  bool no_signaling = false;
  bool satisfied = false;
};
NsMonogamyVerdict ns_monogamy(const Behavior& b, double tol = 1e-9);

/// PR box between a and b, uncorrelated coin at c; saturates (4,0).
Behavior pr_box_with_bystander();

/// Deterministic signaling behavior reaching (4,4).
Behavior signaling_double_chsh();

/// WWZB-normalized CHSH operator for the two qubits other than i,
/// combined with party i's observable pair:
/// D_3^(i) = B_2 (A_i + A_i')/2 + (A_i - A_i')/2.
CMat d3_operator(int i, const std::vector<std::vector<CMat>>& observables);

struct D3Bounds {
  double all_states;              // sqrt(2)
  double fully_separable;         // 1
  double bisep_same, bisep_other; // sqrt(2), 1
  double pairwise_quadratic;      // 5/2
  double sphere;                  // 3
  // orthogonal-observable variants
  double orth_all_states;         // sqrt(3/2)
  double orth_fully_separable;    // sqrt(3/4)
  double orth_pairwise;           // 2
};
D3Bounds d3_bounds();

/// |<D_3^(i)>| for the W state at shared x-z angles (alpha for the
/// unprimed, beta for the primed observable on every qubit).
double d3_w_state_value(int i, double alpha, double beta);

struct AuditReport {
  double max_observed = 0.0;
  double bound = 0.0;
  bool satisfied = false;
  int samples = 0;
};

/// Monte-Carlo audits over random states and settings.
AuditReport audit_tv(int samples, std::uint64_t seed);
AuditReport audit_tv_strengthened(int samples, std::uint64_t seed);
AuditReport audit_ns(int samples, std::uint64_t seed);
AuditReport audit_d3_pairwise(int samples, std::uint64_t seed);

/// Multi-start coordinate ascent for |<D_3^(i)>| on a fixed state over
/// shared (alpha, beta); a lower-bound witness, not a global maximum.
double d3_search(const DensityMatrix& rho3, int i, int restarts, std::uint64_t seed,
                 bool orthogonal = false);

}  // namespace qcorr
