#pragma once

#include <functional>
#include <random>
#include <vector>

#include "qcorr/behaviors.hpp"
#include "qcorr/qalgebra.hpp"

namespace qcorr {

/// Deterministic model with a deeper hidden-variable level: outcomes
/// are omega/nu averages of products of local and distant response
/// functions, and the lambda distribution may factorize over the
/// settings. All supports are finite grids so audits are exact.
struct NonlocalDeterministicModel {
  int lambda_points = 0;
  int deep_points = 0;  // omega and nu grid size
  // response functions indexed [setting][lambda][deep], values in [-1,1]
  std::vector<std::vector<std::vector<double>>> f1, g1, f2, g2;
  std::vector<double> k_omega, l_nu;         // deep-level weights, sum 1
  std::vector<double> base_lambda;           // base weights, sum 1
  // optional setting-dependent factors in [0,1]; empty means absent
  std::vector<std::vector<double>> rho_a, rho_b;  // [setting][lambda]

  double outcome_a(int A, int B, int lam) const;
  double outcome_b(int A, int B, int lam) const;
  /// effective lambda weight for settings (A,B); may sum to < 1, the
  /// residual behaves as an uncorrelated coin
  double lambda_weight(int A, int B, int lam) const;
};

/// Stochastic model: per-lambda outcome conditionals of the product
/// form, possibly with setting-dependent lambda factors.
struct NonlocalStochasticModel {
  int lambda_points = 0;
  // P(a=+1|A,lambda) and P(b=+1|B,lambda)
  std::vector<std::vector<double>> p_a, p_b;  // [setting][lambda]
  std::vector<double> base_lambda;
  std::vector<std::vector<double>> rho_a, rho_b;  // optional, as above
};

/// Behavior of a model on the (2,2,2) scenario, exact on the grids.
Behavior behavior_from_model(const NonlocalDeterministicModel& m);
Behavior behavior_from_model(const NonlocalStochasticModel& m);

/// Monte-Carlo estimate of the same behavior (for convergence checks).
Behavior behavior_from_model_mc(const NonlocalStochasticModel& m, int shots,
                                std::mt19937_64& rng);

NonlocalDeterministicModel random_deterministic_model(int lambda_points, int deep_points,
                                                      bool setting_dependent_lambda,
                                                      std::mt19937_64& rng);
NonlocalStochasticModel random_stochastic_model(int lambda_points,
                                                bool setting_dependent_lambda,
                                                std::mt19937_64& rng);

/// Extreme swap model: a depends only on the distant setting, b only
/// on the distant setting.
NonlocalDeterministicModel swap_model(int lambda_points, std::mt19937_64& rng);

/// P(a=+-1|ab,lambda) = 1/2 +- alpha sgn(a.l) sgn(b.l) with outcome
/// independence; gives <AB> = 4 alpha beta at every setting pair.
Behavior sign_model_behavior(double alpha, double beta,
                             const std::vector<Vec3>& a_settings,
                             const std::vector<Vec3>& b_settings, int sphere_grid);

/// Largest |CHSH| over the 8 sign variants of a behavior.
double chsh_max(const Behavior& b);

struct ChshAudit {
  double max_abs_chsh = 0.0;
  int samples = 0;
  bool within_bound = false;  // <= 2 + 1e-9
};

ChshAudit audit_chsh_deterministic(int samples, int lambda_points, int deep_points,
                                   std::uint64_t seed);
ChshAudit audit_chsh_stochastic(int samples, int lambda_points, std::uint64_t seed);

/// Leggett model: polarization pairs on a finite grid with Malus
/// marginals and a free correlation within the positivity window.
struct LeggettModel {
  std::vector<Vec3> u, v;        // polarization pairs
  std::vector<double> weight;    // sums to 1
  // correlation C_{u,v}(a,b) for each pair index
  std::function<double(int, const Vec3&, const Vec3&)> corr;

  /// joint +-1 probabilities for directions (a, b)
  std::array<double, 4> joint(int pair, const Vec3& a, const Vec3& b) const;
};

LeggettModel random_leggett_model(int pairs, std::uint64_t seed);

/// Behavior of a Leggett model at fixed direction pairs.
Behavior leggett_behavior(const LeggettModel& m, const std::vector<Vec3>& a_settings,
                          const std::vector<Vec3>& b_settings);

struct BranciardResult {
  double lhs_singlet = 0.0;  // 2|cos(phi/2)|
  double bound = 0.0;        // 2 - (2/3)|sin(phi/2)|
  bool violated = false;
};

/// Leggett-type inequality over three setting triplets with pair angle
/// phi, evaluated on the singlet correlations.
BranciardResult branciard_check(double phi);

/// Upper endpoint of the singlet violation window, by bisection.
double branciard_violation_endpoint();

struct MaudlinReport {
  int instances = 0;
  int converged = 0;
  double max_factorization_error = 0.0;
  bool passed = false;
};

/// Constructs random setting distributions and outcome tables obeying
/// the two conditional-independence premises by alternating
/// projection, then checks that the joint factorizes.
MaudlinReport maudlin_implication_check(int instances, std::uint64_t seed);

/// Negative control: the singlet table obeys the first premise but not
/// the second, and does not factorize.
bool maudlin_negative_control();

struct DetNsReport {
  int tables_scanned = 0;
  int normalized = 0;
  int no_signaling = 0;
  int product_form = 0;
  bool passed = false;  // every deterministic no-signaling table is a product
};

/// Exhaustive audit over every 0/1 table of the (2,2,2) scenario.
DetNsReport det_ns_implies_local_222();

/// Same audit for three parties (8 joint settings); considerably larger.
DetNsReport det_ns_implies_local_322();

}  // namespace qcorr
