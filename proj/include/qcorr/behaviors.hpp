#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcorr/qalgebra.hpp"

namespace qcorr {

/// N parties, m settings per party, dichotomic outcomes (+1/-1).
/// Outcome bit 0 encodes +1.
struct Scenario {
  int parties = 2;
  int settings = 2;

  int setting_count() const;   // settings^parties
  int outcome_count() const;   // 2^parties
  int setting_index(const std::vector<int>& s) const;
  std::vector<int> setting_tuple(int index) const;
  bool operator==(const Scenario&) const = default;
};

/// Conditional probability table P(outcomes|settings).
struct Behavior {
  Scenario scenario;
  std::vector<std::vector<double>> table;  // [setting_index][outcome_index]

  double prob(int setting_index, int outcome_index) const {
    return table[setting_index][outcome_index];
  }
};

/// Validates positivity and normalization (tol 1e-10), renormalizes
/// each conditional distribution exactly on ingest.
Behavior make_behavior(Scenario s, std::vector<std::vector<double>> table);

/// Product expectation <A_1...A_N> at the given settings.
double expectation(const Behavior& b, const std::vector<int>& settings);

/// Sum over a subset of parties of the product of their outcomes,
/// evaluated at a full setting tuple (signaling-aware: the traced-out
/// parties' settings stay in the conditioning).
double marginal_expectation(const Behavior& b, const std::vector<int>& parties,
                            const std::vector<int>& settings);

struct NoSignalingReport {
  bool no_signaling = false;
  double max_violation = 0.0;
};

NoSignalingReport is_no_signaling(const Behavior& b, double tol = 1e-10);

Behavior pr_box();

/// The 8 non-deterministic extreme points of the (2,2,2) no-signaling
/// polytope: P = 1/2 iff a xor b = AB xor alpha A xor beta B xor gamma.
std::vector<Behavior> ns_extreme_points_222();

/// All (2^m)^N products of per-party deterministic response functions.
std::vector<Behavior> local_deterministic_vertices(const Scenario& s);

/// Deterministic behavior from joint response functions a_k(settings).
Behavior deterministic_behavior(const Scenario& s,
                                const std::function<int(int party, const std::vector<int>&)>& outcome);

/// The 8 CHSH facet values for a (2,2,2) behavior; local iff all <= 2.
std::vector<double> chsh_facets(const Behavior& b);

struct LocalVerdict {
  bool local = false;
  std::string method;       // "chsh-facets" or "lp"
  double max_facet = 0.0;   // only for the facet route
};

/// Facet test for the (2,2,2) scenario (requires no-signaling), linear
/// feasibility over deterministic vertices otherwise. Scenarios with
/// more than max_vertices vertices are rejected.
LocalVerdict is_local(const Behavior& b, std::int64_t max_vertices = 1000000);

/// LP membership in the convex hull of local deterministic vertices.
bool is_local_lp(const Behavior& b, std::int64_t max_vertices = 1000000);

enum class NsTermKind { product, marginal_1, marginal_2 };

struct NsTerm {
  NsTermKind kind;
  int own = 0;  // own setting (party 1 for marginal_1, party 2 for marginal_2)
  int co = 0;   // co-setting of the other party
  double coeff = 0.0;
};

struct NsInequality {
  std::vector<NsTerm> terms;  // value <= 2 for every no-signaling behavior
  double evaluate(const Behavior& b) const;
};

/// The 32 four-term and 14 six-term non-trivial no-signaling
/// inequalities for the (2,2,2) scenario, each bounded by 2.
std::vector<NsInequality> ns_four_term_inequalities();
std::vector<NsInequality> ns_six_term_inequalities();

struct NsInequalityReport {
  std::vector<double> four_term;  // 32 values
  std::vector<double> six_term;   // 14 values
  double max_value = 0.0;
};

NsInequalityReport ns_nontrivial_inequalities(const Behavior& b);

/// -1 + |<A>^B + <B>^A| <= <AB> <= 1 - |<A>^B - <B>^A| for every
/// setting pair; holds for any correlation whatsoever.
bool roy_singh_check(const Behavior& b, double tol = 1e-10);

/// One-way signaling protocol reaching 4 on a four-term inequality.
Behavior signaling_protocol_four_term();
/// Signaling protocol reaching 6 on a six-term inequality.
Behavior signaling_protocol_six_term();

/// Direction-indexed behavior family: joint +-1 outcome probabilities
/// for spin measurements along a and b on the two wings.
struct DirectionBehavior {
  // corr(u,v) = <ab>, m1(u) = <a>, m2(v) = <b>; marginals are assumed
  // co-setting independent (no-signaling family).
  std::function<double(const Vec3&, const Vec3&)> corr;
  std::function<double(const Vec3&)> m1;
  std::function<double(const Vec3&)> m2;
};

struct SingletConstraintReport {
  bool applicable = false;       // perfect (anti-)correlation premise holds
  double max_sum_rule = 0.0;     // max |<a>_I + <a>_II| over directions
  double max_oddness = 0.0;      // max |<-a>_I + <a>_I|
  bool satisfied = false;
};

/// Checks the constraints any no-signaling model must satisfy in order
/// to reproduce the singlet perfect (anti-)correlations: marginals for
/// the two wings add to zero and are odd functions of the direction.
SingletConstraintReport singlet_reproduction_constraints(
    const DirectionBehavior& family, const std::vector<Vec3>& directions,
    double tol = 1e-9);

DirectionBehavior quantum_singlet_family();

/// Quantum behavior of a two-qubit state measured along per-party
/// direction pairs, as a (2,2,2) behavior.
Behavior quantum_behavior(const DensityMatrix& rho,
                          const std::vector<std::vector<SpinDirection>>& settings);

/// Random point of the (2,2,2) no-signaling polytope: a Dirichlet
/// mixture of the 16 local and 8 nonlocal extreme points.
Behavior random_ns_behavior(std::mt19937_64& rng);

/// Random (possibly signaling) behavior: Dirichlet rows.
Behavior random_behavior(const Scenario& s, std::mt19937_64& rng);

}  // namespace qcorr
