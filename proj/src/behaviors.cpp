#include "qcorr/behaviors.hpp"

#include <bit>
#include <cmath>

#include "qcorr/lp.hpp"

namespace qcorr {

namespace {

int pow_int(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

int outcome_sign(int outcome_index, int parties) {
  // product of +-1 outcomes; bit 1 encodes -1
  const int ones = std::popcount(static_cast<unsigned>(outcome_index) &
                                 ((1u << parties) - 1));
  return (ones % 2 == 0) ? 1 : -1;
}

int parity(int e) { return ((e % 2) + 2) % 2; }
double sgn_pow(int e) { return parity(e) == 0 ? 1.0 : -1.0; }

}  // namespace

int Scenario::setting_count() const { return pow_int(settings, parties); }
int Scenario::outcome_count() const { return 1 << parties; }

int Scenario::setting_index(const std::vector<int>& s) const {
  if (static_cast<int>(s.size()) != parties)
    throw std::invalid_argument("setting tuple has wrong arity");
  int idx = 0;
  for (int v : s) {
    if (v < 0 || v >= settings) throw std::invalid_argument("setting index out of range");
    idx = idx * settings + v;
  }
  return idx;
}

std::vector<int> Scenario::setting_tuple(int index) const {
  std::vector<int> s(parties);
  for (int i = parties - 1; i >= 0; --i) {
    s[i] = index % settings;
    index /= settings;
  }
  return s;
}

Behavior make_behavior(Scenario s, std::vector<std::vector<double>> table) {
  if (s.parties < 1 || s.settings < 1) throw std::invalid_argument("scenario counts must be positive");
  if (static_cast<int>(table.size()) != s.setting_count())
    throw std::invalid_argument("behavior table has wrong setting count");
  for (auto& row : table) {
    if (static_cast<int>(row.size()) != s.outcome_count())
      throw std::invalid_argument("behavior row has wrong outcome count");
    double sum = 0;
    for (double p : row) {
      if (p < -1e-12) throw std::invalid_argument("negative probability in behavior");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10)
      throw std::invalid_argument("conditional distribution does not sum to 1");
    for (double& p : row) p = std::max(p, 0.0) / sum;
  }
  return Behavior{s, std::move(table)};
}

double expectation(const Behavior& b, const std::vector<int>& settings) {
  const int si = b.scenario.setting_index(settings);
  double e = 0;
  for (int o = 0; o < b.scenario.outcome_count(); ++o)
    e += outcome_sign(o, b.scenario.parties) * b.table[si][o];
  return e;
}

double marginal_expectation(const Behavior& b, const std::vector<int>& parties,
                            const std::vector<int>& settings) {
  const int si = b.scenario.setting_index(settings);
  const int n = b.scenario.parties;
  double e = 0;
  for (int o = 0; o < b.scenario.outcome_count(); ++o) {
    int sign = 1;
    for (int p : parties)
      if ((o >> (n - 1 - p)) & 1) sign = -sign;
    e += sign * b.table[si][o];
  }
  return e;
}

NoSignalingReport is_no_signaling(const Behavior& b, double tol) {
  const int n = b.scenario.parties;
  const int m = b.scenario.settings;
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    // compare the traced-out marginal for every pair of settings of party k
    for (int si = 0; si < b.scenario.setting_count(); ++si) {
      auto s = b.scenario.setting_tuple(si);
      if (s[k] != 0) continue;
      for (int alt = 1; alt < m; ++alt) {
        auto s2 = s;
        s2[k] = alt;
        const int si2 = b.scenario.setting_index(s2);
        // marginal over party k's outcome, per joint outcome of the rest
        for (int o = 0; o < b.scenario.outcome_count(); ++o) {
          if ((o >> (n - 1 - k)) & 1) continue;
          const int o1 = o | (1 << (n - 1 - k));
          const double p = b.table[si][o] + b.table[si][o1];
          const double q = b.table[si2][o] + b.table[si2][o1];
          worst = std::max(worst, std::abs(p - q));
        }
      }
    }
  }
  return {worst <= tol, worst};
}

Behavior pr_box() { return ns_extreme_points_222()[0]; }

std::vector<Behavior> ns_extreme_points_222() {
  Scenario sc{2, 2};
  std::vector<Behavior> out;
  for (int alpha = 0; alpha < 2; ++alpha)
    for (int beta = 0; beta < 2; ++beta)
      for (int gamma = 0; gamma < 2; ++gamma) {
        std::vector<std::vector<double>> table(4, std::vector<double>(4, 0.0));
        for (int A = 0; A < 2; ++A)
          for (int B = 0; B < 2; ++B) {
            const int target = (A & B) ^ (alpha & A) ^ (beta & B) ^ gamma;
            for (int a = 0; a < 2; ++a)
              for (int bbit = 0; bbit < 2; ++bbit)
                if ((a ^ bbit) == target) table[2 * A + B][2 * a + bbit] = 0.5;
          }
        out.push_back(make_behavior(sc, std::move(table)));
      }
  return out;
}

std::vector<Behavior> local_deterministic_vertices(const Scenario& s) {
  // a response function per party maps each local setting to an outcome bit
  const int per_party = 1 << s.settings;
  const std::int64_t total = [&] {
    std::int64_t t = 1;
    for (int i = 0; i < s.parties; ++i) t *= per_party;
    return t;
  }();
  std::vector<Behavior> out;
  out.reserve(total);
  for (std::int64_t code = 0; code < total; ++code) {
    std::vector<int> fn(s.parties);
    std::int64_t c = code;
    for (int p = s.parties - 1; p >= 0; --p) {
      fn[p] = static_cast<int>(c % per_party);
      c /= per_party;
    }
    std::vector<std::vector<double>> table(s.setting_count(),
                                           std::vector<double>(s.outcome_count(), 0.0));
    for (int si = 0; si < s.setting_count(); ++si) {
      auto st = s.setting_tuple(si);
      int o = 0;
      for (int p = 0; p < s.parties; ++p) o = (o << 1) | ((fn[p] >> st[p]) & 1);
      table[si][o] = 1.0;
    }
    out.push_back(Behavior{s, std::move(table)});
  }
  return out;
}

Behavior deterministic_behavior(const Scenario& s,
                                const std::function<int(int, const std::vector<int>&)>& outcome) {
  std::vector<std::vector<double>> table(s.setting_count(),
                                         std::vector<double>(s.outcome_count(), 0.0));
  for (int si = 0; si < s.setting_count(); ++si) {
    auto st = s.setting_tuple(si);
    int o = 0;
    for (int p = 0; p < s.parties; ++p) {
      const int v = outcome(p, st);
      if (v != 1 && v != -1) throw std::invalid_argument("outcomes must be +-1");
      o = (o << 1) | (v == 1 ? 0 : 1);
    }
    table[si][o] = 1.0;
  }
  return Behavior{s, std::move(table)};
}

std::vector<double> chsh_facets(const Behavior& b) {
  if (b.scenario.parties != 2 || b.scenario.settings != 2)
    throw std::invalid_argument("CHSH facets need the (2,2,2) scenario");
  const double e00 = expectation(b, {0, 0});
  const double e01 = expectation(b, {0, 1});
  const double e10 = expectation(b, {1, 0});
  const double e11 = expectation(b, {1, 1});
  std::vector<double> vals;
  for (int alpha = 0; alpha < 2; ++alpha)
    for (int beta = 0; beta < 2; ++beta)
      for (int gamma = 0; gamma < 2; ++gamma)
        vals.push_back(sgn_pow(gamma) * e00 + sgn_pow(beta + gamma) * e01 +
                       sgn_pow(alpha + gamma) * e10 + sgn_pow(alpha + beta + gamma + 1) * e11);
  return vals;
}

bool is_local_lp(const Behavior& b, std::int64_t max_vertices) {
  const Scenario s = b.scenario;
  std::int64_t vcount = 1;
  const int per_party = 1 << s.settings;
  for (int i = 0; i < s.parties; ++i) {
    vcount *= per_party;
    if (vcount > max_vertices) throw std::runtime_error("scenario exceeds vertex cap");
  }
  const auto vertices = local_deterministic_vertices(s);
  const int rows = s.setting_count() * s.outcome_count() + 1;
  const int cols = static_cast<int>(vertices.size());
  Eigen::MatrixXd a(rows, cols);
  Eigen::VectorXd rhs(rows);
  int r = 0;
  for (int si = 0; si < s.setting_count(); ++si)
    for (int o = 0; o < s.outcome_count(); ++o, ++r) {
      rhs(r) = b.table[si][o];
      for (int v = 0; v < cols; ++v) a(r, v) = vertices[v].table[si][o];
    }
  a.row(rows - 1).setOnes();
  rhs(rows - 1) = 1.0;
  return lp_feasible(a, rhs);
}

LocalVerdict is_local(const Behavior& b, std::int64_t max_vertices) {
  if (b.scenario.parties == 2 && b.scenario.settings == 2) {
    const auto ns = is_no_signaling(b, 1e-9);
    if (ns.no_signaling) {
      const auto facets = chsh_facets(b);
      double mx = 0;
      for (double v : facets) mx = std::max(mx, v);
      return {mx <= 2.0 + 1e-9, "chsh-facets", mx};
    }
  }
  return {is_local_lp(b, max_vertices), "lp", 0.0};
}

double NsInequality::evaluate(const Behavior& b) const {
  double v = 0;
  for (const auto& t : terms) {
    switch (t.kind) {
      case NsTermKind::product:
        v += t.coeff * expectation(b, {t.own, t.co});
        break;
      case NsTermKind::marginal_1:
        v += t.coeff * marginal_expectation(b, {0}, {t.own, t.co});
        break;
      case NsTermKind::marginal_2:
        v += t.coeff * marginal_expectation(b, {1}, {t.co, t.own});
        break;
    }
  }
  return v;
}

std::vector<NsInequality> ns_four_term_inequalities() {
  std::vector<NsInequality> out;
  // four structural families; in each, two product terms share one
  // fixed setting and the two marginals carry the co-setting openly
  struct Family {
    int prod1_a, prod1_b, prod2_a, prod2_b;
    NsTermKind marg;
    int m1_own, m1_co, m2_own, m2_co;
  };
  const Family fams[] = {
      {0, 0, 1, 0, NsTermKind::marginal_1, 0, 0, 1, 0},  // <AB>,<A'B>,<A>^B,<A'>^B
      {0, 0, 0, 1, NsTermKind::marginal_2, 0, 0, 1, 0},  // <AB>,<AB'>,<B>^A,<B'>^A
      {1, 1, 1, 0, NsTermKind::marginal_2, 0, 1, 1, 1},  // <A'B'>,<A'B>,<B>^A',<B'>^A'
      {1, 1, 0, 1, NsTermKind::marginal_1, 0, 1, 1, 1},  // <A'B'>,<AB'>,<A>^B',<A'>^B'
  };
  for (const auto& f : fams)
    for (int alpha = 0; alpha < 2; ++alpha)
      for (int beta = 0; beta < 2; ++beta)
        for (int gamma = 0; gamma < 2; ++gamma) {
          NsInequality iq;
          iq.terms.push_back({NsTermKind::product, f.prod1_a, f.prod1_b, sgn_pow(gamma)});
          iq.terms.push_back({NsTermKind::product, f.prod2_a, f.prod2_b, sgn_pow(beta + gamma)});
          iq.terms.push_back({f.marg, f.m1_own, f.m1_co, sgn_pow(alpha + gamma)});
          iq.terms.push_back({f.marg, f.m2_own, f.m2_co, sgn_pow(alpha + beta + gamma + 1)});
          out.push_back(std::move(iq));
        }
  return out;
}

std::vector<NsInequality> ns_six_term_inequalities() {
  std::vector<NsInequality> out;
  auto base = [](double c_ab, double c_apbp, double c_a_bp, double c_b_ap, double c_ap_b,
                 double c_bp_a) {
    NsInequality iq;
    iq.terms.push_back({NsTermKind::product, 0, 0, c_ab});        // <AB>
    iq.terms.push_back({NsTermKind::product, 1, 1, c_apbp});      // <A'B'>
    iq.terms.push_back({NsTermKind::marginal_1, 0, 1, c_a_bp});   // <A>^B'
    iq.terms.push_back({NsTermKind::marginal_2, 0, 1, c_b_ap});   // <B>^A'
    iq.terms.push_back({NsTermKind::marginal_1, 1, 0, c_ap_b});   // <A'>^B
    iq.terms.push_back({NsTermKind::marginal_2, 1, 0, c_bp_a});   // <B'>^A
    return iq;
  };
  for (int alpha = 0; alpha < 2; ++alpha)
    for (int beta = 0; beta < 2; ++beta) {
      if (alpha == 0 && beta == 0) continue;  // trivial, implied by positivity
      out.push_back(base(-1, -1, -sgn_pow(alpha), -sgn_pow(alpha), -sgn_pow(beta),
                         -sgn_pow(beta)));
    }
  for (int gamma = 0; gamma < 2; ++gamma)
    for (int delta = 0; delta < 2; ++delta)
      out.push_back(base(-sgn_pow(gamma), -sgn_pow(gamma + 1), -sgn_pow(1 + gamma * delta),
                         -sgn_pow(1 - gamma * (delta + 1)),
                         -sgn_pow((delta + 1) * (1 - gamma) + 1),
                         -sgn_pow(1 + delta * (1 - gamma))));
  // the other seven: interchange party 1's primed and unprimed settings
  const int first = static_cast<int>(out.size());
  for (int i = 0; i < first; ++i) {
    NsInequality iq = out[i];
    for (auto& t : iq.terms) {
      if (t.kind == NsTermKind::product || t.kind == NsTermKind::marginal_1)
        t.own = 1 - t.own;
      else
        t.co = 1 - t.co;  // party-2 marginal conditioned on party 1's setting
    }
    out.push_back(std::move(iq));
  }
  return out;
}

NsInequalityReport ns_nontrivial_inequalities(const Behavior& b) {
  NsInequalityReport rep;
  for (const auto& iq : ns_four_term_inequalities()) rep.four_term.push_back(iq.evaluate(b));
  for (const auto& iq : ns_six_term_inequalities()) rep.six_term.push_back(iq.evaluate(b));
  rep.max_value = 0;
  for (double v : rep.four_term) rep.max_value = std::max(rep.max_value, v);
  for (double v : rep.six_term) rep.max_value = std::max(rep.max_value, v);
  return rep;
}

bool roy_singh_check(const Behavior& b, double tol) {
  if (b.scenario.parties != 2) throw std::invalid_argument("Roy-Singh check is bi-partite");
  for (int i = 0; i < b.scenario.settings; ++i)
    for (int j = 0; j < b.scenario.settings; ++j) {
      const double e = expectation(b, {i, j});
      const double ma = marginal_expectation(b, {0}, {i, j});
      const double mb = marginal_expectation(b, {1}, {i, j});
      if (e < -1 + std::abs(ma + mb) - tol) return false;
      if (e > 1 - std::abs(ma - mb) + tol) return false;
    }
  return true;
}

Behavior signaling_protocol_four_term() {
  // joint outcomes: (+1,+1) when A is measured, (-1,-1) when A';
  // party 2's statistics depend on party 1's setting
  return deterministic_behavior(Scenario{2, 2}, [](int, const std::vector<int>& s) {
    return s[0] == 0 ? 1 : -1;
  });
}

Behavior signaling_protocol_six_term() {
  return deterministic_behavior(Scenario{2, 2}, [](int party, const std::vector<int>& s) {
    if (party == 1) return 1;
    return (s[0] == s[1]) ? -1 : 1;  // a_11 = a_22 = -1, a_12 = a_21 = +1
  });
}

SingletConstraintReport singlet_reproduction_constraints(const DirectionBehavior& family,
                                                         const std::vector<Vec3>& directions,
                                                         double tol) {
  SingletConstraintReport rep;
  rep.applicable = true;
  for (const auto& u : directions) {
    if (std::abs(family.corr(u, u) + 1.0) > tol) rep.applicable = false;
    if (std::abs(family.corr(u, Vec3(-u)) - 1.0) > tol) rep.applicable = false;
  }
  if (!rep.applicable) return rep;
  for (const auto& u : directions) {
    rep.max_sum_rule = std::max(rep.max_sum_rule, std::abs(family.m1(u) + family.m2(u)));
    rep.max_oddness = std::max(rep.max_oddness, std::abs(family.m1(Vec3(-u)) + family.m1(u)));
  }
  rep.satisfied = rep.max_sum_rule <= tol && rep.max_oddness <= tol;
  return rep;
}

DirectionBehavior quantum_singlet_family() {
  DirectionBehavior f;
  f.corr = [](const Vec3& u, const Vec3& v) { return -u.dot(v); };
  f.m1 = [](const Vec3&) { return 0.0; };
  f.m2 = [](const Vec3&) { return 0.0; };
  return f;
}

Behavior quantum_behavior(const DensityMatrix& rho,
                          const std::vector<std::vector<SpinDirection>>& settings) {
  const int n = rho.parties;
  if (static_cast<int>(settings.size()) != n)
    throw std::invalid_argument("need one setting list per party");
  const int m = static_cast<int>(settings[0].size());
  Scenario sc{n, m};
  std::vector<std::vector<double>> table(sc.setting_count(),
                                         std::vector<double>(sc.outcome_count()));
  for (int si = 0; si < sc.setting_count(); ++si) {
    auto st = sc.setting_tuple(si);
    for (int o = 0; o < sc.outcome_count(); ++o) {
      std::vector<CMat> projs;
      for (int p = 0; p < n; ++p) {
        const int bit = (o >> (n - 1 - p)) & 1;
        const double sign = bit == 0 ? 1.0 : -1.0;
        projs.push_back(0.5 * (id2() + sign * spin_op(settings[p][st[p]])));
      }
      table[si][o] = std::max(0.0, expectation(kron_all(projs), rho));
    }
  }
  return make_behavior(sc, std::move(table));
}

Behavior random_ns_behavior(std::mt19937_64& rng) {
  static const auto locals = local_deterministic_vertices(Scenario{2, 2});
  static const auto boxes = ns_extreme_points_222();
  std::exponential_distribution<double> expd(1.0);
  std::vector<double> w;
  double tot = 0;
  for (size_t i = 0; i < locals.size() + boxes.size(); ++i) {
    w.push_back(expd(rng));
    tot += w.back();
  }
  std::vector<std::vector<double>> table(4, std::vector<double>(4, 0.0));
  for (size_t v = 0; v < locals.size(); ++v)
    for (int si = 0; si < 4; ++si)
      for (int o = 0; o < 4; ++o) table[si][o] += w[v] / tot * locals[v].table[si][o];
  for (size_t v = 0; v < boxes.size(); ++v)
    for (int si = 0; si < 4; ++si)
      for (int o = 0; o < 4; ++o)
        table[si][o] += w[locals.size() + v] / tot * boxes[v].table[si][o];
  return make_behavior(Scenario{2, 2}, std::move(table));
}

Behavior random_behavior(const Scenario& s, std::mt19937_64& rng) {
  std::exponential_distribution<double> expd(1.0);
  std::vector<std::vector<double>> table(s.setting_count(),
                                         std::vector<double>(s.outcome_count()));
  for (auto& row : table) {
    double tot = 0;
    for (auto& p : row) {
      p = expd(rng);
      tot += p;
    }
    for (auto& p : row) p /= tot;
  }
  return make_behavior(s, std::move(table));
}

}  // namespace qcorr
