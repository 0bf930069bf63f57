#include "qcorr/monogamy.hpp"

#include <cmath>

#include "qcorr/statelib.hpp"

namespace qcorr {

namespace {

CMat xz(double angle) { return std::cos(angle) * pauli_z() + std::sin(angle) * pauli_x(); }

CMat chsh_pair_operator(const CMat& a0, const CMat& a1, const CMat& b0, const CMat& b1,
                        int pa, int pb, int n) {
  auto e = [&](const CMat& op, int q) { return embed(op, q, n); };
  return e(a0, pa) * e(b0, pb) + e(a0, pa) * e(b1, pb) + e(a1, pa) * e(b0, pb) -
         e(a1, pa) * e(b1, pb);
}

}  // namespace

CMat SharedSettingChshPair::obs(double angle) const { return xz(angle); }

std::pair<double, double> tv_values(const DensityMatrix& rho3,
                                    const SharedSettingChshPair& p) {
  const CMat bab = chsh_pair_operator(xz(p.a0), xz(p.a1), xz(p.b0), xz(p.b1), 0, 1, 3);
  const CMat bac = chsh_pair_operator(xz(p.a0), xz(p.a1), xz(p.c0), xz(p.c1), 0, 2, 3);
  return {expectation(bab, rho3), expectation(bac, rho3)};
}

MonogamyVerdict tv_monogamy(const DensityMatrix& rho3, const SharedSettingChshPair& pair) {
  const auto [ab, ac] = tv_values(rho3, pair);
  MonogamyVerdict v;
  v.lhs = ab * ab + ac * ac;
  v.rhs = 8.0;
  v.satisfied = v.lhs <= v.rhs + 1e-8;
  return v;
}

MonogamyVerdict tv_strengthened(const DensityMatrix& rho3, const SharedSettingChshPair& pair) {
  const auto [ab, ac] = tv_values(rho3, pair);
  const double sy = expectation(embed(pauli_y(), 0, 3), rho3);
  MonogamyVerdict v;
  v.lhs = ab * ab + ac * ac;
  v.rhs = 8.0 * (1 - sy * sy);
  v.satisfied = v.lhs <= v.rhs + 1e-8;
  return v;
}

NsMonogamyVerdict ns_monogamy(const Behavior& b, double tol) {
  if (b.scenario.parties != 3 || b.scenario.settings != 2)
    throw std::invalid_argument("ns_monogamy needs a (3,2,2) behavior");
  NsMonogamyVerdict v;
  v.no_signaling = is_no_signaling(b, tol).no_signaling;
  auto corr = [&](int other, int i, int j) {
    // two-party correlation with the remaining party's setting at 0
    std::vector<int> s(3, 0);
    s[0] = i;
    s[other] = j;
    return marginal_expectation(b, {0, other}, s);
  };
  auto chsh_val = [&](int other) {
    return corr(other, 0, 0) + corr(other, 0, 1) + corr(other, 1, 0) - corr(other, 1, 1);
  };
  v.b_ab = chsh_val(1);
  v.b_ac = chsh_val(2);
  v.satisfied = std::abs(v.b_ab) + std::abs(v.b_ac) <= 4 + 1e-9;
  return v;
}

Behavior pr_box_with_bystander() {
  const Behavior pr = pr_box();
  Scenario sc{3, 2};
  std::vector<std::vector<double>> table(sc.setting_count(),
                                         std::vector<double>(sc.outcome_count(), 0.0));
  for (int si = 0; si < sc.setting_count(); ++si) {
    const auto st = sc.setting_tuple(si);
    for (int o = 0; o < sc.outcome_count(); ++o) {
      const int ab = o >> 1;       // parties a, b
      const int c = o & 1;
      table[si][o] = pr.table[2 * st[0] + st[1]][ab] * 0.5;
      (void)c;
    }
  }
  return make_behavior(sc, std::move(table));
}

Behavior signaling_double_chsh() {
  // a = +1 always; b and c copy the setting-product parities needed to
  // max out both CHSH expressions, which requires b, c to see A.
  return deterministic_behavior(Scenario{3, 2}, [](int party, const std::vector<int>& s) {
    if (party == 0) return 1;
    if (party == 1) return (s[0] & s[1]) ? -1 : 1;
    return (s[0] & s[2]) ? -1 : 1;
  });
}

CMat d3_operator(int i, const std::vector<std::vector<CMat>>& obs) {
  if (obs.size() != 3) throw std::invalid_argument("three observable pairs required");
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  auto e = [&](const CMat& op, int q) { return embed(op, q, 3); };
  const CMat b2 = 0.5 * (e(obs[j][0], j) * e(obs[k][0], k) + e(obs[j][0], j) * e(obs[k][1], k) +
                         e(obs[j][1], j) * e(obs[k][0], k) - e(obs[j][1], j) * e(obs[k][1], k));
  return b2 * e(0.5 * (obs[i][0] + obs[i][1]), i) + e(0.5 * (obs[i][0] - obs[i][1]), i);
}

D3Bounds d3_bounds() {
  D3Bounds b;
  b.all_states = std::sqrt(2.0);
  b.fully_separable = 1.0;
  b.bisep_same = std::sqrt(2.0);
  b.bisep_other = 1.0;
  b.pairwise_quadratic = 2.5;
  b.sphere = 3.0;
  b.orth_all_states = std::sqrt(1.5);
  b.orth_fully_separable = std::sqrt(0.75);
  b.orth_pairwise = 2.0;
  return b;
}

double d3_w_state_value(int i, double alpha, double beta) {
  std::vector<std::vector<CMat>> obs(3, {xz(alpha), xz(beta)});
  const CVec w = w_state();
  return expectation(d3_operator(i, obs), DensityMatrix::from_pure(w, 3));
}

namespace {

SharedSettingChshPair random_pair(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
  return {ang(rng), ang(rng), ang(rng), ang(rng), ang(rng), ang(rng)};
}

}  // namespace

AuditReport audit_tv(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AuditReport rep;
  rep.bound = 8.0;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = DensityMatrix::from_pure(random_pure_state(8, rng), 3);
    const auto v = tv_monogamy(rho, random_pair(rng));
    rep.max_observed = std::max(rep.max_observed, v.lhs);
  }
  rep.satisfied = rep.max_observed <= rep.bound + 1e-8;
  return rep;
}

AuditReport audit_tv_strengthened(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AuditReport rep;
  rep.bound = 0.0;  // per-sample bound; max_observed tracks lhs - rhs
  rep.samples = samples;
  double worst = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = DensityMatrix::from_pure(random_pure_state(8, rng), 3);
    const auto v = tv_strengthened(rho, random_pair(rng));
    worst = std::max(worst, v.lhs - v.rhs);
  }
  rep.max_observed = worst;
  rep.satisfied = worst <= 1e-8;
  return rep;
}

AuditReport audit_ns(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AuditReport rep;
  rep.bound = 4.0;
  rep.samples = samples;
  std::uniform_int_distribution<int> pick(0, 3);
  std::exponential_distribution<double> expd(1.0);
  const auto boxes = ns_extreme_points_222();
  std::uniform_int_distribution<int> box_pick(0, static_cast<int>(boxes.size()) - 1);
  Scenario sc{3, 2};
  for (int s = 0; s < samples; ++s) {
    // mixture of: local deterministic points and a PR-type box on one
    // pair with an unbiased coin for the remaining party
    const int terms = 3;
    std::vector<double> w(terms);
    double tot = 0;
    for (auto& x : w) tot += (x = expd(rng));
    std::vector<std::vector<double>> table(sc.setting_count(),
                                           std::vector<double>(sc.outcome_count(), 0.0));
    for (int t = 0; t < terms; ++t) {
      const double weight = w[t] / tot;
      if (pick(rng) == 0) {
        // deterministic local point
        std::uniform_int_distribution<int> bit(0, 1);
        std::vector<std::array<int, 2>> fn(3);
        for (auto& f : fn) f = {bit(rng), bit(rng)};
        for (int si = 0; si < sc.setting_count(); ++si) {
          const auto st = sc.setting_tuple(si);
          int o = 0;
          for (int p = 0; p < 3; ++p) o = (o << 1) | fn[p][st[p]];
          table[si][o] += weight;
        }
      } else {
        // box between one pair, coin elsewhere
        const Behavior& box = boxes[box_pick(rng)];
        std::uniform_int_distribution<int> lone_pick(0, 2);
        const int lone = lone_pick(rng);
        const int pa = lone == 0 ? 1 : 0;
        const int pb = lone == 2 ? 1 : 2;
        for (int si = 0; si < sc.setting_count(); ++si) {
          const auto st = sc.setting_tuple(si);
          for (int o = 0; o < sc.outcome_count(); ++o) {
            const int oa = (o >> (2 - pa)) & 1, ob = (o >> (2 - pb)) & 1;
            table[si][o] += weight * 0.5 * box.table[2 * st[pa] + st[pb]][2 * oa + ob];
          }
        }
      }
    }
    const Behavior b = make_behavior(sc, std::move(table));
    const auto v = ns_monogamy(b);
    rep.max_observed = std::max(rep.max_observed, std::abs(v.b_ab) + std::abs(v.b_ac));
  }
  rep.satisfied = rep.max_observed <= rep.bound + 1e-9;
  return rep;
}

AuditReport audit_d3_pairwise(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
  AuditReport rep;
  rep.bound = 2.5;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = DensityMatrix::from_pure(random_pure_state(8, rng), 3);
    std::vector<std::vector<CMat>> obs;
    for (int q = 0; q < 3; ++q) obs.push_back({xz(ang(rng)), xz(ang(rng))});
    const int i = static_cast<int>(s % 3);
    const double v1 = expectation(d3_operator(i, obs), rho);
    const double v2 = expectation(d3_operator((i + 1) % 3, obs), rho);
    rep.max_observed = std::max(rep.max_observed, v1 * v1 + v2 * v2);
  }
  rep.satisfied = rep.max_observed <= rep.bound + 1e-8;
  return rep;
}

double d3_search(const DensityMatrix& rho3, int i, int restarts, std::uint64_t seed,
                 bool orthogonal) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
  auto value = [&](double alpha, double beta) {
    const double b = orthogonal ? alpha + M_PI / 2 : beta;
    std::vector<std::vector<CMat>> obs(3, {xz(alpha), xz(b)});
    return std::abs(expectation(d3_operator(i, obs), rho3));
  };
  double best = 0;
  for (int r = 0; r < restarts; ++r) {
    double a = ang(rng), b = ang(rng);
    double step = 0.5, v = value(a, b);
    while (step > 1e-6) {
      bool improved = false;
      for (double da : {-step, 0.0, step})
        for (double db : {-step, 0.0, step}) {
          if (da == 0 && db == 0) continue;
          const double cand = value(a + da, b + db);
          if (cand > v) {
            v = cand;
            a += da;
            b += db;
            improved = true;
          }
        }
      if (!improved) step *= 0.5;
    }
    best = std::max(best, v);
  }
  return best;
}

}  // namespace qcorr
