#include "qcorr/sepcrit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcorr/bellops.hpp"
#include "qcorr/statelib.hpp"

namespace qcorr {

namespace {

struct PairData {
  double offdiag_sq;  // <X_x>^2 + <Y_x>^2
  double diag_prod;   // <I_x>^2 - <Z_x>^2
};

std::vector<PairData> family_data(const DensityMatrix& rho, const LooFamily& family) {
  std::vector<PairData> out(family.quadruples.size());
  for (size_t x = 0; x < family.quadruples.size(); ++x) {
    const auto& q = family.quadruples[x];
    const double ex = expectation(q.x, rho);
    const double ey = expectation(q.y, rho);
    const double ei = expectation(q.i, rho);
    const double ez = expectation(q.z, rho);
    out[x] = {ex * ex + ey * ey, ei * ei - ez * ez};
  }
  return out;
}

std::vector<PairData> element_data(const DensityMatrix& rho) {
  const int n = rho.parties;
  const int d = 1 << n;
  std::vector<PairData> out(d / 2);
  for (int x = 0; x < d / 2; ++x) {
    const int j = loo_pair_index(x, n);
    const double off = std::abs(rho.mat(j, d - 1 - j));
    out[x] = {4 * off * off, 4 * rho.mat(j, j).real() * rho.mat(d - 1 - j, d - 1 - j).real()};
  }
  return out;
}

CriterionVerdict set_verdict(const std::string& name, const std::vector<PairData>& data,
                             const std::vector<int>& labels, double cap) {
  double lhs = 0, rhs_state = std::numeric_limits<double>::infinity();
  for (int x : labels) {
    lhs = std::max(lhs, data[x].offdiag_sq);
    rhs_state = std::min(rhs_state, data[x].diag_prod);
  }
  return CriterionVerdict::make(name, lhs, std::min(rhs_state, cap), cap);
}

// min over tuples of sum_y sqrt(<I_y>^2-<Z_y>^2): one y per solution
// set containing x, so the minimum factorizes over the sets.
double ksep_tuple_min(const std::vector<PairData>& data, int n, int k, int x) {
  double total = 0;
  for (const auto& split : all_splits(n, k)) {
    for (const auto& zs : solution_sets(split, n)) {
      if (std::find(zs.begin(), zs.end(), x) == zs.end()) continue;
      double best = std::numeric_limits<double>::infinity();
      for (int y : zs)
        if (y != x) best = std::min(best, std::sqrt(std::max(0.0, data[y].diag_prod)));
      total += best;
      break;
    }
  }
  return total;
}

CriterionVerdict ksep_verdict(const std::vector<PairData>& data, int n, int k) {
  const double cap = std::pow(0.25, k - 1);
  CriterionVerdict best;
  bool first = true;
  for (int x = 0; x < (1 << (n - 1)); ++x) {
    const double lhs = std::sqrt(std::max(0.0, data[x].offdiag_sq));
    const double rhs = std::min(ksep_tuple_min(data, n, k, x), std::sqrt(cap));
    auto v = CriterionVerdict::make("k-sep k=" + std::to_string(k), lhs, rhs, std::sqrt(cap));
    if (first || v.margin > best.margin) {
      best = v;
      first = false;
    }
  }
  return best;
}

}  // namespace

LooFamily loo_family(int n, const std::vector<OrthonormalTriple>& triples) {
  if (n < 1) throw std::invalid_argument("loo_family needs n >= 1");
  if (static_cast<int>(triples.size()) != n)
    throw std::invalid_argument("need one triple per qubit");
  // base level: one qubit, single "quadruple" (X, Y, Z, 1)
  LooFamily fam;
  fam.n = 1;
  fam.quadruples = {{spin_op(triples[n - 1].x), spin_op(triples[n - 1].y),
                     spin_op(triples[n - 1].z), id2()}};
  for (int level = 2; level <= n; ++level) {
    const OrthonormalTriple& t = triples[n - level];
    const CMat x1 = spin_op(t.x), y1 = spin_op(t.y), z1 = spin_op(t.z);
    LooFamily next;
    next.n = level;
    next.quadruples.resize(size_t{1} << (level - 1));
    for (size_t m = 0; m < fam.quadruples.size(); ++m) {
      const auto& q = fam.quadruples[m];
      auto& even = next.quadruples[2 * m];
      auto& odd = next.quadruples[2 * m + 1];
      even.x = 0.5 * (kron(x1, q.x) - kron(y1, q.y));
      odd.x = 0.5 * (kron(x1, q.x) + kron(y1, q.y));
      even.y = 0.5 * (kron(y1, q.x) + kron(x1, q.y));
      odd.y = 0.5 * (kron(y1, q.x) - kron(x1, q.y));
      even.z = 0.5 * (kron(z1, q.i) + kron(id2(), q.z));
      odd.z = 0.5 * (kron(z1, q.i) - kron(id2(), q.z));
      even.i = 0.5 * (kron(id2(), q.i) + kron(z1, q.z));
      odd.i = 0.5 * (kron(id2(), q.i) - kron(z1, q.z));
    }
    fam = std::move(next);
  }
  for (const auto& t : triples)
    fam.singles.push_back({spin_op(t.x), spin_op(t.y), spin_op(t.z)});
  return fam;
}

LooFamily loo_family_pauli(int n) {
  return loo_family(n, std::vector<OrthonormalTriple>(n, OrthonormalTriple::pauli()));
}

std::vector<int> loo_pair_bits(int x, int n) {
  if (n == 1) return {0};
  std::vector<int> rest = loo_pair_bits(x / 2, n - 1);
  if (x % 2 == 1)
    for (int& b : rest) b = 1 - b;
  rest.insert(rest.begin(), 0);
  return rest;
}

int loo_label_of_bits(std::vector<int> bits) {
  if (bits[0] == 1)
    for (int& b : bits) b = 1 - b;
  if (bits.size() == 1) return 0;
  std::vector<int> rest(bits.begin() + 1, bits.end());
  const bool flip = rest[0] == 1;
  if (flip)
    for (int& b : rest) b = 1 - b;
  return 2 * loo_label_of_bits(std::move(rest)) + (flip ? 1 : 0);
}

int loo_pair_index(int x, int n) {
  int idx = 0;
  for (int b : loo_pair_bits(x, n)) idx = (idx << 1) | b;
  return idx;
}

int loo_label_of_pair_index(int j, int n) {
  std::vector<int> bits(n);
  for (int q = 0; q < n; ++q) bits[q] = (j >> (n - 1 - q)) & 1;
  return loo_label_of_bits(std::move(bits));
}

int Split::n_parties() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

Split Split::bipartition(const std::vector<int>& first_block, int n) {
  std::vector<bool> in(n, false);
  for (int q : first_block) in[q] = true;
  Split s;
  s.blocks.resize(2);
  for (int q = 0; q < n; ++q) s.blocks[in[q] ? 0 : 1].push_back(q);
  if (s.blocks[0].empty() || s.blocks[1].empty())
    throw std::invalid_argument("bipartition blocks must be nonempty");
  return s;
}

std::string Split::to_string() const {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += "-";
    out += "(";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(b[i]);
    }
    out += ")";
  }
  return out;
}

std::vector<Split> all_splits(int n, int k) {
  // restricted growth strings with exactly k blocks
  std::vector<Split> out;
  std::vector<int> assign(n, 0);
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      if (used != k) return;
      Split s;
      s.blocks.resize(k);
      for (int q = 0; q < n; ++q) s.blocks[assign[q]].push_back(q);
      out.push_back(std::move(s));
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      assign[pos] = b;
      self(self, pos + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Split> all_bipartitions(int n) { return all_splits(n, 2); }

std::vector<std::vector<int>> solution_sets(const Split& split, int n) {
  if (split.n_parties() != n) throw std::invalid_argument("split does not cover the parties");
  const int count = 1 << (n - 1);
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int x = 0; x < count; ++x) {
    const auto bits = loo_pair_bits(x, n);
    for (const auto& block : split.blocks) {
      auto flipped = bits;
      for (int q : block) flipped[q] = 1 - flipped[q];
      const int y = loo_label_of_bits(std::move(flipped));
      const int ra = find(x), rb = find(y);
      if (ra != rb) parent[ra] = rb;
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < count; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CriterionVerdict CriterionVerdict::make(std::string name, double lhs, double rhs, double bound,
                                        double tol) {
  CriterionVerdict v;
  v.criterion = std::move(name);
  v.lhs = lhs;
  v.rhs = rhs;
  v.bound = bound;
  v.margin = lhs - rhs;
  v.violated = lhs > rhs + tol;
  return v;
}

CriterionVerdict two_qubit_criterion(const DensityMatrix& rho, const LooFamily& family) {
  const auto data = family_data(rho, family);
  return set_verdict("two-qubit", data, {0, 1}, 0.25);
}

CriterionVerdict two_qubit_criterion(const DensityMatrix& rho) {
  return two_qubit_criterion(rho, loo_family_pauli(2));
}

std::vector<CriterionVerdict> split_criterion(const DensityMatrix& rho, const Split& split,
                                              const LooFamily& family) {
  const auto data = family_data(rho, family);
  const double cap = std::pow(0.25, split.k() - 1);
  std::vector<CriterionVerdict> out;
  for (const auto& zs : solution_sets(split, rho.parties))
    out.push_back(set_verdict("split " + split.to_string(), data, zs, cap));
  return out;
}

CriterionVerdict k_sep_criterion(const DensityMatrix& rho, int k, const LooFamily& family) {
  return ksep_verdict(family_data(rho, family), rho.parties, k);
}

CriterionVerdict two_qubit_criterion_elements(const DensityMatrix& rho) {
  return set_verdict("two-qubit elements", element_data(rho), {0, 1}, 0.25);
}

std::vector<CriterionVerdict> split_criterion_elements(const DensityMatrix& rho,
                                                       const Split& split) {
  const auto data = element_data(rho);
  const double cap = std::pow(0.25, split.k() - 1);
  std::vector<CriterionVerdict> out;
  for (const auto& zs : solution_sets(split, rho.parties))
    out.push_back(set_verdict("split " + split.to_string(), data, zs, cap));
  return out;
}

CriterionVerdict k_sep_criterion_elements(const DensityMatrix& rho, int k) {
  return ksep_verdict(element_data(rho), rho.parties, k);
}

CriterionVerdict laskowski_zukowski(const DensityMatrix& rho, int k) {
  const int d = rho.dim();
  double mx = 0;
  for (int j = 0; j < d / 2; ++j) mx = std::max(mx, std::abs(rho.mat(j, d - 1 - j)));
  return CriterionVerdict::make("laskowski-zukowski k=" + std::to_string(k), mx,
                                std::pow(0.5, k), std::pow(0.5, k));
}

CriterionVerdict fidelity_criterion(const DensityMatrix& rho) {
  return CriterionVerdict::make("fidelity", ghz_fidelity(rho), 0.5, 0.5);
}

DurCiracResult dur_cirac(const DensityMatrix& rho, int split_label) {
  const int n = rho.parties;
  const int half = 1 << (n - 1);
  if (split_label < 1 || split_label >= half)
    throw std::invalid_argument("split label out of range");
  DurCiracResult res;
  const CVec p0 = ghz_basis_state(n, 0, +1), m0 = ghz_basis_state(n, 0, -1);
  res.lambda0_plus = expectation(CMat(p0 * p0.adjoint()), rho);
  res.lambda0_minus = expectation(CMat(m0 * m0.adjoint()), rho);
  res.lambda.assign(half, 0.0);
  for (int j = 1; j < half; ++j) {
    const CVec vp = ghz_basis_state(n, j, +1), vm = ghz_basis_state(n, j, -1);
    res.lambda[j] =
        0.5 * (expectation(CMat(vp * vp.adjoint()), rho) + expectation(CMat(vm * vm.adjoint()), rho));
  }
  res.verdict = CriterionVerdict::make("dur-cirac j=" + std::to_string(split_label),
                                       std::abs(res.lambda0_plus - res.lambda0_minus),
                                       2 * res.lambda[split_label], 0.0);
  return res;
}

int dur_cirac_label(const Split& split, int n) {
  if (split.k() != 2) throw std::invalid_argument("Dur-Cirac labels are for bipartitions");
  std::vector<bool> with_last(n, false);
  for (const auto& block : split.blocks)
    if (std::find(block.begin(), block.end(), n - 1) != block.end())
      for (int q : block) with_last[q] = true;
  int label = 0;
  for (int q = 0; q < n - 1; ++q) label = (label << 1) | (with_last[q] ? 0 : 1);
  return label;
}

MerminKsepVerdict mermin_ksep(double m, double mp, int n, int k) {
  MerminKsepVerdict v;
  const double qbound = std::pow(2.0, n + 3) * std::pow(0.25, k);
  v.quadratic =
      CriterionVerdict::make("mermin quadratic k=" + std::to_string(k), m * m + mp * mp, qbound,
                             qbound);
  const double lbound = std::pow(2.0, (n + 3) / 2.0) * std::pow(0.5, k);
  v.linear = CriterionVerdict::make("mermin linear k=" + std::to_string(k), std::abs(m), lbound,
                                    lbound);
  return v;
}

MerminKsepVerdict mermin_ksep(const DensityMatrix& rho, const LooFamily& family, int k) {
  const int n = rho.parties;
  std::vector<std::vector<CMat>> obs;
  for (int q = 0; q < n; ++q) obs.push_back({family.singles[q][0], family.singles[q][1]});
  const double m = expectation(to_operator(mermin(n), obs), rho);
  const double mp = expectation(to_operator(mermin_primed(n), obs), rho);
  return mermin_ksep(m, mp, n, k);
}

double family_threshold(const std::function<bool(double)>& detected_at, double tol) {
  if (!detected_at(0.0)) return 0.0;
  if (detected_at(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (detected_at(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double noise_robustness(const DensityMatrix& rho, RobustnessKind kind,
                        const std::optional<Split>& split, double tol) {
  const int n = rho.parties;
  auto detected = [&](double p) {
    const DensityMatrix noisy = mix_white(rho, p);
    switch (kind) {
      case RobustnessKind::full_ent:
        return k_sep_criterion_elements(noisy, 2).violated;
      case RobustnessKind::some_ent:
        return k_sep_criterion_elements(noisy, n).violated;
      case RobustnessKind::split: {
        if (!split) throw std::invalid_argument("split robustness needs a split");
        for (const auto& v : split_criterion_elements(noisy, *split))
          if (v.violated) return true;
        return false;
      }
      case RobustnessKind::all_splits: {
        for (const auto& s : all_bipartitions(n)) {
          bool any = false;
          for (const auto& v : split_criterion_elements(noisy, s))
            if (v.violated) any = true;
          if (!any) return false;
        }
        return true;
      }
    }
    return false;
  };
  return family_threshold(detected, tol);
}

SettingsConstruction settings_construction(int n, int target_pair_index) {
  SettingsConstruction sc;
  for (int l = 1; l <= n; ++l) {
    const double a = l * M_PI / n;
    const double b = (l * M_PI + M_PI / 2) / n;
    const CMat ma = std::cos(a) * pauli_x() + std::sin(a) * pauli_y();
    const CMat mb = std::cos(b) * pauli_x() + std::sin(b) * pauli_y();
    sc.real_settings.push_back(kron_all(std::vector<CMat>(n, ma)));
    sc.imaginary_settings.push_back(kron_all(std::vector<CMat>(n, mb)));
  }
  std::vector<CMat> u;
  for (int q = 0; q < n; ++q)
    u.push_back(((target_pair_index >> (n - 1 - q)) & 1) ? pauli_x() : id2());
  sc.unitary = kron_all(u);
  if (target_pair_index != 0) {
    for (auto& m : sc.real_settings) m = sc.unitary * m * sc.unitary.adjoint();
    for (auto& m : sc.imaginary_settings) m = sc.unitary * m * sc.unitary.adjoint();
  }
  return sc;
}

ClassifyReport classify(const DensityMatrix& rho, const LooFamily& family) {
  const int n = rho.parties;
  ClassifyReport rep;
  for (int k = 2; k <= n; ++k) {
    ClassifyReport::Level level;
    level.k = k;
    level.simpliciter = k_sep_criterion(rho, k, family);
    for (const auto& s : all_splits(n, k)) {
      bool excluded = false;
      for (const auto& v : split_criterion(rho, s, family))
        if (v.violated) excluded = true;
      level.split_excluded.emplace_back(s, excluded);
    }
    if (k == 2 && level.simpliciter.violated) rep.fully_entangled_certified = true;
    if (k == n && level.simpliciter.violated) rep.some_entanglement_certified = true;
    rep.levels.push_back(std::move(level));
  }
  return rep;
}

}  // namespace qcorr
