#include "qcorr/bellops.hpp"

#include <bit>
#include <cmath>

#include "qcorr/statelib.hpp"

namespace qcorr {

namespace {

int tuple_ones(int tuple, int n) {
  return std::popcount(static_cast<unsigned>(tuple) & ((1u << n) - 1));
}

}  // namespace

double BellPolynomial::absolute_max() const {
  double s = 0;
  for (double c : coeffs) s += std::abs(c);
  return s;
}

double BellPolynomial::evaluate(const std::vector<double>& e) const {
  if (e.size() != coeffs.size())
    throw std::invalid_argument("expectation vector has wrong size");
  double v = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * e[i];
  return v;
}

double BellPolynomial::evaluate(const Behavior& b) const {
  if (b.scenario.parties != parties || b.scenario.settings != 2)
    throw std::invalid_argument("behavior does not match polynomial scenario");
  double v = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0.0) continue;
    v += coeffs[i] * expectation(b, b.scenario.setting_tuple(static_cast<int>(i)));
  }
  return v;
}

BellPolynomial chsh() {
  BellPolynomial p;
  p.parties = 2;
  p.coeffs = {1, 1, 1, -1};
  return p;
}

static std::pair<BellPolynomial, BellPolynomial> mermin_pair(int n) {
  if (n < 2) throw std::invalid_argument("mermin needs n >= 2");
  BellPolynomial m = chsh();
  BellPolynomial mp;
  mp.parties = 2;
  mp.coeffs = {-1, 1, 1, 1};  // CHSH with primes swapped
  for (int k = 3; k <= n; ++k) {
    BellPolynomial m2, mp2;
    m2.parties = mp2.parties = k;
    m2.coeffs.assign(size_t{1} << k, 0.0);
    mp2.coeffs.assign(size_t{1} << k, 0.0);
    for (int t = 0; t < (1 << (k - 1)); ++t) {
      const double c = m.coeffs[t], cp = mp.coeffs[t];
      // M_k = (M_{k-1}(X + Y) + M'_{k-1}(X - Y)) / 2, X = unprimed bit 0
      m2.coeffs[(t << 1) | 0] += 0.5 * (c + cp);
      m2.coeffs[(t << 1) | 1] += 0.5 * (c - cp);
      mp2.coeffs[(t << 1) | 0] += 0.5 * (cp - c);
      mp2.coeffs[(t << 1) | 1] += 0.5 * (cp + c);
    }
    m = std::move(m2);
    mp = std::move(mp2);
  }
  return {m, mp};
}

BellPolynomial mermin(int n) { return mermin_pair(n).first; }
BellPolynomial mermin_primed(int n) { return mermin_pair(n).second; }

BellPolynomial svetlichny(int n, int sign) {
  if (n < 2) throw std::invalid_argument("svetlichny needs n >= 2");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  BellPolynomial p;
  p.parties = n;
  p.coeffs.assign(size_t{1} << n, 0.0);
  for (int tuple = 0; tuple < (1 << n); ++tuple) {
    const long long t = tuple_ones(tuple, n);
    const long long e = sign > 0 ? t * (t + 1) / 2 : t * (t - 1) / 2;
    p.coeffs[tuple] = (e % 2 == 0) ? 1.0 : -1.0;
  }
  return p;
}

double svetlichny_collins_factor(int n) {
  // Ratio of the hybrid-model bounds: 2^{n-1} here versus 2^{(n-1)/2}
  // (odd n) or 2^{(n-2)/2} (even n) in the Collins et al. normalization.
  return (n % 2 == 0) ? std::pow(2.0, n / 2.0) : std::pow(2.0, (n - 1) / 2.0);
}

CMat to_operator(const BellPolynomial& p, const std::vector<std::vector<CMat>>& observables) {
  if (static_cast<int>(observables.size()) != p.parties)
    throw std::invalid_argument("need one observable pair per party");
  Eigen::Index dim = 1;
  for (const auto& pair : observables) {
    if (pair.size() != 2) throw std::invalid_argument("each party needs two observables");
    dim *= pair[0].rows();
  }
  CMat out = CMat::Zero(dim, dim);
  for (int tuple = 0; tuple < (1 << p.parties); ++tuple) {
    if (p.coeffs[tuple] == 0.0) continue;
    std::vector<CMat> factors;
    for (int k = 0; k < p.parties; ++k)
      factors.push_back(observables[k][(tuple >> (p.parties - 1 - k)) & 1]);
    out += p.coeffs[tuple] * kron_all(factors);
  }
  return out;
}

BoundTable bounds(BellKind kind, int n) {
  BoundTable t;
  switch (kind) {
    case BellKind::chsh:
      t.local = 2;
      t.plhv = 2;
      t.quantum = 2 * std::sqrt(2.0);
      t.absolute = 4;
      break;
    case BellKind::mermin:
      t.local = 2;
      t.plhv = (n % 2 == 0) ? std::pow(2.0, n / 2.0) : std::pow(2.0, (n + 1) / 2.0);
      t.quantum = std::pow(2.0, (n + 1) / 2.0);
      t.absolute = mermin(n).absolute_max();
      break;
    case BellKind::svetlichny:
      t.local = std::nullopt;  // not reported; only the PLHV bound matters
      t.plhv = std::pow(2.0, n - 1);
      t.quantum = std::pow(2.0, n - 1) * std::sqrt(2.0);
      t.absolute = std::pow(2.0, n);
      break;
  }
  return t;
}

double local_bound_brute_force(const BellPolynomial& p) {
  const int n = p.parties;
  double best = 0;
  // per-party assignment: outcome for unprimed and primed setting
  const int total = 1 << (2 * n);
  for (int code = 0; code < total; ++code) {
    double v = 0;
    for (int tuple = 0; tuple < (1 << n); ++tuple) {
      if (p.coeffs[tuple] == 0.0) continue;
      int prod = 1;
      for (int k = 0; k < n; ++k) {
        const int setting = (tuple >> (n - 1 - k)) & 1;
        const int bit = (code >> (2 * k + setting)) & 1;
        prod *= bit ? -1 : 1;
      }
      v += p.coeffs[tuple] * prod;
    }
    best = std::max(best, std::abs(v));
  }
  return best;
}

double plhv_bound_brute_force(const BellPolynomial& p) {
  const int n = p.parties;
  if (n > 4) throw std::invalid_argument("PLHV brute force supported for n <= 4");
  double best = 0;
  // bipartitions with party 0 in the first block
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    const int block = (mask << 1) | 1;  // bit k = party (n-1-k) membership
    std::vector<int> in_a, in_b;
    for (int k = 0; k < n; ++k)
      ((block >> (n - 1 - k)) & 1 ? in_a : in_b).push_back(k);
    if (in_b.empty()) continue;
    const int sa = static_cast<int>(in_a.size()), sb = static_cast<int>(in_b.size());
    const int fa = 1 << (1 << sa);  // block response functions: settings -> +-1 product
    const int fb = 1 << (1 << sb);
    for (int ca = 0; ca < fa; ++ca)
      for (int cb = 0; cb < fb; ++cb) {
        double v = 0;
        for (int tuple = 0; tuple < (1 << n); ++tuple) {
          if (p.coeffs[tuple] == 0.0) continue;
          int ia = 0, ib = 0;
          for (size_t i = 0; i < in_a.size(); ++i)
            ia = (ia << 1) | ((tuple >> (n - 1 - in_a[i])) & 1);
          for (size_t i = 0; i < in_b.size(); ++i)
            ib = (ib << 1) | ((tuple >> (n - 1 - in_b[i])) & 1);
          const int ea = ((ca >> ia) & 1) ? -1 : 1;
          const int eb = ((cb >> ib) & 1) ? -1 : 1;
          v += p.coeffs[tuple] * ea * eb;
        }
        best = std::max(best, std::abs(v));
      }
  }
  return best;
}

CMat xy_observable(double angle) {
  return std::cos(angle) * pauli_x() + std::sin(angle) * pauli_y();
}

std::vector<std::vector<CMat>> xy_observables(const XyAngles& a) {
  std::vector<std::vector<CMat>> obs;
  for (size_t k = 0; k < a.unprimed.size(); ++k)
    obs.push_back({xy_observable(a.unprimed[k]), xy_observable(a.primed[k])});
  return obs;
}

XyAngles ghz_optimal_settings(int n, int sign) {
  const double s = sign > 0 ? M_PI / 4 : -M_PI / 4;
  XyAngles a;
  a.unprimed.assign(n, 0.0);
  a.primed.assign(n, M_PI / 2);
  a.unprimed[0] = s;
  a.primed[0] = s + M_PI / 2;
  a.ghz_phase = 0.0;
  return a;
}

XyAngles mermin_optimal_settings(int n) {
  // <prod_k A_k(angle_k)> on the phase-phi GHZ state is
  // cos(sum angles - phi); pick phi aligning every Mermin term.
  const BellPolynomial m = mermin(n);
  Complex zeta = 0;
  for (int tuple = 0; tuple < (1 << n); ++tuple) {
    if (m.coeffs[tuple] == 0.0) continue;
    zeta += m.coeffs[tuple] * std::pow(Complex(0, -1), tuple_ones(tuple, n));
  }
  XyAngles a;
  a.unprimed.assign(n, 0.0);
  a.primed.assign(n, M_PI / 2);
  a.ghz_phase = -std::arg(zeta);
  return a;
}

double horodecki_chsh_max(const DensityMatrix& rho) {
  if (rho.parties != 2) throw std::invalid_argument("two-qubit state required");
  Eigen::Matrix3d t;
  const CMat* sig[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t(i, j) = expectation(kron(*sig[i], *sig[j]), rho);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(t);
  const auto& s = svd.singularValues();
  return 2 * std::sqrt(s(0) * s(0) + s(1) * s(1));
}

std::vector<CMat> corr_of_corr_observables() {
  auto proj = [](const CVec& v) { return CMat(v * v.adjoint()); };
  auto ket2 = [](int i, int j) {
    CVec v = CVec::Zero(4);
    v(2 * i + j) = 1;
    return v;
  };
  const double r2 = std::sqrt(2.0);
  const CMat x = proj(bell_state(BellState::psi_plus)) + proj(bell_state(BellState::phi_plus)) -
                 proj(bell_state(BellState::psi_minus)) - proj(bell_state(BellState::phi_minus));
  const CMat xp = proj(ket2(0, 0)) + proj(ket2(0, 1)) - proj(ket2(1, 0)) - proj(ket2(1, 1));
  const double cp = 1.0 / std::sqrt(4 + 2 * r2);
  const double cm = 1.0 / std::sqrt(4 - 2 * r2);
  const CVec b_plus = cp * (ket2(0, 1) + (1 + r2) * ket2(1, 0));
  const CVec b_minus = cm * (ket2(0, 1) + (1 - r2) * ket2(1, 0));
  const CVec bp_plus = cm * (ket2(0, 1) + (-1 + r2) * ket2(1, 0));
  const CVec bp_minus = cp * (ket2(0, 1) + (-1 - r2) * ket2(1, 0));
  const CMat y = proj(ket2(0, 0)) + proj(b_plus) - proj(b_minus) - proj(ket2(1, 1));
  const CMat yp = proj(ket2(1, 1)) + proj(bp_plus) - proj(bp_minus) - proj(ket2(0, 0));
  return {x, xp, y, yp};
}

CorrOfCorrResult corr_of_corr_test() {
  const auto obs = corr_of_corr_observables();
  const CMat& x = obs[0];
  const CMat& xp = obs[1];
  const CMat& y = obs[2];
  const CMat& yp = obs[3];
  CorrOfCorrResult res;
  res.observables_square_to_identity = true;
  for (const auto& o : obs)
    if ((o * o - identity(4)).cwiseAbs().maxCoeff() > 1e-10)
      res.observables_square_to_identity = false;
  const CMat bell = kron(x, y) + kron(x, yp) + kron(xp, y) - kron(xp, yp);
  const CVec psi = psi_corr();
  res.bell_value = std::abs(expectation(bell, psi));
  res.max_eigenvalue = max_eigenvalue(bell);
  return res;
}

}  // namespace qcorr
