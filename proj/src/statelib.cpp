#include "qcorr/statelib.hpp"

#include <bit>
#include <cmath>

namespace qcorr {

namespace {

CVec basis_ket(int dim, int idx) {
  CVec v = CVec::Zero(dim);
  v(idx) = 1.0;
  return v;
}

int bits_to_index(const std::vector<int>& bits) {
  int idx = 0;
  for (int b : bits) idx = (idx << 1) | b;
  return idx;
}

}  // namespace

CVec bell_state(BellState which) {
  CVec v = CVec::Zero(4);
  const double r = 1.0 / std::sqrt(2.0);
  switch (which) {
    case BellState::psi_plus: v(1) = r; v(2) = r; break;
    case BellState::psi_minus: v(1) = r; v(2) = -r; break;
    case BellState::phi_plus: v(0) = r; v(3) = r; break;
    case BellState::phi_minus: v(0) = r; v(3) = -r; break;
  }
  return v;
}

CVec ghz(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("ghz needs n >= 1");
  const int d = 1 << n;
  CVec v = CVec::Zero(d);
  v(0) = 1.0 / std::sqrt(2.0);
  v(d - 1) = std::polar(1.0 / std::sqrt(2.0), alpha);
  return v;
}

CVec generalized_ghz(int n, double alpha) {
  const int d = 1 << n;
  CVec v = CVec::Zero(d);
  v(0) = std::cos(alpha);
  v(d - 1) = std::sin(alpha);
  return v;
}

CVec w_state() {
  CVec v = CVec::Zero(8);
  const double r = 1.0 / std::sqrt(3.0);
  v(bits_to_index({0, 0, 1})) = r;
  v(bits_to_index({0, 1, 0})) = r;
  v(bits_to_index({1, 0, 0})) = r;
  return v;
}

CVec dicke(int l, int n) {
  if (l < 0 || l > n) throw std::invalid_argument("dicke needs 0 <= l <= n");
  const int d = 1 << n;
  CVec v = CVec::Zero(d);
  int count = 0;
  for (int idx = 0; idx < d; ++idx) {
    if (std::popcount(static_cast<unsigned>(idx)) == l) {
      v(idx) = 1.0;
      ++count;
    }
  }
  return v / std::sqrt(static_cast<double>(count));
}

CMat uniform_local_unitary(const CMat& u, int n) {
  return kron_all(std::vector<CMat>(n, u));
}

CMat rot_x(double angle) {
  return std::cos(angle / 2) * id2() - Complex(0, 1) * std::sin(angle / 2) * pauli_x();
}

DensityMatrix mix_white(const DensityMatrix& rho, double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("noise fraction must be in [0,1]");
  const int d = rho.dim();
  return DensityMatrix((1 - p) * rho.mat + p * identity(d) / d, rho.parties);
}

DensityMatrix noisy_ghz(int n, NoiseChannel channel, double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("noise fraction must be in [0,1]");
  const int d = 1 << n;
  const CVec g = ghz(n, 0.0);
  const CMat pure = g * g.adjoint();
  CMat zero = CMat::Zero(2, 2), one = CMat::Zero(2, 2), up = CMat::Zero(2, 2),
       dn = CMat::Zero(2, 2);
  zero(0, 0) = 1;
  one(1, 1) = 1;
  up(0, 1) = 1;  // |0><1|
  dn(1, 0) = 1;  // |1><0|
  switch (channel) {
    case NoiseChannel::white:
      return DensityMatrix((1 - p) * pure + p * identity(d) / d, n);
    case NoiseChannel::colored: {
      CMat m = (1 - p) * pure;
      m(0, 0) += p / 2;
      m(d - 1, d - 1) += p / 2;
      return DensityMatrix(std::move(m), n);
    }
    case NoiseChannel::depolarize: {
      CMat a = (1 - p / 2) * zero + (p / 2) * one;
      CMat b = (p / 2) * zero + (1 - p / 2) * one;
      CMat m = 0.5 * (kron_all(std::vector<CMat>(n, a)) + kron_all(std::vector<CMat>(n, b)) +
                      std::pow(1 - p, n) * (kron_all(std::vector<CMat>(n, up)) +
                                            kron_all(std::vector<CMat>(n, dn))));
      return DensityMatrix(std::move(m), n);
    }
    case NoiseChannel::dephase: {
      CMat m = 0.5 * (kron_all(std::vector<CMat>(n, zero)) + kron_all(std::vector<CMat>(n, one)) +
                      std::pow(1 - p, n) * (kron_all(std::vector<CMat>(n, up)) +
                                            kron_all(std::vector<CMat>(n, dn))));
      return DensityMatrix(std::move(m), n);
    }
    case NoiseChannel::dissipate: {
      CMat damped = p * zero + (1 - p) * one;
      CMat m = 0.5 * (kron_all(std::vector<CMat>(n, zero)) +
                      kron_all(std::vector<CMat>(n, damped)) +
                      std::pow(1 - p, n / 2.0) * (kron_all(std::vector<CMat>(n, up)) +
                                                  kron_all(std::vector<CMat>(n, dn))));
      return DensityMatrix(std::move(m), n);
    }
  }
  throw std::logic_error("unreachable");
}

DensityMatrix werner(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("singlet fraction must be in [0,1]");
  const CVec s = bell_state(BellState::psi_minus);
  return DensityMatrix(p * (s * s.adjoint()) + (1 - p) * identity(4) / 4, 2);
}

DensityMatrix noisy_singlet_colored(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("singlet fraction must be in [0,1]");
  const CVec s = bell_state(BellState::psi_minus);
  CMat sep = CMat::Zero(4, 4);
  sep(0, 0) = 2.0 / 3.0;  // |00><00|
  sep(1, 1) = 1.0 / 3.0;  // |01><01|
  return DensityMatrix(p * (s * s.adjoint()) + (1 - p) * sep, 2);
}

DensityMatrix dur_bound(int n) {
  if (n < 3) throw std::invalid_argument("dur_bound needs n >= 3");
  const int d = 1 << n;
  const CVec g = ghz(n, 0.0);
  CMat m = g * g.adjoint();
  for (int l = 0; l < n; ++l) {
    const int j = 1 << (n - 1 - l);  // |0..1..0> with the 1 at qubit l
    m(j, j) += 0.5;
    m(d - 1 - j, d - 1 - j) += 0.5;
  }
  return DensityMatrix(m / (n + 1), n);
}

DensityMatrix smolin() {
  CMat m = CMat::Zero(16, 16);
  for (BellState b : {BellState::phi_plus, BellState::phi_minus, BellState::psi_plus,
                      BellState::psi_minus}) {
    const CVec v = bell_state(b);
    const CVec vv = kron(CMat(v), CMat(v)).col(0);
    m += vv * vv.adjoint();
  }
  return DensityMatrix(m / 4, 4);
}

CVec four_qubit_singlet() {
  CVec v = CVec::Zero(16);
  v(bits_to_index({0, 0, 1, 1})) = 1;
  v(bits_to_index({1, 1, 0, 0})) = 1;
  for (auto bits : {std::vector<int>{0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}})
    v(bits_to_index(bits)) = -0.5;
  return v / std::sqrt(3.0);
}

CVec psi_corr() {
  CVec v = CVec::Zero(16);
  const double r = 1.0 / std::sqrt(2.0);
  v(bits_to_index({0, 1, 0, 1})) = r;
  v(bits_to_index({1, 0, 1, 0})) = -r;
  return v;
}

std::vector<CVec> nine_state_basis() {
  auto q = [&](int i) { return basis_ket(3, i); };
  auto plus = [&](int i, int j) { return CVec((q(i) + q(j)) / std::sqrt(2.0)); };
  auto minus = [&](int i, int j) { return CVec((q(i) - q(j)) / std::sqrt(2.0)); };
  auto prod = [&](const CVec& a, const CVec& b) { return CVec(kron(CMat(a), CMat(b)).col(0)); };
  std::vector<CVec> basis;
  basis.push_back(prod(q(1), q(1)));
  basis.push_back(prod(q(0), plus(0, 1)));
  basis.push_back(prod(q(0), minus(0, 1)));
  basis.push_back(prod(q(2), plus(1, 2)));
  basis.push_back(prod(q(2), minus(1, 2)));
  basis.push_back(prod(plus(1, 2), q(0)));
  basis.push_back(prod(minus(1, 2), q(0)));
  basis.push_back(prod(plus(0, 1), q(2)));
  basis.push_back(prod(minus(0, 1), q(2)));
  return basis;
}

CVec ghz_basis_state(int n, int j, int sign) {
  if (j < 0 || j >= (1 << (n - 1))) throw std::invalid_argument("GHZ basis label out of range");
  const int d = 1 << n;
  const int lo = j << 1;            // |j 0>
  const int hi = d - 1 - lo;        // |j' 1>
  CVec v = CVec::Zero(d);
  const double r = 1.0 / std::sqrt(2.0);
  v(lo) = r;
  v(hi) = sign >= 0 ? r : -r;
  return v;
}

DensityMatrix ghz_diagonal_state(int n, double lambda0p, double lambda0m,
                                 const std::vector<double>& lambda) {
  const int half = 1 << (n - 1);
  if (static_cast<int>(lambda.size()) != half - 1)
    throw std::invalid_argument("need 2^{n-1}-1 lambda weights");
  const int d = 1 << n;
  CMat m = CMat::Zero(d, d);
  const CVec p0 = ghz_basis_state(n, 0, +1), m0 = ghz_basis_state(n, 0, -1);
  m += lambda0p * (p0 * p0.adjoint()) + lambda0m * (m0 * m0.adjoint());
  for (int j = 1; j < half; ++j) {
    const CVec vp = ghz_basis_state(n, j, +1), vm = ghz_basis_state(n, j, -1);
    m += lambda[j - 1] * (vp * vp.adjoint() + vm * vm.adjoint());
  }
  return DensityMatrix(std::move(m), n);
}

double ghz_fidelity(const DensityMatrix& rho) {
  const int d = rho.dim();
  return 0.5 * (rho.mat(0, 0).real() + rho.mat(d - 1, d - 1).real()) +
         std::abs(rho.mat(0, d - 1));
}

bool is_ppt(const DensityMatrix& rho, const std::vector<int>& split, double tol) {
  return min_eigenvalue(partial_transpose(rho, split)) >= -tol;
}

CVec random_pure_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

DensityMatrix random_mixed_state(int n_parties, std::mt19937_64& rng) {
  const int d = 1 << n_parties;
  const CVec psi = random_pure_state(d * d, rng);
  CMat m = CMat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) m(i, j) += psi(i * d + k) * std::conj(psi(j * d + k));
  return DensityMatrix(std::move(m), n_parties);
}

DensityMatrix random_product_state(int n_parties, std::mt19937_64& rng) {
  std::vector<CMat> factors;
  for (int q = 0; q < n_parties; ++q) {
    const CVec psi = random_pure_state(2, rng);
    factors.push_back(psi * psi.adjoint());
  }
  return DensityMatrix(kron_all(factors), n_parties);
}

DensityMatrix random_separable_state(int n_parties, int n_terms, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> w(n_terms);
  double tot = 0;
  for (auto& x : w) {
    x = -std::log(uni(rng));
    tot += x;
  }
  const int d = 1 << n_parties;
  CMat m = CMat::Zero(d, d);
  for (int t = 0; t < n_terms; ++t) m += (w[t] / tot) * random_product_state(n_parties, rng).mat;
  return DensityMatrix(std::move(m), n_parties);
}

SpinDirection random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec3 v(gauss(rng), gauss(rng), gauss(rng));
  while (v.norm() < 1e-6) v = Vec3(gauss(rng), gauss(rng), gauss(rng));
  return SpinDirection(Vec3(v / v.norm()));
}

}  // namespace qcorr
