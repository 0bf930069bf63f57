#include "qcorr/qalgebra.hpp"

#include <cmath>

namespace qcorr {

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMat kron_all(const std::vector<CMat>& ops) {
  CMat out = CMat::Identity(1, 1);
  for (const auto& op : ops) out = kron(out, op);
  return out;
}

bool is_hermitian(const CMat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

static Eigen::VectorXd herm_eigs(const CMat& h) {
  if (!is_hermitian(h)) throw std::invalid_argument("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double max_eigenvalue(const CMat& h) { return herm_eigs(h).maxCoeff(); }
double min_eigenvalue(const CMat& h) { return herm_eigs(h).minCoeff(); }
Eigen::VectorXd eigenvalues(const CMat& h) { return herm_eigs(h); }

const CMat& pauli_x() {
  static const CMat m = [] {
    CMat s(2, 2);
    s << 0, 1, 1, 0;
    return s;
  }();
  return m;
}

const CMat& pauli_y() {
  static const CMat m = [] {
    CMat s(2, 2);
    s << 0, Complex(0, -1), Complex(0, 1), 0;
    return s;
  }();
  return m;
}

const CMat& pauli_z() {
  static const CMat m = [] {
    CMat s(2, 2);
    s << 1, 0, 0, -1;
    return s;
  }();
  return m;
}

const CMat& id2() {
  static const CMat m = CMat::Identity(2, 2);
  return m;
}

CMat identity(int dim) { return CMat::Identity(dim, dim); }

SpinDirection::SpinDirection(const Vec3& v) : a(v) {
  if (std::abs(a.norm() - 1.0) > kUnitTol)
    throw std::invalid_argument("spin direction must be a unit vector");
}

CMat spin_op(const SpinDirection& d) {
  return d.a.x() * pauli_x() + d.a.y() * pauli_y() + d.a.z() * pauli_z();
}

OrthonormalTriple::OrthonormalTriple(const SpinDirection& x_, const SpinDirection& y_,
                                     const SpinDirection& z_)
    : x(x_), y(y_), z(z_), orientation(Orientation::same) {
  if (std::abs(x.a.dot(y.a)) > kUnitTol || std::abs(x.a.dot(z.a)) > kUnitTol ||
      std::abs(y.a.dot(z.a)) > kUnitTol)
    throw std::invalid_argument("triple is not orthogonal");
  Vec3 c = x.a.cross(y.a);
  if ((c - z.a).norm() <= 1e-10)
    orientation = Orientation::same;
  else if ((c + z.a).norm() <= 1e-10)
    orientation = Orientation::opposite;
  else
    throw std::invalid_argument("x cross y is not +-z");
}

OrthonormalTriple OrthonormalTriple::pauli() {
  return OrthonormalTriple(SpinDirection(1, 0, 0), SpinDirection(0, 1, 0),
                           SpinDirection(0, 0, 1));
}

DensityMatrix::DensityMatrix(CMat m, int n_parties) : mat(std::move(m)), parties(n_parties) {
  if (mat.rows() != mat.cols()) throw std::invalid_argument("density matrix must be square");
  if (parties > 0 && mat.rows() != (Eigen::Index{1} << parties))
    throw std::invalid_argument("dimension does not match party count");
  if (std::abs(mat.trace().real() - 1.0) > 1e-10 || std::abs(mat.trace().imag()) > 1e-10)
    throw std::invalid_argument("density matrix must have unit trace");
  if (!is_hermitian(mat)) throw std::invalid_argument("density matrix must be Hermitian");
  if (min_eigenvalue(mat) < kPsdTol)
    throw std::invalid_argument("density matrix must be positive semidefinite");
}

DensityMatrix DensityMatrix::from_pure(const CVec& psi, int n_parties) {
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("state vector must be normalized");
  return DensityMatrix(psi * psi.adjoint(), n_parties);
}

DensityMatrix DensityMatrix::unchecked(CMat m, int n_parties) {
  DensityMatrix rho;
  rho.mat = std::move(m);
  rho.parties = n_parties;
  return rho;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.parties;
  if (n <= 0) throw std::invalid_argument("partial trace needs a party structure");
  if (keep.empty()) throw std::invalid_argument("kept subset must be nonempty");
  std::vector<bool> kept(n, false);
  for (int q : keep) {
    if (q < 0 || q >= n) throw std::invalid_argument("qubit index out of range");
    kept[q] = true;
  }
  const int nk = static_cast<int>(keep.size());
  const int dk = 1 << nk;
  const int nt = n - nk;
  const int dt = 1 << nt;

  std::vector<int> keep_pos, trace_pos;
  for (int q = 0; q < n; ++q) (kept[q] ? keep_pos : trace_pos).push_back(q);

  // full index assembled bit by bit, qubit 0 = most significant
  auto assemble = [&](int kbits, int tbits) {
    int idx = 0;
    int ki = 0, ti = 0;
    for (int q = 0; q < n; ++q) {
      int bit;
      if (kept[q])
        bit = (kbits >> (nk - 1 - ki)) & 1, ++ki;
      else
        bit = (tbits >> (nt - 1 - ti)) & 1, ++ti;
      idx = (idx << 1) | bit;
    }
    return idx;
  };

  CMat out = CMat::Zero(dk, dk);
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      Complex s = 0;
      for (int t = 0; t < dt; ++t) s += rho.mat(assemble(i, t), assemble(j, t));
      out(i, j) = s;
    }
  return DensityMatrix(std::move(out), nk);
}

CMat partial_transpose(const DensityMatrix& rho, const std::vector<int>& transposed) {
  const int n = rho.parties;
  if (n <= 0) throw std::invalid_argument("partial transpose needs a party structure");
  std::vector<bool> tr(n, false);
  for (int q : transposed) {
    if (q < 0 || q >= n) throw std::invalid_argument("qubit index out of range");
    tr[q] = true;
  }
  const int d = rho.dim();
  CMat out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int i2 = 0, j2 = 0;
      for (int q = 0; q < n; ++q) {
        int ib = (i >> (n - 1 - q)) & 1;
        int jb = (j >> (n - 1 - q)) & 1;
        if (tr[q]) std::swap(ib, jb);
        i2 = (i2 << 1) | ib;
        j2 = (j2 << 1) | jb;
      }
      out(i2, j2) = rho.mat(i, j);
    }
  return out;
}

double expectation(const CMat& op, const DensityMatrix& rho) {
  return (op * rho.mat).trace().real();
}

double expectation(const CMat& op, const CVec& psi) {
  return (psi.adjoint() * op * psi)(0, 0).real();
}

CMat embed(const CMat& op, int qubit, int n_parties) {
  std::vector<CMat> ops(n_parties, id2());
  ops[qubit] = op;
  return kron_all(ops);
}

}  // namespace qcorr
