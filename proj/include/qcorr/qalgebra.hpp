#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace qcorr {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

// Numerical tolerances used throughout. Hermiticity is relative to the
// largest entry magnitude; PSD is an absolute floor on eigenvalues.
constexpr double kHermTol = 1e-10;
constexpr double kPsdTol = -1e-9;
constexpr double kUnitTol = 1e-12;

inline CMat dagger(const CMat& m) { return m.adjoint(); }

CMat kron(const CMat& a, const CMat& b);
CMat kron_all(const std::vector<CMat>& ops);

bool is_hermitian(const CMat& m, double tol = kHermTol);

/// Extremal real eigenvalues of a Hermitian matrix. Throws on
/// non-Hermitian input.
double max_eigenvalue(const CMat& h);
double min_eigenvalue(const CMat& h);
Eigen::VectorXd eigenvalues(const CMat& h);

// Pauli matrices and the 2x2 identity, computational basis = sigma_z
// eigenbasis with |0> the +1 eigenvector.
const CMat& pauli_x();
const CMat& pauli_y();
const CMat& pauli_z();
const CMat& id2();
CMat identity(int dim);

/// Unit vector on the Bloch sphere; rejects non-normalized input.
struct SpinDirection {
  Vec3 a;
  explicit SpinDirection(const Vec3& v);
  SpinDirection(double x, double y, double z) : SpinDirection(Vec3(x, y, z)) {}
};

/// A = a.sigma, 2x2 Hermitian, traceless, eigenvalues +-1.
CMat spin_op(const SpinDirection& d);

enum class Orientation { same, opposite };

/// Pairwise orthogonal spin directions; orientation records whether
/// x cross y = z or -z.
struct OrthonormalTriple {
  SpinDirection x, y, z;
  Orientation orientation;
  OrthonormalTriple(const SpinDirection& x_, const SpinDirection& y_,
                    const SpinDirection& z_);
  static OrthonormalTriple pauli();  // (sigma_x, sigma_y, sigma_z)
};

/// PSD, unit-trace operator on (C^2)^N (general dimension carriers such
/// as qutrit pairs keep parties = 0 and are not addressable per qubit).
struct DensityMatrix {
  CMat mat;
  int parties = 0;

  DensityMatrix() = default;
  DensityMatrix(CMat m, int n_parties);
  int dim() const { return static_cast<int>(mat.rows()); }

  static DensityMatrix from_pure(const CVec& psi, int n_parties);
  static DensityMatrix unchecked(CMat m, int n_parties);
};

/// Reduced state on the kept qubits (ascending order preserved).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Transpose the indices of the listed qubits; Hermitian but in general
/// not PSD, hence a plain matrix.
CMat partial_transpose(const DensityMatrix& rho, const std::vector<int>& transposed);

double expectation(const CMat& op, const DensityMatrix& rho);
double expectation(const CMat& op, const CVec& psi);

/// Lift a single-qubit (or per-qubit list of) operator(s) into the
/// N-qubit space: identity on every unlisted qubit.
CMat embed(const CMat& op, int qubit, int n_parties);

}  // namespace qcorr
