#pragma once

#include <random>
#include <string>
#include <vector>

#include "qcorr/qalgebra.hpp"

namespace qcorr {

enum class BellState { psi_plus, psi_minus, phi_plus, phi_minus };

CVec bell_state(BellState which);

/// (|0...0> + e^{i alpha}|1...1>)/sqrt(2) on n qubits.
CVec ghz(int n, double alpha = 0.0);

/// cos(alpha)|0...0> + sin(alpha)|1...1>.
CVec generalized_ghz(int n, double alpha);

CVec w_state();  // three qubits

/// Symmetric Dicke state with l excitations on n qubits.
CVec dicke(int l, int n);

/// Product of the same single-qubit unitary on every qubit.
CMat uniform_local_unitary(const CMat& u, int n);

/// Rotation by `angle` about the x axis, exp(-i angle/2 sigma_x).
CMat rot_x(double angle);

enum class NoiseChannel { white, colored, depolarize, dephase, dissipate };

/// The n-qubit GHZ state after admixing noise or single-qubit
/// decoherence with strength p in [0,1].
DensityMatrix noisy_ghz(int n, NoiseChannel channel, double p);

DensityMatrix mix_white(const DensityMatrix& rho, double p);

/// p |psi-><psi-| + (1-p) 1/4.
DensityMatrix werner(double p);

/// p |psi-><psi-| + (1-p)(2|00><00| + |01><01|)/3.
DensityMatrix noisy_singlet_colored(double p);

/// GHZ projector plus the N flipped-single-qubit projector pairs,
/// normalized by 1/(N+1); PPT per qubit for n >= 4 yet entangled.
DensityMatrix dur_bound(int n);

DensityMatrix smolin();

CVec four_qubit_singlet();

/// (|0101> - |1010>)/sqrt(2), parties I = qubits {0,1}, II = {2,3}.
CVec psi_corr();

/// Complete orthonormal product basis of two qutrits (9 states, dim 9).
std::vector<CVec> nine_state_basis();

/// GHZ-basis state (|j 0> +- |j' 1>)/sqrt(2); j is an (N-1)-bit label.
CVec ghz_basis_state(int n, int j, int sign);

/// Diagonal-in-GHZ-basis family: weights lambda0p, lambda0m on the two
/// extreme states and lambda[j-1] on each pair j = 1..2^{n-1}-1.
DensityMatrix ghz_diagonal_state(int n, double lambda0p, double lambda0m,
                                 const std::vector<double>& lambda);

double ghz_fidelity(const DensityMatrix& rho);

/// PPT test with respect to the first block of the bipartition.
bool is_ppt(const DensityMatrix& rho, const std::vector<int>& split, double tol = 1e-10);

// Random sampling: pure states from normalized complex Gaussians, mixed
// states by tracing out half of a doubled pure system.
CVec random_pure_state(int dim, std::mt19937_64& rng);
DensityMatrix random_mixed_state(int n_parties, std::mt19937_64& rng);
DensityMatrix random_product_state(int n_parties, std::mt19937_64& rng);
DensityMatrix random_separable_state(int n_parties, int n_terms, std::mt19937_64& rng);
SpinDirection random_direction(std::mt19937_64& rng);

}  // namespace qcorr
