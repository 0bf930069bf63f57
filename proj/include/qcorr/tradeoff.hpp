#pragma once

#include "qcorr/qalgebra.hpp"

namespace qcorr {

/// Largest CHSH expectation over all states when the local observable
/// pairs subtend angles theta_a, theta_b: sqrt(4 + 4|sin sin|).
double c_max(double theta_a, double theta_b);

/// Largest CHSH expectation over separable states:
/// sqrt(2 (1 + sqrt(1 - sin^2 sin^2))).
double d_max(double theta_a, double theta_b);

/// d_max at equal angles: |cos| + sqrt(1 + sin^2).
double d_equal(double theta);

/// Earlier equal-angle separable bound, piecewise in |cos theta|.
double roy_bound(double theta);

/// CHSH operator at the in-plane observable choice a = x,
/// a' = (cos ta, sin ta, 0), same for b.
CMat chsh_operator_at_angles(double theta_a, double theta_b);

/// Independent oracle for c_max: extremal eigenvalue of the CHSH
/// operator at the given angles.
double verify_c(double theta_a, double theta_b);

/// Independent oracle for d_max: maximum over pure product states by
/// grid search plus coordinate-descent refinement. The default fixes
/// the amplitude angles at pi/4; full_search sweeps all four
/// parameters.
double verify_d(double theta_a, double theta_b, int grid = 64, bool full_search = false);

struct ViolationFactors {
  double x;       // c_max / d_max
  double x_chsh;  // c_max / 2
};
ViolationFactors violation_factors(double theta);

}  // namespace qcorr
