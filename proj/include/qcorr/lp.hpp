#pragma once

#include <vector>

#include <Eigen/Dense>

namespace qcorr {

/// Phase-1 simplex for the feasibility system A x = b, x >= 0.
/// Returns true iff a feasible point exists (artificial objective
/// driven below tol). Dense, Bland's rule, no phase 2.
bool lp_feasible(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, double tol = 1e-9);

}  // namespace qcorr
