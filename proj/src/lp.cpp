#include "qcorr/lp.hpp"

#include <cmath>
#include <limits>

namespace qcorr {

bool lp_feasible(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, double tol) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());

  // Tableau with one artificial variable per row; objective = sum of
  // artificials. Rows are flipped so b >= 0.
  Eigen::MatrixXd t(m + 1, n + m + 1);
  t.setZero();
  for (int i = 0; i < m; ++i) {
    const double s = b(i) < 0 ? -1.0 : 1.0;
    t.block(i, 0, 1, n) = s * a.row(i);
    t(i, n + i) = 1.0;
    t(i, n + m) = s * b(i);
  }
  // objective row: minimize sum of artificials, expressed in terms of
  // the non-basic columns
  for (int j = 0; j <= n + m; ++j) {
    double s = 0;
    for (int i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = -s;
  }
  for (int i = 0; i < m; ++i) t(m, n + i) = 0.0;

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  const int max_iter = 50 * (n + m) + 1000;
  for (int iter = 0; iter < max_iter; ++iter) {
    // Bland's rule: smallest-index entering column with negative cost
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (t(m, j) < -tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t(i, enter) > tol) {
        const double ratio = t(i, n + m) / t(i, enter);
        if (ratio < best - 1e-12 || (std::abs(ratio - best) <= 1e-12 &&
                                     (leave < 0 || basis[i] < basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) break;  // unbounded; cannot happen in phase 1
    const double piv = t(leave, enter);
    t.row(leave) /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t(i, enter);
      if (f != 0.0) t.row(i) -= f * t.row(leave);
    }
    basis[leave] = enter;
  }
  return std::abs(t(m, n + m)) <= tol;
}

}  // namespace qcorr
