#include "qcorr/tradeoff.hpp"

#include <cmath>

namespace qcorr {

double c_max(double theta_a, double theta_b) {
  return std::sqrt(4 + 4 * std::abs(std::sin(theta_a) * std::sin(theta_b)));
}

double d_max(double theta_a, double theta_b) {
  const double s = std::sin(theta_a) * std::sin(theta_b);
  return std::sqrt(2 * (1 + std::sqrt(std::max(0.0, 1 - s * s))));
}

double d_equal(double theta) {
  const double s = std::sin(theta);
  return std::abs(std::cos(theta)) + std::sqrt(1 + s * s);
}

double roy_bound(double theta) {
  const double c = std::abs(std::cos(theta));
  if (c <= 3 - 2 * std::sqrt(2.0)) return std::sqrt(2.0) * (c + 1);
  return 1 + 2 * std::sqrt(c) - c;
}

CMat chsh_operator_at_angles(double theta_a, double theta_b) {
  const SpinDirection a(1, 0, 0);
  const SpinDirection ap(std::cos(theta_a), std::sin(theta_a), 0);
  const SpinDirection b(1, 0, 0);
  const SpinDirection bp(std::cos(theta_b), std::sin(theta_b), 0);
  const CMat oa = spin_op(a), oap = spin_op(ap), ob = spin_op(b), obp = spin_op(bp);
  return kron(oa, ob) + kron(oa, obp) + kron(oap, ob) - kron(oap, obp);
}

double verify_c(double theta_a, double theta_b) {
  const CMat bell = chsh_operator_at_angles(theta_a, theta_b);
  return std::max(std::abs(max_eigenvalue(bell)), std::abs(min_eigenvalue(bell)));
}

namespace {

// product-state CHSH expectation per the in-plane parameterization
double product_value(double theta_a, double theta_b, double g1, double g2, double p1,
                     double p2) {
  return std::sin(2 * g1) * std::sin(2 * g2) *
         (std::cos(p1) * (std::cos(p2) + std::cos(p2 - theta_b)) +
          std::cos(p1 - theta_a) * (std::cos(p2) - std::cos(p2 - theta_b)));
}

}  // namespace

double verify_d(double theta_a, double theta_b, int grid, bool full_search) {
  if (grid < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
  const double two_pi = 2 * M_PI;
  double best = 0;
  std::vector<double> best_x;

  if (full_search) {
    for (int i1 = 0; i1 < grid; ++i1)
      for (int i2 = 0; i2 < grid; ++i2)
        for (int j1 = 0; j1 < grid; ++j1)
          for (int j2 = 0; j2 < grid; ++j2) {
            const double g1 = i1 * M_PI / grid, g2 = i2 * M_PI / grid;
            const double p1 = j1 * two_pi / grid, p2 = j2 * two_pi / grid;
            const double v = std::abs(product_value(theta_a, theta_b, g1, g2, p1, p2));
            if (v > best) {
              best = v;
              best_x = {g1, g2, p1, p2};
            }
          }
  } else {
    // amplitude angles pinned at pi/4 where the maximum sits
    for (int j1 = 0; j1 < grid; ++j1)
      for (int j2 = 0; j2 < grid; ++j2) {
        const double p1 = j1 * two_pi / grid, p2 = j2 * two_pi / grid;
        const double v =
            std::abs(product_value(theta_a, theta_b, M_PI / 4, M_PI / 4, p1, p2));
        if (v > best) {
          best = v;
          best_x = {M_PI / 4, M_PI / 4, p1, p2};
        }
      }
  }

  // coordinate descent refinement
  std::vector<int> active = full_search ? std::vector<int>{0, 1, 2, 3}
                                        : std::vector<int>{2, 3};
  double step = two_pi / grid;
  while (step > 1e-7) {
    bool improved = false;
    for (int axis : active) {
      for (double dir : {-1.0, 1.0}) {
        auto cand = best_x;
        cand[axis] += dir * step;
        const double v =
            std::abs(product_value(theta_a, theta_b, cand[0], cand[1], cand[2], cand[3]));
        if (v > best) {
          best = v;
          best_x = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

ViolationFactors violation_factors(double theta) {
  return {c_max(theta, theta) / d_max(theta, theta), c_max(theta, theta) / 2};
}

}  // namespace qcorr
