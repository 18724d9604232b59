#pragma once

#include <Eigen/Dense>

#include "ivlasso/fit.hpp"
#include "ivlasso/gram.hpp"

namespace ivlasso {

// Interval-based nonnegative garrote: minimizes over c >= 0
//   sum_t ||Y_t - sum_j Z_jt theta_tilde_j c_j||_K^2 + lambda sum_j c_j,
// reduced to a nonnegatively constrained QP on the rescaled Gram system
// G~_jk = theta~_j theta~_k G_jk. Solved by projected cyclic coordinate
// descent with clamping at zero. Returns theta_hat_j = c_j * theta_tilde_j;
// coordinates with theta_tilde_j = 0 stay at zero.
FitResult nonnegative_garrote(const GramSystem& gs,
                              const Eigen::VectorXd& theta_tilde,
                              double lambda);

// The garrote's shrinkage factors c_j for a fitted result (0 where the pilot
// coefficient vanishes).
Eigen::VectorXd garrote_factors(const FitResult& fit,
                                const Eigen::VectorXd& theta_tilde);

}  // namespace ivlasso
