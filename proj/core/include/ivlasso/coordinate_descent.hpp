#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "ivlasso/fit.hpp"
#include "ivlasso/gram.hpp"

namespace ivlasso {

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cyclic coordinate minimization of the same objective ilars_path solves;
// kept as an independent check on the path algorithm. Each update is the
// scalar soft-threshold
//   theta_j <- S(c_j - sum_{k != j} G_jk theta_k, lambda w_j / 2) / G_jj,
// and unpenalized coordinates take the plain Newton step. Stops when the
// largest coordinate change in a sweep drops below tol; throws
// ConvergenceError after max_iter sweeps.
FitResult coordinate_descent_fit(const GramSystem& gs,
                                 const Eigen::VectorXd& weights,
                                 const std::vector<bool>& penalized,
                                 double lambda, double tol = 1e-10,
                                 int max_iter = 100000);

}  // namespace ivlasso
