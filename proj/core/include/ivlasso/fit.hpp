#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ivlasso/gram.hpp"
#include "ivlasso/interval.hpp"

namespace ivlasso {

// Weight assigned to coordinates whose pilot estimate is exactly zero: large
// enough to freeze them, finite so the objective stays well defined.
inline constexpr double kWeightCap = 1e12;

struct FitResult {
  Eigen::VectorXd coefficients;  // exact zeros off the active set
  std::vector<int> active_set;   // indices of nonzero coefficients
  double lambda = 0.0;
  Eigen::VectorXd weights;       // adaptive weights used by the fit
  Kernel kernel;
  double gamma = 0.0;
  double objective = 0.0;        // penalized loss at the solution
};

// w_j = 1 / |theta_tilde_j|^gamma, capped at kWeightCap when the pilot is 0.
Eigen::VectorXd adaptive_weights(const Eigen::VectorXd& theta_tilde, double gamma);

std::vector<int> nonzero_indices(const Eigen::VectorXd& v);

double penalized_objective(const GramSystem& gs, const Eigen::VectorXd& weights,
                           const std::vector<bool>& penalized, double lambda,
                           const Eigen::VectorXd& theta);

// Max stationarity violation of
//   min theta'G theta - 2c'theta + lambda sum_j w_j |theta_j|.
// Active penalized j:    |2(c - G theta)_j - lambda w_j sign(theta_j)|
// Inactive penalized j:  max(0, |2(c - G theta)_j| - lambda w_j)
// Unpenalized j:         |2(c - G theta)_j|
double kkt_violation(const GramSystem& gs, const Eigen::VectorXd& weights,
                     const std::vector<bool>& penalized, double lambda,
                     const Eigen::VectorXd& theta);

}  // namespace ivlasso
