#include "ivlasso/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace ivlasso {

Eigen::VectorXd adaptive_weights(const Eigen::VectorXd& theta_tilde,
                                 double gamma) {
  if (!(gamma > 0.0))
    throw std::invalid_argument("adaptive_weights: gamma must be > 0");
  Eigen::VectorXd w(theta_tilde.size());
  for (Eigen::Index j = 0; j < theta_tilde.size(); ++j) {
    const double a = std::abs(theta_tilde[j]);
    if (a == 0.0) {
      w[j] = kWeightCap;
    } else {
      const double v = 1.0 / std::pow(a, gamma);
      w[j] = std::min(v, kWeightCap);
    }
  }
  return w;
}

std::vector<int> nonzero_indices(const Eigen::VectorXd& v) {
  std::vector<int> idx;
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (v[j] != 0.0) idx.push_back(static_cast<int>(j));
  return idx;
}

double penalized_objective(const GramSystem& gs, const Eigen::VectorXd& weights,
                           const std::vector<bool>& penalized, double lambda,
                           const Eigen::VectorXd& theta) {
  double obj = quadratic_loss(gs, theta);
  for (Eigen::Index j = 0; j < theta.size(); ++j)
    if (penalized[j]) obj += lambda * weights[j] * std::abs(theta[j]);
  return obj;
}

double kkt_violation(const GramSystem& gs, const Eigen::VectorXd& weights,
                     const std::vector<bool>& penalized, double lambda,
                     const Eigen::VectorXd& theta) {
  const Eigen::VectorXd grad = 2.0 * (gs.cross - gs.gram * theta);
  double worst = 0.0;
  for (Eigen::Index j = 0; j < theta.size(); ++j) {
    double v;
    if (!penalized[j]) {
      v = std::abs(grad[j]);
    } else if (theta[j] != 0.0) {
      v = std::abs(grad[j] - lambda * weights[j] * (theta[j] > 0 ? 1.0 : -1.0));
    } else {
      v = std::max(0.0, std::abs(grad[j]) - lambda * weights[j]);
    }
    worst = std::max(worst, v);
  }
  return worst;
}

}  // namespace ivlasso
