#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "ivlasso/interval.hpp"
#include "ivlasso/sample.hpp"

namespace ivlasso {

// Sufficient statistics of the quadratic D_K loss:
//   sum_t ||Y_t - Z_t'theta||_K^2  =  theta'*gram*theta - 2*cross'theta + response_norm
struct GramSystem {
  Eigen::MatrixXd gram;       // p x p, G_jk = sum_t <Z_jt, Z_kt>_K
  Eigen::VectorXd cross;      // c_j  = sum_t <Z_jt, Y_t>_K
  double response_norm = 0.0; // sum_t ||Y_t||_K^2
  int n_obs = 0;

  int p() const { return static_cast<int>(cross.size()); }
};

struct SingularGramError : std::runtime_error {
  SingularGramError(int column, const std::string& name);
  int column;
};

GramSystem assemble_gram(const IntervalSample& s, const Kernel& k);

// theta'*G*theta - 2*c'theta + r
double quadratic_loss(const GramSystem& gs, const Eigen::VectorXd& theta);

// Unpenalized minimum D_K-distance estimator (the ACIX fit): solves
// gram * theta = cross. Throws SingularGramError naming the first column
// whose Cholesky pivot collapses (collinear or constant regressor).
Eigen::VectorXd min_dk_estimate(const GramSystem& gs);

// (G + lambda I)^{-1} c; at lambda = 0 this is min_dk_estimate.
Eigen::VectorXd ridge_estimate(const GramSystem& gs, double lambda);

namespace detail {
// Plain Cholesky that reports the first failing pivot; returns -1 on success
// and fills L (lower). Used so singularity errors can name a column.
int cholesky_factor(const Eigen::MatrixXd& g, Eigen::MatrixXd& l);
Eigen::VectorXd cholesky_solve(const Eigen::MatrixXd& l, const Eigen::VectorXd& b);
}  // namespace detail

}  // namespace ivlasso
