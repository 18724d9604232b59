#include "ivlasso/gram.hpp"

#include <cmath>

namespace ivlasso {

SingularGramError::SingularGramError(int column, const std::string& name)
    : std::runtime_error("singular Gram matrix: pivot collapsed at column " +
                         std::to_string(column) +
                         (name.empty() ? std::string()
                                       : " (" + name + ")") +
                         "; regressors are collinear or constant"),
      column(column) {}

GramSystem assemble_gram(const IntervalSample& s, const Kernel& k) {
  s.validate();
  const int t = s.t();
  const int p = s.p();
  GramSystem gs;
  gs.gram = Eigen::MatrixXd::Zero(p, p);
  gs.cross = Eigen::VectorXd::Zero(p);
  gs.n_obs = t;
  for (int i = 0; i < t; ++i) {
    const IntervalVector& z = s.regressors[i];
    const Interval y = s.responses[i];
    for (int j = 0; j < p; ++j) {
      for (int l = j; l < p; ++l) gs.gram(j, l) += k.inner(z[j], z[l]);
      gs.cross[j] += k.inner(z[j], y);
    }
    gs.response_norm += k.norm_sq(y);
  }
  for (int j = 0; j < p; ++j)
    for (int l = 0; l < j; ++l) gs.gram(j, l) = gs.gram(l, j);
  return gs;
}

double quadratic_loss(const GramSystem& gs, const Eigen::VectorXd& theta) {
  return theta.dot(gs.gram * theta) - 2.0 * gs.cross.dot(theta) +
         gs.response_norm;
}

namespace detail {

int cholesky_factor(const Eigen::MatrixXd& g, Eigen::MatrixXd& l) {
  const int p = static_cast<int>(g.rows());
  l = Eigen::MatrixXd::Zero(p, p);
  const double scale = std::max(g.diagonal().maxCoeff(), 0.0);
  const double tol = 1e-12 * std::max(scale, 1e-300);
  for (int j = 0; j < p; ++j) {
    double d = g(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > tol)) return j;
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < p; ++i) {
      double v = g(i, j);
      for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return -1;
}

Eigen::VectorXd cholesky_solve(const Eigen::MatrixXd& l,
                               const Eigen::VectorXd& b) {
  Eigen::VectorXd y =
      l.triangularView<Eigen::Lower>().solve(b);
  return l.transpose().triangularView<Eigen::Upper>().solve(y);
}

}  // namespace detail

Eigen::VectorXd min_dk_estimate(const GramSystem& gs) {
  Eigen::MatrixXd l;
  const int bad = detail::cholesky_factor(gs.gram, l);
  if (bad >= 0) throw SingularGramError(bad, "");
  return detail::cholesky_solve(l, gs.cross);
}

Eigen::VectorXd ridge_estimate(const GramSystem& gs, double lambda) {
  if (lambda < 0.0)
    throw std::invalid_argument("ridge_estimate: lambda must be >= 0");
  if (lambda == 0.0) return min_dk_estimate(gs);
  Eigen::MatrixXd g = gs.gram;
  g.diagonal().array() += lambda;
  Eigen::MatrixXd l;
  const int bad = detail::cholesky_factor(g, l);
  if (bad >= 0) throw SingularGramError(bad, "ridge system");
  return detail::cholesky_solve(l, gs.cross);
}

}  // namespace ivlasso
