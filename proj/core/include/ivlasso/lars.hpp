#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "ivlasso/fit.hpp"
#include "ivlasso/gram.hpp"

namespace ivlasso {

enum class PathEventKind { Enter, Drop, Terminal };

struct PathEvent {
  PathEventKind kind = PathEventKind::Terminal;
  int variable = -1;
};

// Piecewise-linear solution path of
//   argmin theta'G theta - 2c'theta + lambda sum_j w_j |theta_j|
// over lambda in [0, lambda_max]. breakpoints[0] = lambda_max (all penalized
// coefficients zero there), breakpoints.back() = 0. events[k] is the
// enter/drop transition occurring at breakpoints[k]; active_sets[k] holds the
// coordinates active just below breakpoints[k].
struct LarsPath {
  std::vector<double> breakpoints;  // strictly decreasing, ends at 0
  std::vector<Eigen::VectorXd> vertices;
  std::vector<PathEvent> events;
  std::vector<std::vector<int>> active_sets;
  Eigen::VectorXd weights;
  std::vector<bool> penalized;
  std::vector<int> excluded_columns;  // zero self-moment, frozen at 0
  GramSystem gs;                      // retained for objective evaluation

  double lambda_max() const {
    return breakpoints.empty() ? 0.0 : breakpoints.front();
  }
};

struct PathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// LASSO-modified least angle regression on the Gram form. Variables in
// `penalized` carry the weighted L1 penalty; the rest (intercept columns) are
// active from the start. Weights must be strictly positive and finite on
// penalized coordinates. Throws PathError after 10*p events (degenerate Gram
// geometry) or when an active-set factorization collapses.
LarsPath ilars_path(const GramSystem& gs, const Eigen::VectorXd& weights,
                    const std::vector<bool>& penalized);

// Solution at an arbitrary lambda >= 0 by linear interpolation between the
// bracketing breakpoints; coordinates at zero on both ends stay exactly zero.
FitResult solve_at_lambda(const LarsPath& path, double lambda);

}  // namespace ivlasso
