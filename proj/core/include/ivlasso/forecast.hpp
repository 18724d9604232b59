#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "ivlasso/evaluate.hpp"
#include "ivlasso/pipeline.hpp"
#include "ivlasso/sample.hpp"

namespace ivlasso::fc {

enum class EstimatorKind { Plr, Acix, Crm, Ccrm, Blu };

struct RollingSpec {
  int window = 60;
  int step = 1;
  EstimatorKind estimator = EstimatorKind::Plr;
  PlrConfig plr;  // kernel/gamma/CV settings; kernel also used by ACIX
  int n_threads = 0;
};

struct RollingError : std::runtime_error {
  RollingError(int origin, const std::string& what);
  int origin;
};

// One-step-ahead rolling forecasts: for each origin t0 = window-1 .. T-2
// (0-based), fit on the window ending at t0 and predict row t0+1.
// Standardization statistics come from the training window only. Origins are
// independent and may be evaluated concurrently; output order is by origin.
eval::ForecastPairSeries rolling_forecast(const IntervalSample& sample,
                                          const RollingSpec& spec);

enum class SelectionMethod { IntervalPlr, PointLasso };

struct TrackingSpec {
  int train_len = 250;
  int test_len = 21;
  int n_select = 10;
  SelectionMethod method = SelectionMethod::IntervalPlr;
  PlrConfig plr;  // kernel/gamma for the selection step
};

struct TrackingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrackResult {
  std::vector<int> selected;       // column indices into the panel
  Eigen::VectorXd weights;         // OLS weights aligned with `selected`
  std::vector<double> portfolio_returns;  // train then test rows
  std::vector<double> index_close_returns;
  double lambda = 0.0;             // path position that fixed the selection
  eval::TrackingErrors train_errors;
  eval::TrackingErrors test_errors;
};

// Two-step index tracking. Step 1 walks the adaptive-LASSO path on
// (index ~ constituents) and keeps the largest lambda whose active set has
// exactly n_select penalized members (point-lasso mode runs the same path on
// degenerate close-return intervals with the midpoint kernel). Step 2
// estimates weights by OLS of index close returns on the selected
// constituents' close returns over the training window; no intercept and no
// full-investment constraint, so short positions are allowed.
//
// `sample` holds the index interval returns as responses and constituent
// interval returns as regressors; close_returns is T x p aligned with the
// panel columns.
TrackResult index_track(const IntervalSample& sample,
                        const Eigen::MatrixXd& close_returns,
                        const Eigen::VectorXd& index_close_returns,
                        const TrackingSpec& spec);

}  // namespace ivlasso::fc
