#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivlasso/evaluate.hpp"
#include "ivlasso/sample.hpp"

namespace ivlasso::io {

struct CsvError : std::runtime_error {
  CsvError(const std::string& what, int row = -1);
  int row;  // 1-based data row, -1 when not tied to a row
};

enum class Schema { BoundsWide, IntervalLong, Ohlc };

Schema parse_schema(const std::string& name);

// bounds-wide: optional leading "date" column (strictly increasing), then
// name_L,name_R pairs per variable; the first pair is the response.
IntervalSample read_bounds_wide(const std::string& path);
void write_bounds_wide(const IntervalSample& s, const std::string& path,
                       const std::vector<std::string>& dates = {});

// interval-long: date,series,left,right pivoted to wide; series order is
// first appearance, the first series is the response.
IntervalSample read_interval_long(const std::string& path);

// ohlc: date,open,high,low,close (single asset) or date,asset,open,high,low,
// close (panel). Converted to interval log returns
// [ln(low_t/close_{t-1}), ln(high_t/close_{t-1})]; close log returns are kept
// alongside for the tracking weight step. The first asset is the
// response/index.
struct OhlcPanel {
  IntervalSample intervals;      // responses = first asset, regressors = rest
  Eigen::MatrixXd close_returns; // T x (n_assets - 1), aligned with regressors
  Eigen::VectorXd index_close_returns;
  std::vector<std::string> dates;
};
OhlcPanel read_ohlc(const std::string& path);

IntervalSample read_sample(const std::string& path, Schema schema);

// forecast pairs: pred_l,pred_r,act_l,act_r with optional leading date.
eval::ForecastPairSeries read_forecast_pairs(const std::string& path);
void write_forecast_pairs(const eval::ForecastPairSeries& fp,
                          const std::string& path);

// criteria rows keyed (model, window, criterion).
void write_criteria_csv(const std::string& path,
                        const std::vector<std::tuple<std::string, int,
                                                     std::string, double>>& rows);

std::string format_double(double v);

}  // namespace ivlasso::io
