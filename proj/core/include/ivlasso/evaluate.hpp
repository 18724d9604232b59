#pragma once

#include <string>
#include <vector>

#include "ivlasso/interval.hpp"

namespace ivlasso::eval {

struct ForecastPairSeries {
  std::vector<Interval> predicted;
  std::vector<Interval> actual;

  int size() const { return static_cast<int>(predicted.size()); }
  void validate() const;  // equal nonzero lengths
};

// Interval-based criteria (w1 .. w_rate) and point-based RMSEs (w_l .. w_r).
// All are zero for a perfect forecast.
struct CriteriaReport {
  double w1 = 0.0;      // nonoverlapping area
  double w_dk = 0.0;    // sqrt(sum D_K^2) / T
  double w_nsd1 = 0.0;  // symmetric difference over set union
  double w_nsd2 = 0.0;  // symmetric difference over union hull
  double w_mde = 0.0;   // mean distance error
  double w_rate = 0.0;  // non-efficiency rate
  double w_l = 0.0;     // RMSE of lower bound
  double w_h = 0.0;     // RMSE of upper bound
  double w_m = 0.0;     // RMSE of midpoint
  double w_r = 0.0;     // RMSE of radius
};

// Overlap-based criteria canonicalize each interval to (min,max) first; the
// D_K criterion uses raw bounds. With overlap_floor (default) the signed
// overlap is floored at 0 so w1, nsd2 and w_rate stay in [0,1]; disabling it
// reproduces the literal formulas, which exceed 1 on disjoint pairs.
// Zero-width denominators contribute 0 (limit agreement).
CriteriaReport interval_criteria(const ForecastPairSeries& fp, const Kernel& k,
                                 bool overlap_floor = true);

CriteriaReport point_criteria(const ForecastPairSeries& fp);

CriteriaReport all_criteria(const ForecastPairSeries& fp, const Kernel& k,
                            bool overlap_floor = true);

std::vector<std::pair<std::string, double>> criteria_items(const CriteriaReport& r);

struct DmResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// Diebold-Mariano comparison on squared-error loss differentials
// d_t = e_a^2 - e_b^2, long-run variance with Bartlett weights up to
// horizon-1 lags, two-sided normal reference. Identical error series (or a
// degenerate variance) return (0, 1).
DmResult dm_test(const std::vector<double>& errors_a,
                 const std::vector<double>& errors_b, int horizon = 1);

struct TrackingErrors {
  double s = 0.0;  // sample standard deviation of err_t
  double m = 0.0;  // mean absolute error
  std::vector<double> s_path;  // S(tau), tau = 1..T (S(1) = 0)
  std::vector<double> m_path;  // M(tau)
};

// err_t = portfolio_t - index_t.
TrackingErrors tracking_errors(const std::vector<double>& portfolio_returns,
                               const std::vector<double>& index_returns);

}  // namespace ivlasso::eval
