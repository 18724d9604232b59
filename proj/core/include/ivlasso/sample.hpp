#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ivlasso/interval.hpp"

namespace ivlasso {

// One interval-valued regression dataset: a response series plus a regressor
// panel. Rows are time points, columns are regressors in model order
// (typically [1,1], I0, then the substantive columns).
struct IntervalSample {
  std::vector<Interval> responses;         // length T
  std::vector<IntervalVector> regressors;  // T rows of length p
  std::vector<std::string> column_names;   // length p (may be empty)

  int t() const { return static_cast<int>(responses.size()); }
  int p() const {
    return regressors.empty() ? 0 : static_cast<int>(regressors.front().size());
  }

  // Throws std::invalid_argument on ragged rows, empty data, or non-finite
  // bounds.
  void validate() const;

  IntervalSample rows(const std::vector<int>& idx) const;
  IntervalSample head(int n) const;
};

bool is_constant_column(const IntervalSample& s, int j);  // every entry [1,1]
bool is_unit_column(const IntervalSample& s, int j);      // every entry I0

// true for columns that act as intercepts ([1,1] or I0); these are left
// unstandardized and, by default, unpenalized.
std::vector<bool> intercept_columns(const IntervalSample& s);

// Prepends the [1,1] and I0 columns (named "const" and "I0").
IntervalSample with_intercept_columns(const IntervalSample& s);

// Column centering/scaling fitted on one sample and applied to others
// (rolling forecasts apply training-window statistics to the forecast row).
//
// Non-intercept columns are centered by their midpoint mean and scaled so the
// per-column D_K self-moment G_jj/T is 1; the response is centered by its
// midpoint mean only. Centering requires a [1,1] column to absorb the shifts
// when coefficients are mapped back; without one, only scaling is applied.
class Standardization {
 public:
  static Standardization fit(const IntervalSample& s, const Kernel& k);
  static Standardization identity(int p);

  IntervalSample apply(const IntervalSample& s) const;
  IntervalVector apply_row(const IntervalVector& row) const;
  Interval apply_response(Interval y) const;
  Interval restore_response(Interval y) const;

  // Maps coefficients fitted on the standardized sample back to natural
  // units; exact zeros stay exact.
  Eigen::VectorXd restore_coefficients(const Eigen::VectorXd& coef) const;

  double scale(int j) const { return scale_[j]; }
  double shift(int j) const { return shift_[j]; }
  double response_shift() const { return y_shift_; }
  bool centered() const { return const_col_ >= 0; }

 private:
  std::vector<double> shift_;  // midpoint shift per column (0 for intercepts)
  std::vector<double> scale_;  // divisor per column (1 for intercepts)
  double y_shift_ = 0.0;
  int const_col_ = -1;  // index of the [1,1] column, -1 if absent
};

}  // namespace ivlasso
