#include "ivlasso/sample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ivlasso {

void IntervalSample::validate() const {
  if (responses.empty()) throw std::invalid_argument("sample: T must be >= 1");
  if (regressors.size() != responses.size())
    throw std::invalid_argument("sample: regressor rows != response length");
  const std::size_t p0 = regressors.front().size();
  if (p0 == 0) throw std::invalid_argument("sample: p must be >= 1");
  if (!column_names.empty() && column_names.size() != p0)
    throw std::invalid_argument("sample: column_names length != p");
  for (std::size_t t = 0; t < regressors.size(); ++t) {
    if (regressors[t].size() != p0)
      throw std::invalid_argument("sample: ragged row at t=" + std::to_string(t));
    if (!std::isfinite(responses[t].left) || !std::isfinite(responses[t].right))
      throw std::invalid_argument("sample: non-finite response at t=" +
                                  std::to_string(t));
    for (const Interval& iv : regressors[t])
      if (!std::isfinite(iv.left) || !std::isfinite(iv.right))
        throw std::invalid_argument("sample: non-finite regressor at t=" +
                                    std::to_string(t));
  }
}

IntervalSample IntervalSample::rows(const std::vector<int>& idx) const {
  IntervalSample out;
  out.column_names = column_names;
  out.responses.reserve(idx.size());
  out.regressors.reserve(idx.size());
  for (int i : idx) {
    out.responses.push_back(responses.at(i));
    out.regressors.push_back(regressors.at(i));
  }
  return out;
}

IntervalSample IntervalSample::head(int n) const {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return rows(idx);
}

bool is_constant_column(const IntervalSample& s, int j) {
  for (const auto& row : s.regressors)
    if (!(row[j] == kConstInterval)) return false;
  return true;
}

bool is_unit_column(const IntervalSample& s, int j) {
  for (const auto& row : s.regressors)
    if (!(row[j] == kUnitInterval)) return false;
  return true;
}

std::vector<bool> intercept_columns(const IntervalSample& s) {
  std::vector<bool> mask(s.p(), false);
  for (int j = 0; j < s.p(); ++j)
    mask[j] = is_constant_column(s, j) || is_unit_column(s, j);
  return mask;
}

IntervalSample with_intercept_columns(const IntervalSample& s) {
  IntervalSample out;
  out.responses = s.responses;
  out.column_names.reserve(s.column_names.size() + 2);
  out.column_names.push_back("const");
  out.column_names.push_back("I0");
  for (const auto& n : s.column_names) out.column_names.push_back(n);
  out.regressors.reserve(s.regressors.size());
  for (const auto& row : s.regressors) {
    IntervalVector r;
    r.reserve(row.size() + 2);
    r.push_back(kConstInterval);
    r.push_back(kUnitInterval);
    r.insert(r.end(), row.begin(), row.end());
    out.regressors.push_back(std::move(r));
  }
  return out;
}

Standardization Standardization::fit(const IntervalSample& s, const Kernel& k) {
  s.validate();
  const int t = s.t();
  const int p = s.p();
  Standardization out;
  out.shift_.assign(p, 0.0);
  out.scale_.assign(p, 1.0);

  const std::vector<bool> intercepts = intercept_columns(s);
  for (int j = 0; j < p; ++j)
    if (intercepts[j] && is_constant_column(s, j)) {
      out.const_col_ = j;
      break;
    }

  for (int j = 0; j < p; ++j) {
    if (intercepts[j]) continue;
    double mid = 0.0;
    for (int i = 0; i < t; ++i) mid += s.regressors[i][j].midpoint();
    mid /= t;
    const double shift = out.const_col_ >= 0 ? mid : 0.0;
    double self = 0.0;
    const Interval delta{shift, shift};
    for (int i = 0; i < t; ++i) self += k.norm_sq(s.regressors[i][j] - delta);
    const double scale = std::sqrt(self / t);
    out.shift_[j] = shift;
    out.scale_[j] = scale > 1e-300 ? scale : 1.0;  // degenerate columns pass
  }

  if (out.const_col_ >= 0) {
    double ymid = 0.0;
    for (int i = 0; i < t; ++i) ymid += s.responses[i].midpoint();
    out.y_shift_ = ymid / t;
  }
  return out;
}

Standardization Standardization::identity(int p) {
  Standardization out;
  out.shift_.assign(p, 0.0);
  out.scale_.assign(p, 1.0);
  return out;
}

IntervalVector Standardization::apply_row(const IntervalVector& row) const {
  if (row.size() != scale_.size())
    throw std::invalid_argument("Standardization: row length mismatch");
  IntervalVector out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    const Interval shifted = row[j] - Interval{shift_[j], shift_[j]};
    out[j] = (1.0 / scale_[j]) * shifted;
  }
  return out;
}

Interval Standardization::apply_response(Interval y) const {
  return y - Interval{y_shift_, y_shift_};
}

Interval Standardization::restore_response(Interval y) const {
  return y + Interval{y_shift_, y_shift_};
}

IntervalSample Standardization::apply(const IntervalSample& s) const {
  IntervalSample out;
  out.column_names = s.column_names;
  out.responses.reserve(s.responses.size());
  out.regressors.reserve(s.regressors.size());
  for (const Interval& y : s.responses) out.responses.push_back(apply_response(y));
  for (const auto& row : s.regressors) out.regressors.push_back(apply_row(row));
  return out;
}

Eigen::VectorXd Standardization::restore_coefficients(
    const Eigen::VectorXd& coef) const {
  if (coef.size() != static_cast<Eigen::Index>(scale_.size()))
    throw std::invalid_argument("Standardization: coefficient length mismatch");
  Eigen::VectorXd out(coef.size());
  for (Eigen::Index j = 0; j < coef.size(); ++j)
    out[j] = coef[j] == 0.0 ? 0.0 : coef[j] / scale_[j];
  if (const_col_ >= 0) {
    double adjust = y_shift_;
    for (Eigen::Index j = 0; j < coef.size(); ++j) adjust -= out[j] * shift_[j];
    out[const_col_] += adjust;
  }
  return out;
}

}  // namespace ivlasso
