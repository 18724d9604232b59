#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "ivlasso/gram.hpp"
#include "ivlasso/sample.hpp"

namespace ivlasso::bench {

struct SingularDesignError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BoundsMethod { Crm, Ccrm, Blu };

// Point-valued reference fits. Coefficient vectors are aligned with the
// sample's p columns; columns that degenerate under a transform (the I0
// column has zero midpoints, the [1,1] column zero ranges, and only the first
// constant column per equation is kept) carry structural zeros.
struct BoundsFit {
  BoundsMethod method = BoundsMethod::Crm;
  Eigen::VectorXd first;   // center (CRM/CCRM) or lower-bound (BLU) equation
  Eigen::VectorXd second;  // range (CRM/CCRM) or upper-bound (BLU) equation

  const Eigen::VectorXd& center() const { return first; }
  const Eigen::VectorXd& range() const { return second; }
  const Eigen::VectorXd& lower() const { return first; }
  const Eigen::VectorXd& upper() const { return second; }
};

// Center-range method: independent OLS of midpoints on midpoints and ranges
// on ranges.
BoundsFit crm_fit(const IntervalSample& s);

// Constrained center-range method: center as CRM, range by nonnegative least
// squares (every range coefficient clamped at >= 0, intercept included).
BoundsFit ccrm_fit(const IntervalSample& s);

// Bivariate lower/upper-bound model: independent OLS per bound.
BoundsFit blu_fit(const IntervalSample& s);

Interval predict(const BoundsFit& fit, const IntervalVector& row);

// Lawson-Hanson active-set nonnegative least squares: min ||A x - b||, x >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                     double tol = 1e-10);

// The unpenalized ACIX estimator; same routine the estimators module uses.
inline Eigen::VectorXd acix_estimate(const GramSystem& gs) {
  return min_dk_estimate(gs);
}

}  // namespace ivlasso::bench
