#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivlasso {

// Extended interval: an ordered pair of bounds where right < left is a legal
// value. Reversed intervals keep the algebra closed under Hukuhara
// differences and negative scaling, so none of the operations below re-sort
// the bounds.
struct Interval {
  double left = 0.0;
  double right = 0.0;

  double midpoint() const { return 0.5 * (left + right); }
  double range() const { return right - left; }
  double radius() const { return 0.5 * (right - left); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline constexpr Interval kConstInterval{1.0, 1.0};
inline constexpr Interval kUnitInterval{-0.5, 0.5};  // I0

inline Interval operator+(Interval x, Interval y) {
  return {x.left + y.left, x.right + y.right};
}

// Hukuhara difference.
inline Interval operator-(Interval x, Interval y) {
  return {x.left - y.left, x.right - y.right};
}

inline Interval operator*(double k, Interval x) {
  return {k * x.left, k * x.right};
}

// Support function on the unit sphere {-1,+1}. The closed form s(+1)=right,
// s(-1)=-left agrees with the sup/inf definition for ordered and reversed
// bounds alike.
inline double support_value(Interval iv, int direction) {
  if (direction == 1) return iv.right;
  if (direction == -1) return -iv.left;
  throw std::invalid_argument("support_value: direction must be +1 or -1");
}

// Symmetric positive definite kernel on {-1,+1}; a = K(1,1),
// b = K(1,-1) = K(-1,1), c = K(-1,-1). Validity is enforced here once;
// downstream code never re-checks.
class Kernel {
 public:
  Kernel() : Kernel(1.0, 0.0, 1.0) {}
  Kernel(double a, double b, double c) : a_(a), b_(b), c_(c) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)))
      throw std::invalid_argument("Kernel: parameters must be finite");
    if (!(a > 0.0 && c > 0.0 && a * c - b * b > 0.0))
      throw std::invalid_argument(
          "Kernel: requires a > 0, c > 0 and a*c - b^2 > 0");
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  // <x,y>_K: the four-term support-function sum collapsed to its a/b/c
  // expansion.
  double inner(Interval x, Interval y) const {
    return a_ * x.right * y.right - b_ * (x.right * y.left + x.left * y.right) +
           c_ * x.left * y.left;
  }

  double norm_sq(Interval x) const { return inner(x, x); }

  // Squared D_K distance between two intervals.
  double distance_sq(Interval x, Interval y) const { return norm_sq(x - y); }

  // a - 2b + c: the factor by which the loss scales on degenerate
  // (point) intervals.
  double point_factor() const { return a_ - 2.0 * b_ + c_; }

  static Kernel case1() { return Kernel(0.25, -0.25, 0.25); }  // midpoint loss
  static Kernel case2() { return Kernel(1.0, 1.0, 1.0); }      // range loss

 private:
  double a_, b_, c_;
};

using IntervalVector = std::vector<Interval>;

// Z'theta under the interval operation rules; left/right bounds combine
// componentwise, so negative coefficients may produce reversed intervals.
template <class Coeffs>
Interval linear_combination(const IntervalVector& row, const Coeffs& theta) {
  if (static_cast<std::size_t>(theta.size()) != row.size())
    throw std::invalid_argument("linear_combination: length mismatch (" +
                                std::to_string(row.size()) + " intervals vs " +
                                std::to_string(theta.size()) + " coefficients)");
  Interval acc{0.0, 0.0};
  for (std::size_t j = 0; j < row.size(); ++j) acc = acc + theta[j] * row[j];
  return acc;
}

}  // namespace ivlasso
