#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

namespace ivlasso {

// splitmix64 finalizer; used to derive engine seeds from (master, stream).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 with an explicit Box-Muller normal, so draws are reproducible
// bit-for-bit for a given seed independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream derived from one master seed; replication r of a
  // Monte Carlo run uses stream(master, r).
  static Rng stream(std::uint64_t master, std::uint64_t stream_id) {
    return Rng(mix64(mix64(master) ^ (stream_id + 0x632be59bd9b4e019ULL)));
  }

  std::uint64_t bits() { return engine_(); }

  // Uniform on (0,1]; never 0, so log() below is safe.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double uniform_in(double lo, double hi) {
    return lo + (hi - lo) * uniform();
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Mean-zero bivariate normal sampler for a 2x2 covariance, via Cholesky.
class BivariateNormal {
 public:
  BivariateNormal(double var1, double var2, double cov) {
    const double det = var1 * var2 - cov * cov;
    if (!(var1 > 0.0 && var2 > 0.0 && det > 0.0))
      throw std::invalid_argument(
          "BivariateNormal: covariance matrix must be positive definite");
    l11_ = std::sqrt(var1);
    l21_ = cov / l11_;
    l22_ = std::sqrt(var2 - l21_ * l21_);
  }

  std::pair<double, double> draw(Rng& rng) const {
    const double z1 = rng.normal();
    const double z2 = rng.normal();
    return {l11_ * z1, l21_ * z1 + l22_ * z2};
  }

 private:
  double l11_, l21_, l22_;
};

}  // namespace ivlasso
