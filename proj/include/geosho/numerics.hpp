#pragma once

// Shared numerical utilities: the seeded RNG used for reproducible sweeps,
// finite-difference stencils, trapezoid quadrature, principal-angle
// reduction and the zero-crossing frequency fit.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "geosho/errors.hpp"
#include "geosho/linalg.hpp"

namespace geosho {

inline constexpr double pi = std::numbers::pi;

// splitmix64: tiny, fast, and fully specified, so seeded sweeps reproduce
// bit-for-bit across platforms.  (Steele, Lea & Flood, OOPSLA 2014.)
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4B7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // One Gaussian deviate per call (Box-Muller, no cached spare, so the
  // stream position is a pure function of the call count).
  double gaussian() {
    const double u = 1.0 - uniform();  // (0, 1]: keeps log() finite
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * pi * v);
  }
};

// Reduce an angle to the principal branch (-pi, pi].
inline double principal_angle(double x) {
  double y = std::remainder(x, 2.0 * pi);  // lands in [-pi, pi]
  if (y <= -pi) y += 2.0 * pi;
  return y;
}

// Winding count k with  x = principal_angle(x) + 2*pi*k.
inline long long winding_count(double x) {
  return std::llround((x - principal_angle(x)) / (2.0 * pi));
}

// Distance between two angles on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
  return std::abs(principal_angle(a - b));
}

// --- three-point finite differences -------------------------------------
//
// The non-uniform forms take the two local spacings h1 = t1-t0, h2 = t2-t1
// and evaluate the derivative at the middle node.  On a uniform grid they
// reduce to the familiar central stencils; on a smoothly varying grid
// (h2-h1 = O(h^2)) they stay second-order accurate.

inline double fd_first(double h1, double h2, double f0, double f1, double f2) {
  return (h1 * h1 * f2 - h2 * h2 * f0 + (h2 * h2 - h1 * h1) * f1) /
         (h1 * h2 * (h1 + h2));
}

inline double fd_second(double h1, double h2, double f0, double f1, double f2) {
  return 2.0 * (h2 * f0 - (h1 + h2) * f1 + h1 * f2) / (h1 * h2 * (h1 + h2));
}

inline double central_first(double fm, double fp, double h) { return (fp - fm) / (2.0 * h); }

inline double central_second(double fm, double f0, double fp, double h) {
  return (fm - 2.0 * f0 + fp) / (h * h);
}

// One-sided second-order first derivative at the left end of (f0, f1, f2).
inline double forward_first(double f0, double f1, double f2, double h) {
  return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
}

// --- quadrature -----------------------------------------------------------

inline double trapezoid(const rvec& f, double h) {
  if (f.size() < 2) throw ContractError("trapezoid: need at least 2 samples");
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return s * h;
}

inline rvec cumulative_trapezoid(const rvec& f, double h) {
  rvec out(f.size(), 0.0);
  for (std::size_t i = 1; i < f.size(); ++i)
    out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  return out;
}

inline double trapezoid_nonuniform(const rvec& t, const rvec& f) {
  if (t.size() != f.size()) throw ContractError("trapezoid: grid/sample length mismatch");
  if (t.size() < 2) throw ContractError("trapezoid: need at least 2 samples");
  double s = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i)
    s += 0.5 * (t[i] - t[i - 1]) * (f[i - 1] + f[i]);
  return s;
}

inline rvec cumulative_trapezoid_nonuniform(const rvec& t, const rvec& f) {
  if (t.size() != f.size()) throw ContractError("trapezoid: grid/sample length mismatch");
  rvec out(f.size(), 0.0);
  for (std::size_t i = 1; i < t.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (t[i] - t[i - 1]) * (f[i - 1] + f[i]);
  return out;
}

// --- oscillation frequency from zero crossings ----------------------------
//
// The signal is centered on its mean, crossing times are located by linear
// interpolation inside each sign-change bracket, and the angular frequency
// is pi over the mean interval between the outermost crossings of the same
// direction:
//   omega = pi * L / (t[c_L] - t[c_0]),  L the largest even crossing index.
// The sample mean over a window holding a fractional number of periods is
// offset from the true oscillation center, which shifts every rising
// crossing by one fixed amount and every falling crossing by another; a span
// with an even index difference pairs like with like, so the offset cancels
// exactly and only interpolation error at the two end brackets survives.
// With just two crossings there is no same-direction pair and the adjacent
// half-period is used as is.

struct FrequencyFit {
  double omega = 0.0;
  int crossings = 0;
};

inline FrequencyFit zero_crossing_frequency(const rvec& t, const rvec& x) {
  if (t.size() != x.size()) throw ContractError("zero_crossing_frequency: length mismatch");
  if (t.size() < 3) throw ContractError("zero_crossing_frequency: need at least 3 samples");

  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());

  std::vector<double> crossings;
  double prev = x[0] - mean;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double cur = x[i] - mean;
    if (prev == 0.0) {
      crossings.push_back(t[i - 1]);
    } else if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) {
      const double frac = prev / (prev - cur);
      crossings.push_back(t[i - 1] + frac * (t[i] - t[i - 1]));
    }
    prev = cur;
  }

  if (crossings.size() < 2)
    throw DomainError("zero_crossing_frequency: fewer than 2 zero crossings (" +
                      std::to_string(crossings.size()) + "); signal does not oscillate on this window");

  FrequencyFit fit;
  fit.crossings = static_cast<int>(crossings.size());
  std::size_t last = crossings.size() - 1;
  if (last >= 2 && last % 2 == 1) --last;
  fit.omega = pi * static_cast<double>(last) / (crossings[last] - crossings.front());
  return fit;
}

}  // namespace geosho
