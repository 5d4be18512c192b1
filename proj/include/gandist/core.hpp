#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gandist {

/// A support point of a discrete measure; coordinates live in the open unit cube.
using Point = std::vector<double>;

// Numerical safe box inside (0,1)^d. Atoms are validated against it and
// generator outputs are clamped onto it; clamping is a 1-Lipschitz projection.
inline constexpr double kCubeMargin = 1e-9;

enum class NormP { l1, l2, linf };

/// Which l_p norm the run uses. One run should use a single NormSpec throughout.
struct NormSpec {
  NormP p = NormP::l2;

  static NormSpec l1() { return {NormP::l1}; }
  static NormSpec l2() { return {NormP::l2}; }
  static NormSpec linf() { return {NormP::linf}; }

  // 1/p with the convention 1/p = 0 for p = infinity.
  double inv_exponent() const {
    switch (p) {
      case NormP::l1: return 1.0;
      case NormP::l2: return 0.5;
      case NormP::linf: return 0.0;
    }
    return 0.0;
  }

  double distance(const Point& a, const Point& b) const {
    if (a.size() != b.size())
      throw std::invalid_argument("NormSpec::distance: dimension mismatch");
    double acc = 0.0;
    switch (p) {
      case NormP::l1:
        for (size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
        return acc;
      case NormP::l2:
        for (size_t i = 0; i < a.size(); ++i) {
          const double d = a[i] - b[i];
          acc += d * d;
        }
        return std::sqrt(acc);
      case NormP::linf:
        for (size_t i = 0; i < a.size(); ++i)
          acc = std::max(acc, std::abs(a[i] - b[i]));
        return acc;
    }
    return acc;
  }

  // Diameter of the unit cube in this norm: d^{1/p}.
  double cube_diameter(int dim) const {
    return std::pow(static_cast<double>(dim), inv_exponent());
  }

  std::string name() const {
    switch (p) {
      case NormP::l1: return "1";
      case NormP::l2: return "2";
      case NormP::linf: return "inf";
    }
    return "?";
  }

  static NormSpec parse(const std::string& s) {
    if (s == "1") return l1();
    if (s == "2") return l2();
    if (s == "inf" || s == "Inf" || s == "INF") return linf();
    throw std::invalid_argument("unknown norm '" + s + "' (expected 1|2|inf)");
  }
};

/// Seedable deterministic generator (std::mt19937_64 core). Uniform doubles are
/// produced from the top 53 bits so streams are bit-identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  uint64_t uniform_index(uint64_t n) {
    // modulo bias is irrelevant at our n << 2^64 scales
    return gen_() % n;
  }

 private:
  std::mt19937_64 gen_;
};

inline double clamp_to_cube_coord(double x) {
  return std::min(1.0 - kCubeMargin, std::max(kCubeMargin, x));
}

inline Point clamp_to_cube(Point x) {
  for (double& c : x) c = clamp_to_cube_coord(c);
  return x;
}

inline bool inside_cube(const Point& x) {
  for (double c : x)
    if (!(c >= kCubeMargin && c <= 1.0 - kCubeMargin)) return false;
  return true;
}

// max(x, sqrt(x)); the bracket [x]^{1;1/2} used by the oracle-type bounds.
inline double power_bracket(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("power_bracket: requires x > 0");
  return std::max(x, std::sqrt(x));
}

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_slope: need >= 2 matched samples");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace gandist
