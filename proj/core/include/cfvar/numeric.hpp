#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace cfvar {

/// Pairwise (cascade) summation over a fixed, row-major ordering of terms.
/// Every aggregate in the library goes through this so that results are
/// bit-reproducible for a given input.
inline double pairwise_sum(std::span<const double> terms) {
  const std::size_t n = terms.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

inline double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Observed convergence order from errors at step h and h/ratio.
inline double observed_order(double coarse_error, double fine_error, double ratio = 2.0) {
  return std::log(coarse_error / fine_error) / std::log(ratio);
}

/// Richardson extrapolation of a quantity computed at step h (coarse) and
/// h/2 (fine) with a method of the given order.
inline double richardson(double coarse, double fine, int order) {
  const double f = std::pow(2.0, order);
  return (f * fine - coarse) / (f - 1.0);
}

}  // namespace cfvar
