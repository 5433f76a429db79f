#pragma once

// Reference values computed without the library's code paths: closed forms,
// brute-force sums and hand-typed published polynomials.

#include "cfvar/exact.hpp"
#include "cfvar/invariant_algebra.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

/// Q1, Q2 of h^alpha_ij by plain index loops.
inline std::pair<double, double> q1_q2(const std::vector<Eigen::MatrixXd>& h, int p, int q) {
  const int m = static_cast<int>(h.front().rows());
  double q1 = 0, q2 = 0;
  for (int a = 0; a < static_cast<int>(h.size()); ++a) {
    const double ea = a < q ? -1.0 : 1.0;
    double tr = 0;
    for (int i = 0; i < m; ++i) {
      const double ei = i < p ? -1.0 : 1.0;
      tr += ei * h[a](i, i);
      for (int j = 0; j < m; ++j) {
        const double ej = j < p ? -1.0 : 1.0;
        q1 += ea * ei * ej * h[a](i, j) * h[a](i, j);
      }
    }
    q2 += ea * tr * tr;
  }
  return {q1, q2};
}

inline std::vector<Eigen::MatrixXd> random_slices(int m, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Eigen::MatrixXd> out;
  for (int a = 0; a < n; ++a) {
    Eigen::MatrixXd s(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) s(i, j) = s(j, i) = u(rng);
    out.push_back(s);
  }
  return out;
}

/// Trace powers of a list of (curvature, multiplicity).
struct Traces {
  double p1 = 0, p2 = 0, p3 = 0;
  int m = 0;
};

inline Traces traces(const std::vector<std::pair<double, int>>& spec) {
  Traces t;
  for (auto [k, mult] : spec) {
    t.p1 += mult * k;
    t.p2 += mult * k * k;
    t.p3 += mult * k * k * k;
    t.m += mult;
  }
  return t;
}

/// Chern-Federer condition c(m-1) trA - trA trA^2 + trA^3 of a hypersurface.
inline double cf_condition(const std::vector<std::pair<double, int>>& spec, double c) {
  const Traces t = traces(spec);
  return c * (t.m - 1) * t.p1 - t.p1 * t.p2 + t.p3;
}

/// Principal curvatures cot(t + j pi / g) of the spherical family.
inline std::vector<std::pair<double, int>> cot_spectrum(int g, const std::vector<int>& mult, double t) {
  std::vector<std::pair<double, int>> s;
  for (int j = 0; j < g; ++j) s.emplace_back(1.0 / std::tan(t + j * kPi / g), mult[static_cast<std::size_t>(j)]);
  return s;
}

/// Mean curvature of S^1(r1) x S^1(r2) in S^3 with curvatures r2/r1, -r1/r2.
inline double clifford_h(double r1) {
  const double r2 = std::sqrt(1 - r1 * r1);
  return 0.5 * (r2 / r1 - r1 / r2);
}

/// Integral invariants of the Clifford torus (constant densities times area).
inline double clifford_iq1(double r1) {
  const double r2 = std::sqrt(1 - r1 * r1);
  return 4 * kPi * kPi * r1 * r2 * (r2 * r2 / (r1 * r1) + r1 * r1 / (r2 * r2));
}
inline double clifford_iq2(double r1) {
  const double r2 = std::sqrt(1 - r1 * r1);
  const double t = r2 / r1 - r1 / r2;
  return 4 * kPi * kPi * r1 * r2 * t * t;
}

/// Willmore energy int H^2 dA of the torus of revolution with radii a > b.
inline double rotation_torus_willmore(double a, double b) {
  const double k = a / b;
  return kPi * kPi * k * k / std::sqrt(k * k - 1);
}

/// Integer polynomial from ascending coefficients.
inline cfvar::Polynomial poly_asc(const std::vector<long long>& asc) {
  std::vector<cfvar::Rational> c;
  for (long long v : asc) c.emplace_back(v);
  return cfvar::Polynomial(c);
}

/// Published g = 2 condition: p(p-1)l^6 - p(2m-p-1)l^4 + (m-p)(m+p-1)l^2 - (m-p)(m-p-1).
inline cfvar::Polynomial g2_polynomial(long long p, long long m) {
  return poly_asc({-(m - p) * (m - p - 1), 0, (m - p) * (m + p - 1), 0, -p * (2 * m - p - 1), 0, p * (p - 1)});
}

/// Published g = 4 conditions, even in l, listed as coefficients of l^0, l^2, ...
inline cfvar::Polynomial even_poly(const std::vector<long long>& c) {
  std::vector<long long> asc;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) asc.push_back(0);
    asc.push_back(c[k]);
  }
  return poly_asc(asc);
}
inline cfvar::Polynomial g4_2_polynomial() { return even_poly({3, -40, 223, -692, 223, -40, 3}); }
inline cfvar::Polynomial g4_3_polynomial() { return even_poly({12, -111, 488, -1098, 488, -111, 12}); }
inline cfvar::Polynomial g4_4_polynomial(long long m) {
  const long long a = -4 * (2 * m - 1), b = 72 * m - 85, c = -32 * (4 * m * m - 10 * m + 7);
  return even_poly({1, a, b, c, b, a, 1});
}
inline cfvar::Polynomial g4_5_polynomial(long long m) {
  const long long a = 2 * m - 3, b = -4 * (5 * m - 9), c = 2 * (16 * m * m - 62 * m + 63);
  return even_poly({a, b, c, b, a});
}
inline cfvar::Polynomial g4_6_polynomial(long long m) {
  const long long a = -16 * m, b = 136 * m - 117, c = -4 * (64 * m * m - 116 * m + 63);
  return even_poly({3, a, b, c, b, a, 3});
}
/// (l^2 - 3)(3l^3 - 3l^2 - 9l + 1)(3l^3 + 3l^2 - 9l - 1)
inline cfvar::Polynomial g3_2_product() {
  return poly_asc({-3, 0, 1}) * poly_asc({1, -9, -3, 3}) * poly_asc({-1, -9, 3, 3});
}

}  // namespace oracle
