#pragma once

#include "cfvar/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cfvar {

/// Real number of the form q or sqrt(q) with rational q >= 0, or +infinity.
struct ExactPoint {
  Rational q = 0;
  bool is_sqrt = false;
  bool infinite = false;

  static ExactPoint rational(const Rational& v) { return {v, false, false}; }
  static ExactPoint sqrt_of(const Rational& v) { return {v, true, false}; }
  static ExactPoint infinity() { return {0, false, true}; }

  double approx() const;
  std::string to_string() const;
};

/// Sign (-1, 0, +1) of p at an exact point; at infinity, the sign of the
/// leading coefficient.
int sign_at(const Polynomial& p, const ExactPoint& x);

/// Exact comparison of two points (-1, 0, +1).
int compare(const ExactPoint& a, const ExactPoint& b);

/// Open interval (lo, hi).
struct OpenInterval {
  ExactPoint lo;
  ExactPoint hi;
  std::string to_string() const;
};

struct RootEnclosure {
  Rational lo;
  Rational hi;
  bool exact = false;  ///< lo == hi is the root itself
  double midpoint() const { return 0.5 * (to_double(lo) + to_double(hi)); }
  double width() const { return to_double(hi - lo); }
  bool contains(double x) const { return to_double(lo) <= x && x <= to_double(hi); }
};

struct RootIsolation {
  bool identically_zero = false;  ///< zero polynomial: condition holds everywhere
  std::vector<RootEnclosure> roots;
  int removed_boundary_factors = 0;  ///< multiplicity of roots sitting exactly on the endpoints
};

/// Sturm sequence of p (p, p', -rem, ...).
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots of the square-free polynomial whose Sturm
/// sequence is given, in the half-open interval (a, b].
int sturm_count(const std::vector<Polynomial>& seq, const ExactPoint& a, const ExactPoint& b);

/// Disjoint rational enclosures of every real root of p inside the open
/// interval, each refined to width <= tol.  Roots lying exactly on a finite
/// endpoint are divided out first and counted in removed_boundary_factors.
RootIsolation isolate_roots(const Polynomial& p, const OpenInterval& interval, double tol = 1e-12);

}  // namespace cfvar
