#pragma once

// Exact rational arithmetic: univariate polynomials over Q, reduced rational
// functions with integer coefficients, and sparse multivariate polynomials
// used for parameter-symbolic identities.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace cfvar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
double to_double(const Rational& v);

/// Univariate polynomial, coefficients ascending by degree, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  static Polynomial constant(const Rational& c);
  static Polynomial x();
  /// From integer coefficients given in descending degree.
  static Polynomial from_descending(const std::vector<BigInt>& desc);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  ///< -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  Polynomial pow(int e) const;
  Polynomial derivative() const;
  /// Quotient and remainder; throws on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  /// Division that must be exact; throws otherwise.
  Polynomial exact_div(const Polynomial& d) const;
  bool divides(const Polynomial& f) const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  /// Multiplicity of the root x = 0.
  int zero_multiplicity() const;
  Polynomial strip_zero_root() const;

  /// Scalar multiple with integer coefficients of content 1 and positive
  /// leading coefficient.
  Polynomial primitive() const;
  /// Integer coefficients (requires integral coefficients), descending.
  std::vector<BigInt> integer_coefficients_descending() const;

  std::string to_string(const std::string& var = "l") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial operator*(const Rational& s, const Polynomial& p);
/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p').
Polynomial square_free_part(const Polynomial& p);

/// Reduced fraction num/den with integer coefficients: gcd(num, den) = 1,
/// joint content 1, positive leading denominator coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num);  // NOLINT(implicit)
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }
  static RationalFunction x() { return RationalFunction(Polynomial::x()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  RationalFunction pow(int e) const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;
  std::string to_string(const std::string& var = "l") const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// Sparse polynomial in a fixed number of variables with rational
/// coefficients.  Monomials are exponent vectors.
class MultiPoly {
 public:
  using Monomial = std::vector<int>;

  explicit MultiPoly(int nvars = 1) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  /// Embed a univariate polynomial as variable `index`.
  static MultiPoly from_univariate(int nvars, int index, const Polynomial& p);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(const Monomial& mono) const;
  int degree_in(int var) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& s) const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }
  MultiPoly pow(int e) const;

  /// Substitute variable `var` := value.
  MultiPoly substitute(int var, const Rational& value) const;
  /// Univariate polynomial in `var`, requires all other exponents zero.
  Polynomial to_univariate(int var) const;

  /// Scalar multiple with integer coefficients of content 1 whose leading
  /// term (in lexicographic order of exponent vectors, largest first) is
  /// positive.
  MultiPoly primitive() const;
  /// Strips the largest power of variable `var` dividing every term.
  MultiPoly strip_variable_power(int var, int* power = nullptr) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  int nvars_;
  std::map<Monomial, Rational> t_;
};

/// Parses +, -, *, ^ (non-negative integer exponents), integers, parentheses
/// and the given variable names.  Throws InvalidArgumentError on bad input.
MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

/// Interpolating polynomial of minimal degree through (nodes[k], values[k]).
Polynomial lagrange_interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

}  // namespace cfvar
