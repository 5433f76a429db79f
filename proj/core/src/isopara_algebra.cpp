#include "cfvar/isopara_algebra.hpp"

#include "cfvar/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace cfvar {

std::string to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::CF: return "CF";
    case ConditionKind::Q1: return "Q1";
    case ConditionKind::Q2: return "Q2";
    case ConditionKind::WC: return "WC";
  }
  return "?";
}

ConditionKind parse_condition_kind(const std::string& s) {
  std::string u = s;
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char ch) { return std::toupper(ch); });
  if (u == "CF") return ConditionKind::CF;
  if (u == "Q1") return ConditionKind::Q1;
  if (u == "Q2") return ConditionKind::Q2;
  if (u == "WC") return ConditionKind::WC;
  throw InvalidArgumentError("unknown condition kind '" + s + "'");
}

SpectrumGroup SpectrumGroup::single(RationalFunction v, int mult) {
  if (mult <= 0) throw InvalidArgumentError("multiplicities must be positive");
  SpectrumGroup g;
  g.multiplicity = mult;
  g.value = std::move(v);
  return g;
}

SpectrumGroup SpectrumGroup::pair(RationalFunction e1, RationalFunction e2, int mult) {
  if (mult <= 0) throw InvalidArgumentError("multiplicities must be positive");
  SpectrumGroup g;
  g.multiplicity = mult;
  g.paired = true;
  g.e1 = std::move(e1);
  g.e2 = std::move(e2);
  return g;
}

int PrincipalSpectrum::m() const {
  int m = 0;
  for (const auto& g : groups) m += g.multiplicity * (g.paired ? 2 : 1);
  return m;
}

int PrincipalSpectrum::distinct() const {
  int n = 0;
  for (const auto& g : groups) n += g.paired ? 2 : 1;
  return n;
}

int NumericSpectrum::m() const {
  int m = 0;
  for (const auto& e : entries) m += e.second;
  return m;
}

TracePowers<RationalFunction> trace_powers(const PrincipalSpectrum& s) {
  TracePowers<RationalFunction> t;
  for (const auto& g : s.groups) {
    const RationalFunction mu = RationalFunction::constant(g.multiplicity);
    if (g.paired) {
      // Newton's identities for two variables
      const RationalFunction& e1 = g.e1;
      const RationalFunction& e2 = g.e2;
      const RationalFunction two = RationalFunction::constant(2);
      const RationalFunction three = RationalFunction::constant(3);
      t.p1 += mu * e1;
      t.p2 += mu * (e1 * e1 - two * e2);
      t.p3 += mu * (e1 * e1 * e1 - three * e1 * e2);
    } else {
      const RationalFunction& v = g.value;
      t.p1 += mu * v;
      t.p2 += mu * v * v;
      t.p3 += mu * v * v * v;
    }
  }
  return t;
}

TracePowers<double> trace_powers(const NumericSpectrum& s) {
  TracePowers<double> t;
  for (const auto& [l, mu] : s.entries) {
    t.p1 += mu * l;
    t.p2 += mu * l * l;
    t.p3 += mu * l * l * l;
  }
  return t;
}


RationalFunction condition_value(const PrincipalSpectrum& s, ConditionKind kind) {
  const auto t = trace_powers(s);
  const RationalFunction c = RationalFunction::constant(s.c);
  const RationalFunction m = RationalFunction::constant(s.m());
  const RationalFunction one = RationalFunction::constant(1);
  switch (kind) {
    case ConditionKind::CF: return c * (m - one) * t.p1 - t.p1 * t.p2 + t.p3;
    case ConditionKind::Q1: return c * t.p1 - t.p3;
    case ConditionKind::Q2: return (m * c - t.p2) * t.p1;
    case ConditionKind::WC: return t.p1 * t.p2 - m * t.p3;
  }
  throw InvalidArgumentError("unknown condition kind");
}

double condition_value(const NumericSpectrum& s, ConditionKind kind) {
  const auto t = trace_powers(s);
  const double c = s.c;
  const double m = s.m();
  switch (kind) {
    case ConditionKind::CF: return c * (m - 1) * t.p1 - t.p1 * t.p2 + t.p3;
    case ConditionKind::Q1: return c * t.p1 - t.p3;
    case ConditionKind::Q2: return (m * c - t.p2) * t.p1;
    case ConditionKind::WC: return t.p1 * t.p2 - m * t.p3;
  }
  throw InvalidArgumentError("unknown condition kind");
}

namespace {

void validate_family(int g, const std::vector<int>& mult) {
  if (g != 1 && g != 2 && g != 3 && g != 4 && g != 6)
    throw InvalidArgumentError("spherical isoparametric families exist only for g in {1,2,3,4,6}");
  if (static_cast<int>(mult.size()) != g) throw InvalidArgumentError("need one multiplicity per principal curvature");
  for (int k : mult)
    if (k <= 0) throw InvalidArgumentError("multiplicities must be positive");
  for (int j = 1; j < g - j; ++j)
    if (mult[static_cast<std::size_t>(j)] != mult[static_cast<std::size_t>(g - j)])
      throw InvalidArgumentError("curvatures " + std::to_string(j + 1) + " and " + std::to_string(g - j + 1) +
                                 " form a conjugate pair and must share a multiplicity");
}

/// cot^2(j pi / g) for the paired indices used by the catalog families.
Rational cot_squared(int g, int j) {
  const int twelfths = 12 * j / g;
  switch (twelfths) {
    case 2: return 3;                 // pi/6
    case 3: return 1;                 // pi/4
    case 4: return Rational(1, 3);    // pi/3
    case 6: return 0;                 // pi/2
    default: break;
  }
  throw InvalidArgumentError("cot^2 is not rational for this angle");
}

}  // namespace

PrincipalSpectrum spherical_family_spectrum(int g, const std::vector<int>& mult, const Rational& c) {
  validate_family(g, mult);
  PrincipalSpectrum s;
  s.c = c;
  const RationalFunction l = RationalFunction::x();
  const RationalFunction one = RationalFunction::constant(1);
  s.groups.push_back(SpectrumGroup::single(l, mult[0]));
  for (int j = 1; j < g; ++j) {
    if (j < g - j) {
      // cot(t + a) + cot(t - a) and their product, k^2 = cot^2 a
      const RationalFunction k2 = RationalFunction::constant(cot_squared(g, j));
      const RationalFunction den = k2 - l * l;
      const RationalFunction e1 = RationalFunction::constant(2) * l * (k2 + one) / den;
      const RationalFunction e2 = (l * l * k2 - one) / den;
      s.groups.push_back(SpectrumGroup::pair(e1, e2, mult[static_cast<std::size_t>(j)]));
    } else if (j == g - j) {
      s.groups.push_back(SpectrumGroup::single(-(one / l), mult[static_cast<std::size_t>(j)]));
    }
  }
  return s;
}

NumericSpectrum spherical_family_numeric(int g, const std::vector<int>& mult, double t, double c) {
  validate_family(g, mult);
  NumericSpectrum s;
  s.c = c;
  for (int j = 0; j < g; ++j) {
    const double a = t + j * std::numbers::pi / g;
    s.entries.emplace_back(std::cos(a) / std::sin(a), mult[static_cast<std::size_t>(j)]);
  }
  return s;
}

Polynomial structural_denominator(const PrincipalSpectrum& s) {
  Polynomial d = Polynomial::constant(1);
  for (const auto& g : s.groups) {
    const Polynomial gd = g.paired ? lcm(g.e1.den(), g.e2.den()) : g.value.den();
    d = lcm(d, gd.pow(3));
  }
  return d;
}

ConditionPolynomial canonicalize(const Polynomial& p, ConditionKind kind, std::string family) {
  ConditionPolynomial out;
  out.kind = kind;
  out.family = std::move(family);
  if (p.is_zero()) {
    out.identically_zero = true;
    return out;
  }
  out.zero_root_multiplicity = p.zero_multiplicity();
  out.coefficients = p.strip_zero_root().primitive().integer_coefficients_descending();
  return out;
}

Polynomial cleared_condition(const PrincipalSpectrum& s, ConditionKind kind) {
  const RationalFunction v = condition_value(s, kind);
  return v.num() * structural_denominator(s).exact_div(v.den());
}

ConditionPolynomial condition_polynomial(const PrincipalSpectrum& s, ConditionKind kind, std::string family) {
  return canonicalize(cleared_condition(s, kind), kind, std::move(family));
}

ConditionPolynomial condition_polynomial(int g, const std::vector<int>& mult, ConditionKind kind,
                                         const Rational& c) {
  std::string fam = "g" + std::to_string(g) + "(";
  for (std::size_t k = 0; k < mult.size(); ++k) fam += (k ? "," : "") + std::to_string(mult[k]);
  fam += ")";
  return condition_polynomial(spherical_family_spectrum(g, mult, c), kind, fam);
}

OpenInterval family_lambda_range(int g) {
  switch (g) {
    case 1:
    case 2: return {ExactPoint::rational(0), ExactPoint::infinity()};
    case 3: return {ExactPoint::sqrt_of(Rational(1, 3)), ExactPoint::infinity()};
    case 4: return {ExactPoint::rational(1), ExactPoint::infinity()};
    case 6: return {ExactPoint::sqrt_of(3), ExactPoint::infinity()};
    default: throw InvalidArgumentError("no spherical family with this g");
  }
}

RootIsolation isolate_positive_roots(const ConditionPolynomial& poly, const OpenInterval& interval, double tol) {
  if (poly.identically_zero) {
    RootIsolation r;
    r.identically_zero = true;
    return r;
  }
  return isolate_roots(poly.poly(), interval, tol);
}

double radius_from_lambda(double lambda) { return 1.0 / std::sqrt(1.0 + lambda * lambda); }

}  // namespace cfvar
