#pragma once

#include "cfvar/exact.hpp"
#include "cfvar/roots.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cfvar {

enum class ConditionKind { CF, Q1, Q2, WC };

std::string to_string(ConditionKind k);
/// Accepts "CF", "Q1", "Q2", "WC" (case-insensitive); throws InvalidArgumentError.
ConditionKind parse_condition_kind(const std::string& s);

/// A block of the exact spectrum: either one principal curvature, or a pair
/// of conjugate curvatures given by their elementary symmetric functions
/// e1 = l_a + l_b and e2 = l_a l_b (both rational in lambda even when the
/// curvatures are not).
struct SpectrumGroup {
  int multiplicity = 1;
  bool paired = false;
  RationalFunction value;  ///< single curvature
  RationalFunction e1;     ///< pair
  RationalFunction e2;     ///< pair

  static SpectrumGroup single(RationalFunction v, int mult);
  static SpectrumGroup pair(RationalFunction e1, RationalFunction e2, int mult);
};

/// Principal curvatures of an isoparametric hypersurface as rational
/// functions of lambda = cot t, with ambient curvature c.
struct PrincipalSpectrum {
  std::vector<SpectrumGroup> groups;
  Rational c = 1;

  int m() const;
  int distinct() const;  ///< g
};

/// Numeric principal curvatures with multiplicities.
struct NumericSpectrum {
  std::vector<std::pair<double, int>> entries;
  double c = 1.0;

  int m() const;
};

template <class T>
struct TracePowers {
  T p1{};  ///< tr A
  T p2{};  ///< tr A^2
  T p3{};  ///< tr A^3
};

TracePowers<RationalFunction> trace_powers(const PrincipalSpectrum& s);
TracePowers<double> trace_powers(const NumericSpectrum& s);

/// CF: c(m-1)p1 - p1 p2 + p3;  Q1: c p1 - p3;  Q2: (m c - p2) p1;
/// WC: p1 p2 - m p3.
RationalFunction condition_value(const PrincipalSpectrum& s, ConditionKind kind);
double condition_value(const NumericSpectrum& s, ConditionKind kind);

/// Spectrum of the spherical isoparametric family with g distinct principal
/// curvatures cot(t + j pi/g), j = 0..g-1, lambda = cot t.  The j-th
/// curvature has multiplicity multiplicities[j]; curvatures j and g-j are
/// combined into a conjugate pair and must share a multiplicity.
PrincipalSpectrum spherical_family_spectrum(int g, const std::vector<int>& multiplicities, const Rational& c = 1);

/// Same family evaluated at a numeric t.
NumericSpectrum spherical_family_numeric(int g, const std::vector<int>& multiplicities, double t, double c = 1.0);

/// lcm over the groups of (denominator)^3; condition values of the spectrum
/// times this are polynomials.
Polynomial structural_denominator(const PrincipalSpectrum& s);

/// Condition value times the structural denominator, before any
/// normalization.  Polynomial in the multiplicities for a fixed family shape.
Polynomial cleared_condition(const PrincipalSpectrum& s, ConditionKind kind);

/// Integer polynomial in lambda encoding a map-type condition: content 1,
/// positive leading coefficient, lambda^k factored out and recorded.
struct ConditionPolynomial {
  ConditionKind kind = ConditionKind::CF;
  std::string family;
  std::vector<BigInt> coefficients;  ///< descending degree
  int zero_root_multiplicity = 0;
  bool identically_zero = false;

  Polynomial poly() const { return Polynomial::from_descending(coefficients); }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  bool operator==(const ConditionPolynomial& o) const {
    return identically_zero == o.identically_zero && coefficients == o.coefficients;
  }
};

ConditionPolynomial canonicalize(const Polynomial& p, ConditionKind kind = ConditionKind::CF,
                                 std::string family = {});

/// Condition value cleared by the structural denominator, canonicalized.
ConditionPolynomial condition_polynomial(const PrincipalSpectrum& s, ConditionKind kind, std::string family = {});
ConditionPolynomial condition_polynomial(int g, const std::vector<int>& multiplicities, ConditionKind kind,
                                         const Rational& c = 1);

/// lambda-range of the spherical family: g=1 [0, inf) (reported as the open
/// interval with lambda = 0 handled via the zero-root multiplicity), g=2
/// (0, inf), g=3 (1/sqrt3, inf), g=4 (1, inf), g=6 (sqrt3, inf).
OpenInterval family_lambda_range(int g);

RootIsolation isolate_positive_roots(const ConditionPolynomial& poly, const OpenInterval& interval,
                                     double tol = 1e-12);

/// Radius sin t of the g=1 sphere with lambda = cot t.
double radius_from_lambda(double lambda);

}  // namespace cfvar
