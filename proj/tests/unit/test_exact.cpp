#include "oracles.hpp"

#include "cfvar/error.hpp"
#include "cfvar/exact.hpp"
#include "cfvar/roots.hpp"

#include <doctest.h>

using namespace cfvar;
using oracle::poly_asc;

TEST_SUITE("exact") {

TEST_CASE("polynomial ring operations") {
  const Polynomial x = Polynomial::x();
  const Polynomial one = Polynomial::constant(1);
  CHECK((x + one).pow(2) == poly_asc({1, 2, 1}));
  CHECK((x * x - one).exact_div(x - one) == x + one);
  const auto [q, r] = poly_asc({1, 0, 0, 1}).divmod(poly_asc({1, 1}));
  CHECK(q == poly_asc({1, -1, 1}));
  CHECK(r.is_zero());
  CHECK(poly_asc({5, 3, 0, 2}).derivative() == poly_asc({3, 0, 6}));
  CHECK(poly_asc({2, 4}).primitive() == poly_asc({1, 2}));
  CHECK(poly_asc({0, 0, 3, 1}).zero_multiplicity() == 2);
  CHECK(poly_asc({0, 0, 3, 1}).strip_zero_root() == poly_asc({3, 1}));
  CHECK(poly_asc({1, 1}).divides(poly_asc({-1, 0, 1})));
  CHECK_FALSE(poly_asc({1, 1}).divides(poly_asc({1, 0, 1})));
}

TEST_CASE("gcd, lcm and square-free part") {
  const Polynomial a = poly_asc({-1, 1}) * poly_asc({2, 1}).pow(2);
  const Polynomial b = poly_asc({2, 1}) * poly_asc({3, 1});
  CHECK(gcd(a, b).primitive() == poly_asc({2, 1}));
  CHECK(lcm(poly_asc({-1, 1}), poly_asc({1, 1})).primitive() == poly_asc({-1, 0, 1}));
  CHECK(square_free_part(a).primitive() == (poly_asc({-1, 1}) * poly_asc({2, 1})).primitive());
}

TEST_CASE("big integer coefficients stay exact") {
  Polynomial p = poly_asc({1, 1});
  p = p.pow(60);
  const auto c = p.integer_coefficients_descending();
  REQUIRE(c.size() == 61);
  // binomial(60, 30)
  CHECK(to_string(c[30]) == "118264581564861424");
  CHECK(p.eval(Rational(-1)) == 0);
}

TEST_CASE("rational functions are stored reduced") {
  const RationalFunction f(poly_asc({-1, 0, 1}), poly_asc({-2, 2}));
  CHECK(f.num() == poly_asc({1, 1}));
  CHECK(f.den() == poly_asc({2}));
  const RationalFunction x = RationalFunction::x();
  const RationalFunction g = (x - RationalFunction::constant(1)) / (x + RationalFunction::constant(1));
  const RationalFunction h = -RationalFunction::constant(1) / g;
  CHECK((g * h).num() == poly_asc({-1}));
  CHECK(g.eval(Rational(3)) == Rational(1, 2));
  CHECK(g.eval(3.0) == doctest::Approx(0.5));
}

TEST_CASE("multivariate parsing and interpolation") {
  const MultiPoly p = parse_polynomial("3l^2 - 4(2m-1)l + (m-1)^2", {"l", "m"});
  CHECK(p.substitute(1, 2).to_univariate(0) == poly_asc({1, -12, 3}));
  CHECK(p.degree_in(1) == 2);
  CHECK_THROWS_AS(parse_polynomial("3l^ + 1", {"l"}), InvalidArgumentError);
  CHECK_THROWS_AS(parse_polynomial("3q", {"l"}), InvalidArgumentError);
  const Polynomial target = poly_asc({4, -1, 0, 2});
  std::vector<Rational> nodes, values;
  for (int k = 0; k < 4; ++k) {
    nodes.emplace_back(k);
    values.push_back(target.eval(Rational(k)));
  }
  CHECK(lagrange_interpolate(nodes, values) == target);
}

TEST_CASE("sign at quadratic irrationals") {
  const Polynomial p = poly_asc({-3, 0, 1});  // l^2 - 3
  CHECK(sign_at(p, ExactPoint::sqrt_of(3)) == 0);
  CHECK(sign_at(p, ExactPoint::sqrt_of(Rational(1, 3))) < 0);
  CHECK(sign_at(poly_asc({-2, 1}), ExactPoint::sqrt_of(3)) < 0);
  CHECK(sign_at(poly_asc({-1, 1}), ExactPoint::infinity()) > 0);
}

TEST_CASE("Sturm isolation encloses known roots") {
  const Polynomial p = poly_asc({-2, 0, 1}) * poly_asc({-3, 1}) * poly_asc({1, 1});
  const auto iso = isolate_roots(p, {ExactPoint::rational(0), ExactPoint::infinity()});
  REQUIRE(iso.roots.size() == 2);
  CHECK(iso.roots[0].contains(std::sqrt(2.0)));
  CHECK(iso.roots[0].width() <= 1e-12);
  CHECK(iso.roots[1].contains(3.0));
  CHECK(sturm_count(sturm_sequence(p), ExactPoint::rational(-10), ExactPoint::rational(10)) == 4);
}

TEST_CASE("roots on a finite endpoint are divided out") {
  const Polynomial p = poly_asc({-1, 1}) * poly_asc({-4, 1});
  const auto iso = isolate_roots(p, {ExactPoint::rational(1), ExactPoint::infinity()});
  CHECK(iso.removed_boundary_factors == 1);
  REQUIRE(iso.roots.size() == 1);
  CHECK(iso.roots[0].contains(4.0));
  const auto z = isolate_roots(Polynomial(), {ExactPoint::rational(0), ExactPoint::infinity()});
  CHECK(z.identically_zero);
}

}  // TEST_SUITE
