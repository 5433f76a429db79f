#include "oracles.hpp"

#include "cfvar/error.hpp"
#include "cfvar/invariant_algebra.hpp"

#include <doctest.h>

using namespace cfvar;

TEST_SUITE("invariant_algebra") {

TEST_CASE("Q1 and Q2 against brute-force sums across signatures") {
  std::mt19937_64 rng(11);
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int p = 0; p <= std::min(1, m); ++p)
        for (int q = 0; q <= std::min(1, n); ++q) {
          const auto slices = oracle::random_slices(m, n, rng);
          const FormCoefficients h(Signature(m, p), Signature(n, q), slices);
          const auto [q1, q2] = oracle::q1_q2(slices, p, q);
          CHECK(eval_q1(h) == doctest::Approx(q1).epsilon(1e-13));
          CHECK(eval_q2(h) == doctest::Approx(q2).epsilon(1e-13));
          CHECK(eval_cf(h) == doctest::Approx(q2 - q1).epsilon(1e-12));
          CHECK(eval_wc(h) == doctest::Approx(m * q1 - q2).epsilon(1e-12));
        }
}

TEST_CASE("zero form and Clifford-type form") {
  const FormCoefficients zero(Signature(3, 0), Signature(2, 0));
  CHECK(eval_q1(zero) == 0.0);
  CHECK(eval_q2(zero) == 0.0);
  // principal curvatures 1, -1
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2, 2);
  s(0, 0) = 1;
  s(1, 1) = -1;
  const FormCoefficients h(Signature(2, 0), Signature(1, 0), {s});
  CHECK(eval_q1(h) == doctest::Approx(2.0));
  CHECK(eval_q2(h) == doctest::Approx(0.0));
  CHECK(eval_cf(h) == doctest::Approx(-2.0));
}

TEST_CASE("asymmetric slice is rejected") {
  Eigen::MatrixXd s(2, 2);
  s << 1, 2, 3, 4;
  CHECK_THROWS_AS(FormCoefficients(Signature(2, 0), Signature(1, 0), {s}), InvalidArgumentError);
  CHECK_THROWS_AS(FormCoefficients(Signature(2, 0), Signature(2, 0), {Eigen::MatrixXd::Identity(2, 2)}),
                  InvalidArgumentError);
}

TEST_CASE("G-invariance on 200 random cases") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 5), bit(0, 1);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    const int m = dim(rng), n = dim(rng);
    const int p = std::min(bit(rng), m), q = std::min(bit(rng), n);
    const Signature ds(m, p), cs(n, q);
    const FormCoefficients h(ds, cs, oracle::random_slices(m, n, rng));
    const Eigen::MatrixXd a = random_pseudo_orthogonal(ds, 1000 + k);
    const Eigen::MatrixXd b = random_pseudo_orthogonal(cs, 5000 + k);
    REQUIRE(is_pseudo_orthogonal(a, ds));
    REQUIRE(is_pseudo_orthogonal(b, cs));
    const FormCoefficients gh = act_group(a, b, h);
    for (auto f : {eval_q1, eval_q2}) {
      const double d = std::abs(f(gh) - f(h)) / (1 + std::abs(f(h)));
      worst = std::max(worst, d);
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("non pseudo-orthogonal group element is rejected") {
  const FormCoefficients h(Signature(2, 0), Signature(1, 0), {Eigen::MatrixXd::Identity(2, 2)});
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
  a(0, 1) = 0.5;
  CHECK_THROWS_AS(act_group(a, Eigen::MatrixXd::Identity(1, 1), h), InvalidArgumentError);
}

TEST_CASE("homogeneity of degree two") {
  std::mt19937_64 rng(5);
  const FormCoefficients h(Signature(4, 1), Signature(3, 0), oracle::random_slices(4, 3, rng));
  for (double t : {2.0, -3.0, 0.5}) {
    const FormCoefficients th = h.scaled(t);
    CHECK(eval_q1(th) == doctest::Approx(t * t * eval_q1(h)).epsilon(1e-12));
    CHECK(eval_q2(th) == doctest::Approx(t * t * eval_q2(h)).epsilon(1e-12));
  }
}

TEST_CASE("contraction identities on rho") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 50; ++k) {
    const int m = 1 + k % 5, n = 1 + (k / 5) % 4;
    const FormCoefficients h(Signature(m, k % 2 && m > 1), Signature(n, (k / 2) % 2 && n > 1),
                             oracle::random_slices(m, n, rng));
    const ContractionPair c = contract_pattern(rho_tensor(h));
    const double s = 1 + std::abs(eval_q1(h)) + std::abs(eval_q2(h));
    CHECK(std::abs(c.c1324 - eval_q1(h)) <= 1e-12 * s);
    CHECK(std::abs(c.c1234 - eval_q2(h)) <= 1e-12 * s);
    CHECK(std::abs(cf_pattern_value(rho_tensor(h)) - eval_cf(h)) <= 1e-12 * s);
  }
}

TEST_CASE("sigma3 and sigma6 flip the CF pattern, sigma1 keeps it") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    const int m = 2 + k % 4;
    const FormCoefficients h(Signature(m, k % 2), Signature(2, 0), oracle::random_slices(m, 2, rng));
    const S4SymmetryReport r = s4_symmetry_report(h);
    const double s = 1 + std::abs(r.base_value);
    CHECK(r.antisymmetric_under_sigma3_and_sigma6);
    CHECK(r.antisymmetry_defect_sigma3 <= 1e-12 * s);
    CHECK(r.antisymmetry_defect_sigma6 <= 1e-12 * s);
    CHECK(std::abs(r.values[0] - r.base_value) <= 1e-12 * s);
    // direct evaluation on the permuted tensor
    const FourTensor rho = rho_tensor(h);
    CHECK(std::abs(cf_pattern_value(permute4(rho, Permutation4::sigma(3))) + r.base_value) <= 1e-12 * s);
  }
}

TEST_CASE("zero form has all pattern values zero") {
  const S4SymmetryReport r = s4_symmetry_report(FormCoefficients(Signature(3, 0), Signature(2, 0)));
  for (double v : r.values) CHECK(v == 0.0);
}

TEST_CASE("permutations compose and sigma3 is an involution") {
  const Permutation4 s3 = Permutation4::sigma(3);
  CHECK(s3.then(s3) == Permutation4::identity());
  std::mt19937_64 rng(9);
  const FourTensor rho = rho_tensor(FormCoefficients(Signature(3, 0), Signature(2, 0), oracle::random_slices(3, 2, rng)));
  const FourTensor back = permute4(permute4(rho, s3), s3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) CHECK(back(i, j, k, l) == rho(i, j, k, l));
  const Permutation4 swap14({4, 2, 3, 1});
  CHECK(swap14(0) == 3);
  CHECK(swap14(3) == 0);
}

TEST_CASE("CF pattern spans the unique antisymmetric direction") {
  std::mt19937_64 rng(31);
  std::vector<FormCoefficients> samples;
  for (int k = 0; k < 12; ++k) samples.emplace_back(Signature(3, 0), Signature(2, 0), oracle::random_slices(3, 2, rng));
  const AntisymmetricSpan span = antisymmetric_span(samples);
  CHECK(span.rank == 1);
  CHECK(span.kernel(0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(span.kernel(1) == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-10));
}

TEST_CASE("curves: Q1 equals Q2") {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 4; ++n) {
    const FormCoefficients h(Signature(1, 0), Signature(n, n > 1 ? 1 : 0), oracle::random_slices(1, n, rng));
    CHECK(eval_cf(h) == doctest::Approx(0.0).scale(1.0));
  }
}

}  // TEST_SUITE
