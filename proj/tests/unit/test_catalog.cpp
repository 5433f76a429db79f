#include "oracles.hpp"

#include "cfvar/catalog.hpp"
#include "cfvar/error.hpp"
#include "cfvar/jet_calculus.hpp"

#include <doctest.h>

#include <algorithm>
#include <chrono>

using namespace cfvar;

TEST_SUITE("catalog") {

TEST_CASE("every registered family builds with defaults") {
  for (const auto& f : chart_families()) {
    const ChartedMap map = build_family(f.id, {}, {16});
    CHECK_MESSAGE(map.m() == f.m, f.id);
    CHECK_NOTHROW(ChartGeometry{map});
  }
  CHECK_THROWS_AS(find_family("no_such_family"), ConfigError);
  CHECK_THROWS_AS(build_family("clifford", {{"radius", 0.5}}, {16}), InvalidArgumentError);
  const FamilyParams p = resolve_params(find_family("clifford"), {{"r1", 0.5}});
  CHECK(p.at("r1") == 0.5);
  CHECK_THROWS_AS(build_family("clifford", {}, {4}), InvalidArgumentError);
}

TEST_CASE("family spectra match the numeric principal curvatures") {
  int checked = 0;
  for (const auto& f : chart_families()) {
    if (!f.spectrum) continue;
    const auto spec = f.spectrum(resolve_params(f, {}));
    if (!spec) continue;
    const ChartGeometry geo(build_family(f.id, {}, {256}));
    std::vector<double> expected;
    for (auto [k, mult] : spec->entries)
      for (int i = 0; i < mult; ++i) expected.push_back(k);
    std::sort(expected.rbegin(), expected.rend());
    double worst = 0;
    for (std::size_t p : geo.interior_points()) {
      const auto k = geo.principal_curvatures(p);
      REQUIRE(k.size() == expected.size());
      for (std::size_t i = 0; i < k.size(); ++i) worst = std::max(worst, std::abs(k[i] - expected[i]));
    }
    CHECK_MESSAGE(worst <= 1e-6, f.id);
    ++checked;
  }
  CHECK(checked >= 2);
}

TEST_CASE("flat torus classification") {
  const auto i = flat_torus_classify(-1, 1);
  CHECK(i.label == "i");
  CHECK(i.h_squared == std::vector<double>{0.0});
  CHECK(flat_torus_classify(0, 1).label == "ii");
  CHECK(flat_torus_classify(1, 0).label == "ii");
  const auto iii = flat_torus_classify(-1, 3);
  CHECK(iii.label == "iii");
  REQUIRE(iii.h_squared.size() == 2);
  CHECK(iii.h_squared[1] == doctest::Approx(0.25));
  CHECK(flat_torus_residual_coefficient(-1, 3, 0.5) == doctest::Approx(0.0));
  CHECK_THROWS_AS(flat_torus_classify(0, 0), InvalidArgumentError);
}

TEST_CASE("Clifford radii reproduce the admissible mean curvature") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3, 3);
  int valid = 0;
  for (int k = 0; k < 2000 && valid < 100; ++k) {
    const double a = u(rng), b = u(rng);
    CliffordRadii r;
    try {
      r = clifford_radii(a, b);
    } catch (const InvalidArgumentError&) {
      continue;
    }
    ++valid;
    CHECK(r.r1 * r.r1 + r.r2 * r.r2 == doctest::Approx(1.0).epsilon(1e-14));
    const double H = (r.r2 * r.r2 - r.r1 * r.r1) / (2 * r.r1 * r.r2);
    CHECK(std::abs(H * H + a / (2 * (a + b))) <= 1e-12 * std::max(1.0, H * H));
  }
  CHECK(valid >= 50);
  const CliffordRadii q2 = clifford_radii(0, 1);
  CHECK(q2.r1 == doctest::Approx(std::sqrt(0.5)));
  CHECK(q2.r2 == doctest::Approx(std::sqrt(0.5)));
  CHECK_THROWS_AS(clifford_radii(1, 1), InvalidArgumentError);
  CHECK_THROWS_AS(clifford_radii(-2, 1), InvalidArgumentError);
}

TEST_CASE("residual formula agrees with Clifford charts") {
  for (auto [a, b] : std::vector<std::pair<double, double>>{{-1, 1}, {0, 1}, {1, 0}, {2, -1}, {3, -1}, {-1, 3}}) {
    const FlatTorusCrossCheck x = flat_torus_cross_check(a, b, 64);
    CHECK_MESSAGE(x.agree, "alpha=" << a << " beta=" << b);
    for (const auto& c : x.charts)
      CHECK(c.predicted == doctest::Approx(flat_torus_residual_coefficient(a, b, c.H)));
  }
  const CliffordRadii r = clifford_radii(-1, 3);
  const ChartGeometry geo(clifford_torus(r.r1, 128));
  CHECK(summarize(geo, alpha_beta_residual(geo, covariant_jets(geo), -1, 3)).max <= 1e-3);
}

TEST_CASE("two-dimensional criterion") {
  CHECK(two_dim_criterion(ChartGeometry(clifford_torus(std::sqrt(0.5), 64))).cf);
  const TwoDimVerdict s = two_dim_criterion(ChartGeometry(small_sphere(std::sqrt(0.5), 64)));
  CHECK(s.cf);
  CHECK(s.k_minus_2c <= 1e-4);
  const TwoDimVerdict n = two_dim_criterion(ChartGeometry(clifford_torus(0.6, 64)));
  CHECK_FALSE(n.cf);
  CHECK(n.k_max == doctest::Approx(0.0).scale(1.0));
  CHECK(n.h_max > 0.1);
  CHECK_THROWS_AS(two_dim_criterion(ChartGeometry(random_closed_curve(1, false, 64))), InvalidArgumentError);
}

TEST_CASE("Ricci-flat check") {
  const RicciFlatVerdict cyl = ricci_flat_check(ChartGeometry(cylinder(0.7, 64)));
  CHECK(cyl.ricci_flat);
  CHECK(cyl.cf);
  CHECK(cyl.cf_max <= 1e-5);
  const RicciFlatVerdict pl = ricci_flat_check(ChartGeometry(plane_chart(32)));
  CHECK(pl.ricci_max <= 1e-10);
  CHECK(pl.cf_max <= 1e-10);
  const RicciFlatVerdict sph = ricci_flat_check(ChartGeometry(round_sphere(1.5, 64)));
  CHECK_FALSE(sph.ricci_flat);
  CHECK_FALSE(sph.cf);
  // normal part -K tr A nu with K = 1/R^2 and tr A = 2/R
  CHECK(sph.cf_normal_max == doctest::Approx(2 / (1.5 * 1.5 * 1.5)).epsilon(1e-4));
}

TEST_CASE("classification suite matches every published result") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = classification_suite();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 10.0);
  std::vector<std::string> ids;
  for (const auto& r : reports) {
    CHECK_MESSAGE(r.match, r.id);
    ids.push_back(r.id);
  }
  for (const char* id : {"g1", "g2", "g3_1", "g3_2", "g3_3", "g3_4", "g4_1", "g4_2", "g4_3", "g4_4", "g4_5", "g4_6",
                         "g6_1", "g6_2", "euclidean", "hyperbolic"})
    CHECK_MESSAGE(std::find(ids.begin(), ids.end(), id) != ids.end(), id);
  const std::string table = format_table(reports);
  CHECK(table.find("g4_6") != std::string::npos);
}

TEST_CASE("isoparametric family lookup") {
  const IsoparaFamily m18 = isopara_family("M18", 4);
  CHECK(m18.id == "g4_2");
  CHECK(m18.multiplicities == std::vector<int>{4, 5, 4, 5});
  CHECK(isopara_family("M8", 4).multiplicities == std::vector<int>{2, 2, 2, 2});
  CHECK(isopara_family("M30", 4).multiplicities == std::vector<int>{9, 6, 9, 6});
  CHECK(isopara_family("g4_6", 0, 3).multiplicities == std::vector<int>{4, 7, 4, 7});
  CHECK(isopara_family("M12", 6).multiplicities == std::vector<int>(6, 2));
  CHECK(isopara_family("g3_2").multiplicities == std::vector<int>{2, 2, 2});
  CHECK(isopara_family("g2", 0, 5, 2).multiplicities == std::vector<int>{2, 3});
  CHECK_THROWS_AS(isopara_family("M7", 4), ConfigError);
  CHECK_THROWS_AS(isopara_family("g9_1"), ConfigError);
}

}  // TEST_SUITE
