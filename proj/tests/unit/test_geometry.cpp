#include "oracles.hpp"

#include "cfvar/catalog.hpp"
#include "cfvar/chart_geometry.hpp"
#include "cfvar/error.hpp"

#include <doctest.h>

#include <sstream>

using namespace cfvar;

namespace {

double max_mean_curvature_error(const ChartGeometry& geo, double expected) {
  double worst = 0;
  for (std::size_t p : geo.interior_points()) {
    const Eigen::VectorXd H = geo.mean_curvature_vector(p);
    worst = std::max(worst, std::abs(std::sqrt(geo.ambient().inner(H, H)) - expected));
  }
  return worst;
}

}  // namespace

TEST_SUITE("chart_geometry") {

TEST_CASE("grid indexing and Fornberg weights") {
  const Grid g = Grid::periodic({4, 3}, {1.0, 2.0});
  CHECK(g.size() == 12);
  CHECK(g.stride(0) == 3);
  const std::vector<int> idx{2, 1};
  CHECK(g.flat_index(idx) == 7);
  CHECK(g.multi_index(7) == idx);
  CHECK(g.coords(7)[1] == doctest::Approx(2.0 / 3));
  const std::vector<double> nodes{-2, -1, 0, 1, 2};
  const auto w = fornberg_weights(0.0, nodes, 1);
  CHECK(w[0] == doctest::Approx(1.0 / 12));
  CHECK(w[1] == doctest::Approx(-2.0 / 3));
  CHECK(w[3] == doctest::Approx(2.0 / 3));
}

TEST_CASE("periodic derivative is spectrally consistent with the stencil order") {
  for (int order : {2, 4}) {
    double prev = 0;
    for (int n : {32, 64}) {
      const Grid g = Grid::periodic({n}, {2 * oracle::kPi});
      Field f(g.size(), 1);
      for (std::size_t p = 0; p < g.size(); ++p) f.at(p)[0] = std::sin(3 * g.coords(p)[0]);
      const Field d = Differentiator(g, order).diff(f, 0);
      double err = 0;
      for (std::size_t p = 0; p < g.size(); ++p) err = std::max(err, std::abs(d.at(p)[0] - 3 * std::cos(3 * g.coords(p)[0])));
      if (prev > 0) CHECK(std::log2(prev / err) >= order - 0.1);
      prev = err;
    }
  }
}

TEST_CASE("Clifford mean curvature and principal curvatures") {
  for (double r1 : {0.5, 0.6, std::sqrt(0.5)}) {
    const ChartGeometry geo(clifford_torus(r1, 256));
    const double r2 = std::sqrt(1 - r1 * r1);
    CHECK(max_mean_curvature_error(geo, std::abs(r2 * r2 - r1 * r1) / (2 * r1 * r2)) <= 1e-6);
    const auto k = geo.principal_curvatures(geo.interior_points()[100]);
    CHECK(k[0] == doctest::Approx(std::max(r2 / r1, -r1 / r2)).epsilon(1e-6));
    CHECK(k[1] == doctest::Approx(std::min(r2 / r1, -r1 / r2)).epsilon(1e-6));
  }
}

TEST_CASE("small sphere mean curvature is |cot t|") {
  for (double t : {0.5, 0.9, oracle::kPi / 4}) {
    const ChartGeometry geo(small_sphere(std::sin(t), 128));
    CHECK(max_mean_curvature_error(geo, std::abs(1 / std::tan(t))) <= 1e-6);
  }
}

TEST_CASE("second fundamental form symmetry") {
  const ChartGeometry geo(rotation_torus(2.0, 0.7, 64, 0.1));
  const int m = geo.m(), D = geo.D();
  double sym = 0, raw = 0;
  for (std::size_t p : geo.interior_points())
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int c = 0; c < D; ++c) {
          sym = std::max(sym, std::abs(geo.B().at(p)[(i * m + j) * D + c] - geo.B().at(p)[(j * m + i) * D + c]));
          raw = std::max(raw, std::abs(geo.B().at(p)[(i * m + j) * D + c] - geo.B_unsymmetrized().at(p)[(i * m + j) * D + c]));
        }
  CHECK(sym == 0.0);
  CHECK(raw <= 1e-4);
  const FormCoefficients h = geo.second_fundamental_form(geo.interior_points()[7]);
  for (int a = 0; a < h.n(); ++a) CHECK(h.slice(a) == h.slice(a).transpose());
}

TEST_CASE("Q1 and Q2 do not depend on the adapted frame") {
  const ChartGeometry geo(hyperbolic_torus(0.8, 1.3, 64));
  for (std::size_t k = 0; k < 20; ++k) {
    const FormCoefficients h = geo.second_fundamental_form(geo.interior_points()[37 * k]);
    const auto a = random_pseudo_orthogonal(h.domain_sig(), k);
    const auto b = random_pseudo_orthogonal(h.codomain_sig(), k + 100);
    const FormCoefficients gh = act_group(a, b, h);
    CHECK(eval_q1(gh) == doctest::Approx(eval_q1(h)).epsilon(1e-6));
    CHECK(eval_q2(gh) == doctest::Approx(eval_q2(h)).epsilon(1e-6));
  }
}

TEST_CASE("frame sums agree with coordinate contractions") {
  const ChartGeometry geo(rotation_torus(2.0, 0.7, 32, 0.2));
  for (std::size_t p : {std::size_t{5}, std::size_t{300}, std::size_t{777}}) {
    const FormCoefficients h = geo.second_fundamental_form(p);
    const Eigen::MatrixXd gi = geo.metric_inverse(p);
    const int m = geo.m();
    double q1 = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l)
            q1 += gi(i, k) * gi(j, l) * geo.ambient().inner(geo.b_vec(p, i, j), geo.b_vec(p, k, l));
    const Eigen::VectorXd tau = geo.tension(p);
    CHECK(eval_q1(h) == doctest::Approx(q1).epsilon(1e-10));
    CHECK(eval_q2(h) == doctest::Approx(geo.ambient().inner(tau, tau)).epsilon(1e-10));
  }
}

TEST_CASE("Gauss identity on every immersion chart at 64^m") {
  const std::vector<std::pair<const char*, ChartedMap>> charts{
      {"clifford", clifford_torus(0.6, 64)},
      {"small_sphere", small_sphere(0.8, 64)},
      {"round_sphere", round_sphere(1.5, 64)},
      {"plane", plane_chart(64)},
      {"cylinder", cylinder(0.7, 64)},
      {"rotation_torus", rotation_torus(2.0, 0.7, 64, 0.1)},
      {"flat_torus_e4", flat_torus_e4(1.0, 0.6, 64)},
      {"hyperbolic_torus", hyperbolic_torus(0.8, 1.3, 64)},
      {"curve", random_closed_curve(4, true, 64)},
      {"pseudo_plane", pseudo_plane(64)}};
  for (const auto& [name, map] : charts) {
    const ChartGeometry geo(map);
    CHECK_MESSAGE(gauss_identity_defect(geo) <= 1e-4, name);
  }
}

TEST_CASE("Gauss identity converges under refinement") {
  std::vector<double> d;
  for (int n : {32, 64, 128}) d.push_back(gauss_identity_defect(ChartGeometry(rotation_torus(2.0, 0.7, n, 0.1))));
  CHECK(std::log2(d[0] / d[1]) >= 1.9);
  CHECK(std::log2(d[1] / d[2]) >= 1.9);
  std::vector<double> d2;
  for (int n : {64, 128}) d2.push_back(gauss_identity_defect(ChartGeometry(clifford_torus(0.6, n), {2, 1e8})));
  CHECK(std::log2(d2[0] / d2[1]) >= 1.9);
}

TEST_CASE("pseudo-Euclidean identity map") {
  const ChartGeometry geo(pseudo_plane(32));
  CHECK(geo.domain_sig().index == 1);
  const FormCoefficients h = geo.second_fundamental_form(10);
  CHECK(eval_q1(h) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("degenerate charts are reported") {
  const Grid g = Grid::periodic({16, 16}, {1.0, 1.0});
  Field X(g.size(), 3);
  for (std::size_t p = 0; p < g.size(); ++p) X.at(p)[0] = 1.0;
  CHECK_THROWS_AS(ChartGeometry(ChartedMap("const", g, SpaceForm::euclidean(3), X)), SingularChartError);
  CHECK_THROWS_AS(ChartGeometry(clifford_torus(0.6, 64), {3, 1e8}), InvalidArgumentError);
}

TEST_CASE("sampled map round trip") {
  const ChartedMap map = clifford_torus(0.6, 16);
  std::stringstream buf;
  write_sampled_map(buf, map);
  const ChartedMap back = read_sampled_map(buf, SpaceForm::sphere(3));
  CHECK(back.samples().data == map.samples().data);
  CHECK(back.grid().axis(1).length == doctest::Approx(map.grid().axis(1).length));
}

}  // TEST_SUITE
