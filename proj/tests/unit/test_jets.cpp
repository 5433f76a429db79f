#include "oracles.hpp"

#include "cfvar/catalog.hpp"
#include "cfvar/error.hpp"
#include "cfvar/jet_calculus.hpp"

#include <doctest.h>

using namespace cfvar;

namespace {

/// max_p |f(p) - coeff * nu(p)|
double deviation_from_normal(const ChartGeometry& geo, const Field& f, double coeff) {
  double worst = 0;
  for (std::size_t p : geo.interior_points()) {
    const Eigen::Map<const Eigen::VectorXd> v(f.at(p), geo.D());
    worst = std::max(worst, (v - coeff * geo.unit_normal(p)).norm());
  }
  return worst;
}

double max_norm(const ChartGeometry& geo, const Field& f) { return summarize(geo, f).max; }

}  // namespace

TEST_SUITE("jet_calculus") {

TEST_CASE("W1 and W2 on CMC Clifford tori") {
  for (double r1 : {0.5, 0.6, std::sqrt(0.5)}) {
    const ChartGeometry geo(clifford_torus(r1, 128));
    const CovariantJets jets = covariant_jets(geo);
    const double H = oracle::clifford_h(r1);
    const double w1 = -4 * H * (1 + 2 * H * H), w2 = -8 * H * H * H;
    CHECK(deviation_from_normal(geo, w1_residual(geo, jets), w1) <= 1e-3 * std::max(1.0, std::abs(w1)));
    CHECK(deviation_from_normal(geo, w2_residual(geo, jets), w2) <= 1e-3 * std::max(1.0, std::abs(w2)));
    // (alpha, beta) = (-1, 1): 4 H nu
    CHECK(deviation_from_normal(geo, alpha_beta_residual(geo, jets, -1, 1), 4 * H) <= 1e-3);
    CHECK(deviation_from_normal(geo, alpha_beta_residual(geo, jets, 2, -1),
                                -4 * H * (2 + 2 * (2 - 1) * H * H)) <= 3e-3);
  }
}

TEST_CASE("minimal Clifford torus is critical for every combination") {
  const ChartGeometry geo(clifford_torus(std::sqrt(0.5), 128));
  const CovariantJets jets = covariant_jets(geo);
  CHECK(max_norm(geo, w1_residual(geo, jets)) <= 1e-3);
  CHECK(max_norm(geo, w2_residual(geo, jets)) <= 1e-3);
  const ChartGeometry fine(clifford_torus(std::sqrt(0.5), 256));
  CHECK(max_norm(fine, w1_residual(fine, covariant_jets(fine))) <= 1e-4);
}

TEST_CASE("alpha beta combination") {
  const ChartGeometry geo(clifford_torus(0.6, 32));
  const CovariantJets jets = covariant_jets(geo);
  CHECK(alpha_beta_residual(geo, jets, 1, 0).data == w1_residual(geo, jets).data);
  CHECK_THROWS_AS(alpha_beta_residual(geo, jets, 0, 0), InvalidArgumentError);
}

TEST_CASE("second-order CF expression on the CMC flat torus") {
  const double r1 = 0.6;
  const ChartGeometry geo(clifford_torus(r1, 128));
  const SecondOrderCF so = cf_residual_second_order(geo);
  CHECK(max_norm(geo, so.tangent) <= 1e-4);
  CHECK(deviation_from_normal(geo, so.normal, 4 * oracle::clifford_h(r1)) <= 1e-4);
}

TEST_CASE("second-order CF expression for constant K surfaces") {
  const double r = 0.6;
  const ChartGeometry geo(small_sphere(r, 128));
  const SecondOrderCF so = cf_residual_second_order(geo);
  const double K = 1 / (r * r);
  double worst = 0;
  for (std::size_t p : geo.interior_points()) {
    const Eigen::VectorXd H = geo.mean_curvature_vector(p);
    const Eigen::Map<const Eigen::VectorXd> v(so.normal.at(p), geo.D());
    worst = std::max(worst, (v - 2 * (2 - K) * H).norm());
  }
  CHECK(worst <= 1e-4);
  const ChartGeometry great(small_sphere(1.0, 128));
  const SecondOrderCF g = cf_residual_second_order(great);
  CHECK(max_norm(great, g.normal) <= 1e-6);
  CHECK(max_norm(great, g.tangent) <= 2e-5);
}

TEST_CASE("second-order expression needs an immersion") {
  const ChartedMap map = build_family("torus4_explicit", {}, {8}, MetricMode::Explicit);
  CHECK_THROWS_AS(cf_residual_second_order(ChartGeometry(map)), UnsupportedModeError);
}

TEST_CASE("small sphere of radius 1/sqrt2 is proper biharmonic and CF") {
  const ChartGeometry geo(small_sphere(std::sqrt(0.5), 128));
  const CovariantJets jets = covariant_jets(geo);
  const ResidualField r = residuals(geo, jets);
  CHECK(max_norm(geo, r.w2) <= 1e-3);
  CHECK(max_norm(geo, r.cf) <= 1e-3);
  CHECK(oracle_equivalence(geo, jets).relative <= 1e-3);
  CHECK(two_dim_criterion(geo).cf);
}

TEST_CASE("oracle equivalence converges on several charts") {
  const std::vector<std::pair<const char*, std::function<ChartedMap(int)>>> charts{
      {"clifford 0.5", [](int n) { return clifford_torus(0.5, n); }},
      {"clifford 0.8", [](int n) { return clifford_torus(0.8, n); }},
      {"rotation torus", [](int n) { return rotation_torus(2.0, 0.7, n, 0.1); }},
      {"hyperbolic torus", [](int n) { return hyperbolic_torus(0.8, 1.3, n); }}};
  for (const auto& [name, make] : charts) {
    const ChartGeometry g64(make(64)), g128(make(128));
    const double e64 = oracle_equivalence(g64, covariant_jets(g64)).relative;
    const double e128 = oracle_equivalence(g128, covariant_jets(g128)).relative;
    CHECK_MESSAGE(e128 <= 1e-2, name);
    CHECK_MESSAGE(std::log2(e64 / e128) >= 1.9, name);
  }
}

TEST_CASE("rough Laplacian identity") {
  for (const ChartedMap& map : {clifford_torus(0.6, 128), clifford_torus(std::sqrt(0.5), 128), flat_torus_e4(1, 1, 128)}) {
    const ChartGeometry geo(map);
    CHECK_MESSAGE(rough_laplacian_check(geo, covariant_jets(geo)).relative <= 1e-3, map.name());
  }
}

TEST_CASE("commutation identities") {
  for (const ChartedMap& map : {clifford_torus(0.6, 128), round_sphere(1.3, 128), plane_chart(32)}) {
    const ChartGeometry geo(map);
    const CommutationReport c = commutation_checks(geo, covariant_jets(geo));
    CHECK_MESSAGE(c.third_order.relative <= 1e-4, map.name());
    CHECK_MESSAGE(c.fourth_order.relative <= 1e-2, map.name());
  }
}

TEST_CASE("mu nu assembly and antisymmetry") {
  const double r1 = 0.6;
  const ChartGeometry geo(clifford_torus(r1, 128));
  const CovariantJets jets = covariant_jets(geo);
  const MuNuReport mn = mu_nu_contraction_residual(geo, jets);
  CHECK(mn.assembly.max_abs <= 1e-6);
  CHECK(mn.sigma3_defect <= 1e-6);
  CHECK(mn.sigma6_defect <= 1e-6);
  Field diff = mn.v2;
  for (std::size_t k = 0; k < diff.data.size(); ++k) diff.data[k] -= mn.v1.data[k];
  CHECK(deviation_from_normal(geo, diff, 4 * oracle::clifford_h(r1)) <= 1e-3);
}

TEST_CASE("order-2 slot symmetry") {
  CHECK(second_jet_slot_asymmetry(ChartGeometry(clifford_torus(0.6, 64, 0.0))) <= 1e-6);
  CHECK(second_jet_slot_asymmetry(ChartGeometry(clifford_torus(0.6, 256))) <= 1e-6);
  CHECK(second_jet_slot_asymmetry(ChartGeometry(rotation_torus(2.0, 0.7, 128, 0.1))) <= 1e-4);
}

TEST_CASE("closed curves are CF maps") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    for (bool spherical : {false, true}) {
      const ChartGeometry geo(random_closed_curve(seed, spherical, 128));
      const CovariantJets jets = covariant_jets(geo);
      const ResidualField r = residuals(geo, jets);
      CHECK(max_norm(geo, r.cf) <= 1e-4);
      CHECK(max_norm(geo, r.w1) > 1e-2);
      CHECK(oracle_equivalence(geo, jets).max_abs <= 1e-4);
    }
}

TEST_CASE("residual norms are invariant under ambient isometries") {
  const ChartedMap sphere_map = clifford_torus(0.6, 64);
  const ChartedMap flat_map = rotation_torus(2.0, 0.7, 64, 0.1);
  Eigen::VectorXd shift(3);
  shift << 0.3, -1.0, 2.0;
  const std::vector<std::pair<ChartedMap, ChartedMap>> pairs{
      {sphere_map, sphere_map.transformed(random_pseudo_orthogonal(Signature(4, 0), 7), Eigen::VectorXd::Zero(4))},
      {flat_map, flat_map.transformed(random_pseudo_orthogonal(Signature(3, 0), 8), shift)}};
  for (const auto& [a, b] : pairs) {
    const ChartGeometry ga(a), gb(b);
    const ResidualField ra = residuals(ga, covariant_jets(ga)), rb = residuals(gb, covariant_jets(gb));
    double worst = 0;
    for (std::size_t p : ga.interior_points())
      for (const auto& [fa, fb] : {std::pair{&ra.w1, &rb.w1}, std::pair{&ra.w2, &rb.w2}}) {
        const Eigen::Map<const Eigen::VectorXd> u(fa->at(p), ga.D()), v(fb->at(p), gb.D());
        worst = std::max(worst, std::abs(u.norm() - v.norm()));
      }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("pseudo-Euclidean identity has vanishing residuals") {
  const ChartGeometry geo(pseudo_plane(32));
  const ResidualField r = residuals(geo, covariant_jets(geo));
  CHECK(max_norm(geo, r.w1) <= 1e-10);
  CHECK(max_norm(geo, r.w2) <= 1e-10);
}

}  // TEST_SUITE
