#include "cfvar/catalog.hpp"

#include "cfvar/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace cfvar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) v[k++] = x;
  return v;
}

std::vector<int> sizes(const std::vector<int>& grid, int m) {
  if (grid.size() == 1) return std::vector<int>(static_cast<std::size_t>(m), grid[0]);
  if (static_cast<int>(grid.size()) != m)
    throw InvalidArgumentError("grid needs 1 or " + std::to_string(m) + " sizes");
  return grid;
}

Grid torus_grid(const std::vector<int>& n) {
  return Grid::periodic(n, std::vector<double>(n.size(), kTwoPi));
}

/// Polar band theta in [t0, pi - t0] (open) times a periodic longitude.
Grid band_grid(const std::vector<int>& n) {
  constexpr double t0 = 0.6;
  return Grid({{n[0], t0, std::numbers::pi - 2 * t0, false}, {n[1], 0.0, kTwoPi, true}});
}

double warp1(double u, double w) { return u + w * std::sin(u); }
double warp2(double v, double w) { return v + 0.5 * w * std::sin(2 * v); }

ChartedMap clifford_impl(double r1, const std::vector<int>& n, double warp) {
  if (!(r1 > 0.0 && r1 < 1.0)) throw InvalidArgumentError("clifford torus needs 0 < r1 < 1");
  const double r2 = std::sqrt(1 - r1 * r1);
  auto map = ChartedMap::sample("clifford", torus_grid(n), SpaceForm::sphere(3), [=](std::span<const double> u) {
    const double a = warp1(u[0], warp), b = warp2(u[1], warp);
    return vec({r1 * std::cos(a), r1 * std::sin(a), r2 * std::cos(b), r2 * std::sin(b)});
  });
  map.set_normal_hint([=](std::span<const double> u) {
    const double a = warp1(u[0], warp), b = warp2(u[1], warp);
    return vec({-r2 * std::cos(a), -r2 * std::sin(a), r1 * std::cos(b), r1 * std::sin(b)});
  });
  return map;
}

ChartedMap small_sphere_impl(double r, const std::vector<int>& n) {
  if (!(r > 0.0 && r <= 1.0)) throw InvalidArgumentError("small sphere needs 0 < r <= 1");
  const double h = std::sqrt(1 - r * r);
  auto map = ChartedMap::sample("small_sphere", band_grid(n), SpaceForm::sphere(3), [=](std::span<const double> u) {
    return vec({r * std::sin(u[0]) * std::cos(u[1]), r * std::sin(u[0]) * std::sin(u[1]), r * std::cos(u[0]), h});
  });
  map.set_normal_hint([=](std::span<const double> u) {
    return vec({-h * std::sin(u[0]) * std::cos(u[1]), -h * std::sin(u[0]) * std::sin(u[1]), -h * std::cos(u[0]), r});
  });
  return map;
}

ChartedMap round_sphere_impl(double R, const std::vector<int>& n) {
  if (!(R > 0.0)) throw InvalidArgumentError("sphere radius must be positive");
  auto map = ChartedMap::sample("round_sphere", band_grid(n), SpaceForm::euclidean(3), [=](std::span<const double> u) {
    return vec({R * std::sin(u[0]) * std::cos(u[1]), R * std::sin(u[0]) * std::sin(u[1]), R * std::cos(u[0])});
  });
  map.set_normal_hint([](std::span<const double> u) {
    return vec({-std::sin(u[0]) * std::cos(u[1]), -std::sin(u[0]) * std::sin(u[1]), -std::cos(u[0])});
  });
  return map;
}

ChartedMap plane_impl(const std::vector<int>& n) {
  auto map = ChartedMap::sample("plane", torus_grid(n), SpaceForm::euclidean(3),
                                [](std::span<const double> u) { return vec({u[0], u[1], 0.0}); });
  map.set_shift(0, {kTwoPi, 0.0, 0.0});
  map.set_shift(1, {0.0, kTwoPi, 0.0});
  map.set_normal_hint([](std::span<const double>) { return vec({0.0, 0.0, 1.0}); });
  return map;
}

ChartedMap cylinder_impl(double r, const std::vector<int>& n) {
  if (!(r > 0.0)) throw InvalidArgumentError("cylinder radius must be positive");
  auto map = ChartedMap::sample("cylinder", torus_grid(n), SpaceForm::euclidean(3), [=](std::span<const double> u) {
    return vec({r * std::cos(u[0]), r * std::sin(u[0]), u[1]});
  });
  map.set_shift(1, {0.0, 0.0, kTwoPi});
  map.set_normal_hint([](std::span<const double> u) { return vec({-std::cos(u[0]), -std::sin(u[0]), 0.0}); });
  return map;
}

ChartedMap rotation_torus_impl(double a, double b, const std::vector<int>& n, double bump) {
  if (!(a > b * (1 + std::abs(bump)) && b > 0.0)) throw InvalidArgumentError("rotation torus needs a > b > 0");
  auto map = ChartedMap::sample("rotation_torus", torus_grid(n), SpaceForm::euclidean(3), [=](std::span<const double> u) {
    const double rho = b * (1 + bump * std::cos(u[0]) * std::sin(u[1]));
    const double R = a + rho * std::cos(u[1]);
    return vec({R * std::cos(u[0]), R * std::sin(u[0]), rho * std::sin(u[1])});
  });
  map.set_normal_hint([](std::span<const double> u) {
    return vec({-std::cos(u[1]) * std::cos(u[0]), -std::cos(u[1]) * std::sin(u[0]), -std::sin(u[1])});
  });
  return map;
}

ChartedMap flat_torus_e4_impl(double r1, double r2, const std::vector<int>& n, double warp) {
  if (!(r1 > 0.0 && r2 > 0.0)) throw InvalidArgumentError("radii must be positive");
  return ChartedMap::sample("flat_torus_e4", torus_grid(n), SpaceForm::euclidean(4), [=](std::span<const double> u) {
    const double a = warp1(u[0], warp), b = warp2(u[1], warp);
    return vec({r1 * std::cos(a), r1 * std::sin(a), r2 * std::cos(b), r2 * std::sin(b)});
  });
}

ChartedMap hyperbolic_torus_impl(double r1, double r2, const std::vector<int>& n, double warp) {
  if (!(r1 > 0.0 && r2 > 0.0)) throw InvalidArgumentError("radii must be positive");
  const double x0 = std::sqrt(1 + r1 * r1 + r2 * r2);
  return ChartedMap::sample("hyperbolic_torus", torus_grid(n), SpaceForm::hyperbolic(4), [=](std::span<const double> u) {
    const double a = warp1(u[0], warp), b = warp2(u[1], warp);
    return vec({x0, r1 * std::cos(a), r1 * std::sin(a), r2 * std::cos(b), r2 * std::sin(b)});
  });
}

ChartedMap curve_impl(std::uint64_t seed, bool spherical, const std::vector<int>& n, int modes) {
  if (modes < 1) throw InvalidArgumentError("curve needs at least one mode");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Eigen::Vector3d> ca, sa;
  for (int k = 1; k <= modes; ++k) {
    const double amp = 0.2 / (k * k);
    ca.emplace_back(amp * unit(rng), amp * unit(rng), amp * unit(rng));
    sa.emplace_back(amp * unit(rng), amp * unit(rng), amp * unit(rng));
  }
  auto gamma = [=](double u) {
    Eigen::Vector3d x(2 * std::cos(u), 2 * std::sin(u), spherical ? 0.7 : 0.0);
    for (int k = 1; k <= modes; ++k)
      x += ca[static_cast<std::size_t>(k - 1)] * std::cos(k * u) + sa[static_cast<std::size_t>(k - 1)] * std::sin(k * u);
    return x;
  };
  const std::string name = spherical ? "curve_s2" : "curve_e3";
  const SpaceForm amb = spherical ? SpaceForm::sphere(2) : SpaceForm::euclidean(3);
  return ChartedMap::sample(name, torus_grid(n), amb, [=](std::span<const double> u) {
    Eigen::Vector3d x = gamma(u[0]);
    if (spherical) x.normalize();
    return Eigen::VectorXd(x);
  });
}

ChartedMap pseudo_plane_impl(const std::vector<int>& n) {
  auto map = ChartedMap::sample("pseudo_plane", torus_grid(n), SpaceForm::pseudo_euclidean(2, 1),
                                [](std::span<const double> u) { return vec({u[0], u[1]}); });
  map.set_shift(0, {kTwoPi, 0.0});
  map.set_shift(1, {0.0, kTwoPi});
  return map;
}

ChartedMap torus4_impl(const std::vector<int>& n, double amp) {
  auto map = ChartedMap::sample("torus4_explicit", torus_grid(n), SpaceForm::euclidean(5), [=](std::span<const double> u) {
    return vec({u[0] + amp * std::sin(u[1]), u[1] + amp * std::sin(u[2]), u[2] + amp * std::sin(u[3]),
                u[3] + amp * std::sin(u[0]), amp * (std::cos(u[0] + u[1]) + std::sin(u[2] - u[3]))});
  });
  for (int a = 0; a < 4; ++a) {
    std::vector<double> s(5, 0.0);
    s[static_cast<std::size_t>(a)] = kTwoPi;
    map.set_shift(a, s);
  }
  map.set_explicit_metric([](std::span<const double> u) {
    Eigen::MatrixXd g(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        g(i, j) = i == j ? 1.0 + 0.2 * std::sin(u[static_cast<std::size_t>((i + 1) % 4)])
                         : 0.1 * std::cos(u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(j)]);
    return g;
  });
  return map;
}

double param(const FamilyParams& p, const std::string& k) { return p.at(k); }

std::vector<FamilyEntry> make_families() {
  std::vector<FamilyEntry> f;
  f.push_back({"clifford", "S^1(r1) x S^1(r2) in S^3(1)", 2,
               {{"r1", 0.6, "first radius"}, {"warp", 0.1, "angle reparametrization amplitude"}},
               [](const FamilyParams& p, const std::vector<int>& g) {
                 return clifford_impl(param(p, "r1"), sizes(g, 2), param(p, "warp"));
               },
               [](const FamilyParams& p) -> std::optional<NumericSpectrum> {
                 const double r1 = param(p, "r1"), r2 = std::sqrt(1 - r1 * r1);
                 return NumericSpectrum{{{r2 / r1, 1}, {-r1 / r2, 1}}, 1.0};
               }});
  f.push_back({"small_sphere", "S^2(r) in S^3(1), polar band", 2, {{"r", 0.7071067811865476, "radius"}},
               [](const FamilyParams& p, const std::vector<int>& g) { return small_sphere_impl(param(p, "r"), sizes(g, 2)); },
               [](const FamilyParams& p) -> std::optional<NumericSpectrum> {
                 const double r = param(p, "r");
                 return NumericSpectrum{{{std::sqrt(1 - r * r) / r, 2}}, 1.0};
               }});
  f.push_back({"round_sphere", "S^2(R) in E^3, polar band", 2, {{"R", 1.0, "radius"}},
               [](const FamilyParams& p, const std::vector<int>& g) { return round_sphere_impl(param(p, "R"), sizes(g, 2)); },
               [](const FamilyParams& p) -> std::optional<NumericSpectrum> {
                 return NumericSpectrum{{{1.0 / param(p, "R"), 2}}, 0.0};
               }});
  f.push_back({"plane", "totally geodesic plane in E^3", 2, {},
               [](const FamilyParams&, const std::vector<int>& g) { return plane_impl(sizes(g, 2)); },
               [](const FamilyParams&) -> std::optional<NumericSpectrum> { return NumericSpectrum{{{0.0, 2}}, 0.0}; }});
  f.push_back({"cylinder", "S^1(r) x R in E^3", 2, {{"r", 1.0, "radius"}},
               [](const FamilyParams& p, const std::vector<int>& g) { return cylinder_impl(param(p, "r"), sizes(g, 2)); },
               [](const FamilyParams& p) -> std::optional<NumericSpectrum> {
                 return NumericSpectrum{{{1.0 / param(p, "r"), 1}, {0.0, 1}}, 0.0};
               }});
  f.push_back({"rotation_torus", "torus of revolution in E^3", 2,
               {{"a", 2.0, "center radius"}, {"b", 0.7, "tube radius"}, {"bump", 0.0, "tube modulation"}},
               [](const FamilyParams& p, const std::vector<int>& g) {
                 return rotation_torus_impl(param(p, "a"), param(p, "b"), sizes(g, 2), param(p, "bump"));
               },
               [](const FamilyParams&) -> std::optional<NumericSpectrum> { return std::nullopt; }});
  f.push_back({"flat_torus_e4", "S^1(r1) x S^1(r2) in E^4", 2,
               {{"r1", 1.0, "first radius"}, {"r2", 0.5, "second radius"}, {"warp", 0.1, "angle reparametrization amplitude"}},
               [](const FamilyParams& p, const std::vector<int>& g) {
                 return flat_torus_e4_impl(param(p, "r1"), param(p, "r2"), sizes(g, 2), param(p, "warp"));
               },
               [](const FamilyParams&) -> std::optional<NumericSpectrum> { return std::nullopt; }});
  f.push_back({"hyperbolic_torus", "flat torus in H^4(-1)", 2,
               {{"r1", 0.8, "first radius"}, {"r2", 0.5, "second radius"}, {"warp", 0.1, "angle reparametrization amplitude"}},
               [](const FamilyParams& p, const std::vector<int>& g) {
                 return hyperbolic_torus_impl(param(p, "r1"), param(p, "r2"), sizes(g, 2), param(p, "warp"));
               },
               [](const FamilyParams&) -> std::optional<NumericSpectrum> { return std::nullopt; }});
  f.push_back({"curve_e3", "random closed curve in E^3", 1, {{"seed", 1.0, "generator seed"}, {"modes", 3.0, "Fourier modes"}},
               [](const FamilyParams& p, const std::vector<int>& g) {
                 return curve_impl(static_cast<std::uint64_t>(param(p, "seed")), false, sizes(g, 1),
                                   static_cast<int>(param(p, "modes")));
               },
               [](const FamilyParams&) -> std::optional<NumericSpectrum> { return std::nullopt; }});
  f.push_back({"curve_s2", "random closed curve in S^2(1)", 1, {{"seed", 1.0, "generator seed"}, {"modes", 3.0, "Fourier modes"}},
               [](const FamilyParams& p, const std::vector<int>& g) {
                 return curve_impl(static_cast<std::uint64_t>(param(p, "seed")), true, sizes(g, 1),
                                   static_cast<int>(param(p, "modes")));
               },
               [](const FamilyParams&) -> std::optional<NumericSpectrum> { return std::nullopt; }});
  f.push_back({"pseudo_plane", "identity of E^2_1", 2, {},
               [](const FamilyParams&, const std::vector<int>& g) { return pseudo_plane_impl(sizes(g, 2)); },
               [](const FamilyParams&) -> std::optional<NumericSpectrum> { return std::nullopt; }});
  f.push_back({"torus4_explicit", "T^4 -> E^5 with explicit metric", 4, {{"amp", 0.2, "perturbation amplitude"}},
               [](const FamilyParams& p, const std::vector<int>& g) { return torus4_impl(sizes(g, 4), param(p, "amp")); },
               [](const FamilyParams&) -> std::optional<NumericSpectrum> { return std::nullopt; }});
  return f;
}

}  // namespace

ChartedMap clifford_torus(double r1, int n, double warp) { return clifford_impl(r1, {n, n}, warp); }

double clifford_mean_curvature(double r1) {
  const double r2 = std::sqrt(1 - r1 * r1);
  return (r2 * r2 - r1 * r1) / (2 * r1 * r2);
}

ChartedMap small_sphere(double r, int n) { return small_sphere_impl(r, {n, n}); }
ChartedMap round_sphere(double R, int n) { return round_sphere_impl(R, {n, n}); }
ChartedMap plane_chart(int n) { return plane_impl({n, n}); }
ChartedMap cylinder(double r, int n) { return cylinder_impl(r, {n, n}); }
ChartedMap rotation_torus(double a, double b, int n, double bump) { return rotation_torus_impl(a, b, {n, n}, bump); }
ChartedMap flat_torus_e4(double r1, double r2, int n, double warp) { return flat_torus_e4_impl(r1, r2, {n, n}, warp); }
ChartedMap hyperbolic_torus(double r1, double r2, int n, double warp) {
  return hyperbolic_torus_impl(r1, r2, {n, n}, warp);
}
ChartedMap random_closed_curve(std::uint64_t seed, bool spherical, int n, int modes) {
  return curve_impl(seed, spherical, {n}, modes);
}
ChartedMap pseudo_plane(int n) { return pseudo_plane_impl({n, n}); }
ChartedMap torus4_explicit(int n, double amp) { return torus4_impl({n, n, n, n}, amp); }

const std::vector<FamilyEntry>& chart_families() {
  static const std::vector<FamilyEntry> families = make_families();
  return families;
}

const FamilyEntry& find_family(const std::string& id) {
  for (const auto& f : chart_families())
    if (f.id == id) return f;
  std::string known;
  for (const auto& f : chart_families()) known += (known.empty() ? "" : ", ") + f.id;
  throw ConfigError("unknown family '" + id + "' (known: " + known + ")");
}

FamilyParams resolve_params(const FamilyEntry& f, const FamilyParams& given) {
  FamilyParams out;
  for (const auto& p : f.params) out[p.name] = p.default_value;
  for (const auto& [k, v] : given) {
    if (!out.count(k)) throw InvalidArgumentError("family '" + f.id + "' has no parameter '" + k + "'");
    out[k] = v;
  }
  return out;
}

ChartedMap build_family(const std::string& id, const FamilyParams& params, const std::vector<int>& grid,
                        MetricMode mode) {
  const FamilyEntry& f = find_family(id);
  if (grid.empty()) throw InvalidArgumentError("grid sizes missing");
  for (int n : grid)
    if (n < 8) throw InvalidArgumentError("grid sizes must be at least 8");
  ChartedMap map = f.build(resolve_params(f, params), grid);
  if (mode == MetricMode::Explicit && map.mode() == MetricMode::Induced) {
    ChartGeometry geo(map);
    map.set_explicit_metric(geo.g());
  }
  return map;
}

}  // namespace cfvar
