#include "cfvar/energy.hpp"

#include "cfvar/error.hpp"
#include "cfvar/numeric.hpp"

#include <cmath>
#include <limits>

namespace cfvar {

namespace {

double volume_factor(const ChartGeometry& geo, std::size_t p) { return std::sqrt(std::abs(geo.metric(p).determinant())); }

bool has_open_axis(const Grid& g) { return !g.fully_periodic(); }

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

}  // namespace

EnergyValues integrate_invariants(const ChartGeometry& geo) {
  const std::size_t n = geo.size();
  std::vector<double> d1(n), d2(n);
  parallel_for(n, [&](std::size_t p) {
    const FormCoefficients h = geo.second_fundamental_form(p);
    const double w = volume_factor(geo, p);
    d1[p] = eval_q1(h) * w;
    d2[p] = eval_q2(h) * w;
  });
  const double cell = geo.grid().cell_volume();
  EnergyValues v;
  v.q1 = pairwise_sum(d1) * cell;
  v.q2 = pairwise_sum(d2) * cell;
  v.cf = v.q2 - v.q1;
  v.wc = geo.m() * v.q1 - v.q2;
  return v;
}

double bienergy(const ChartGeometry& geo) {
  const std::size_t n = geo.size();
  std::vector<double> d(n);
  parallel_for(n, [&](std::size_t p) {
    const Eigen::VectorXd t = geo.tension(p);
    d[p] = geo.ambient().inner(t, t) * volume_factor(geo, p);
  });
  return 0.5 * pairwise_sum(d) * geo.grid().cell_volume();
}

double chart_volume(const ChartGeometry& geo) {
  std::vector<double> d(geo.size());
  for (std::size_t p = 0; p < geo.size(); ++p) d[p] = volume_factor(geo, p);
  return pairwise_sum(d) * geo.grid().cell_volume();
}

EnergyReport integrate_invariants(const ChartedMap& map, const EnergyOptions& opts) {
  const bool open = has_open_axis(map.grid());
  if (open && !opts.allow_open)
    throw UnsupportedModeError("energies are only defined on closed (fully periodic) chart domains");
  EnergyReport r;
  r.chart = map.name();
  r.m = map.m();
  for (int a = 0; a < map.m(); ++a) r.grid.push_back(map.grid().axis(a).n);
  r.invariant = !open;
  ChartGeometry geo(map, opts.geometry);
  r.values = integrate_invariants(geo);
  r.volume = chart_volume(geo);
  r.quadrature_error = std::numeric_limits<double>::quiet_NaN();
  bool even = !open;
  for (int n : r.grid) even = even && n % 2 == 0 && n / 2 >= opts.geometry.stencil_order + 1;
  if (opts.estimate_error && even) {
    ChartGeometry half(map.subsampled(2), opts.geometry);
    r.half_grid = integrate_invariants(half);
    const auto& h = *r.half_grid;
    r.quadrature_error = std::max({rel_diff(r.values.q1, h.q1), rel_diff(r.values.q2, h.q2),
                                   rel_diff(r.values.cf, h.cf), rel_diff(r.values.wc, h.wc)});
  }
  return r;
}

HomothetyReport homothety_check(const ChartedMap& map, double scale, const GeometryOptions& opts) {
  if (map.mode() != MetricMode::Explicit)
    throw UnsupportedModeError("homothety check needs an explicit domain metric");
  if (!(scale > 0.0)) throw InvalidArgumentError("scale must be positive");
  HomothetyReport r;
  r.m = map.m();
  r.scale = scale;
  r.invariance_expected = r.m == 4;
  r.expected_factor = std::pow(scale, r.m - 4);
  r.base = integrate_invariants(ChartGeometry(map, opts));
  r.scaled = integrate_invariants(ChartGeometry(map.with_scaled_metric(scale), opts));
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
  r.relative_change_q1 = rel(r.scaled.q1, r.base.q1);
  r.relative_change_q2 = rel(r.scaled.q2, r.base.q2);
  r.law_defect_q1 = rel(r.scaled.q1, r.expected_factor * r.base.q1);
  r.law_defect_q2 = rel(r.scaled.q2, r.expected_factor * r.base.q2);
  return r;
}

}  // namespace cfvar
