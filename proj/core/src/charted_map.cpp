#include "cfvar/charted_map.hpp"

#include "cfvar/error.hpp"

#include <cstdint>
#include <istream>
#include <ostream>

namespace cfvar {

ChartedMap::ChartedMap(std::string name, Grid grid, SpaceForm ambient, Field samples)
    : name_(std::move(name)),
      grid_(std::move(grid)),
      ambient_(ambient),
      X_(std::move(samples)),
      shifts_(static_cast<std::size_t>(grid_.dim())) {
  if (X_.comps != ambient_.ambient_dim())
    throw InvalidArgumentError("sample width does not match ambient dimension");
  if (X_.points() != grid_.size()) throw InvalidArgumentError("sample count does not match grid");
  if (ambient_.sig().dim < grid_.dim()) throw InvalidArgumentError("ambient dimension below domain dimension");
}

ChartedMap ChartedMap::sample(std::string name, Grid grid, SpaceForm ambient, const PointMap& phi) {
  Field X(grid.size(), ambient.ambient_dim());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const auto u = grid.coords(p);
    const Eigen::VectorXd x = phi(u);
    if (x.size() != X.comps) throw InvalidArgumentError("map returned a vector of the wrong size");
    std::copy(x.data(), x.data() + X.comps, X.at(p));
  }
  return ChartedMap(std::move(name), std::move(grid), ambient, std::move(X));
}

void ChartedMap::set_explicit_metric(Field g) {
  if (g.comps != m() * m() || g.points() != grid_.size())
    throw InvalidArgumentError("explicit metric field has the wrong shape");
  metric_ = std::move(g);
}

void ChartedMap::set_explicit_metric(const MetricMap& gfun) {
  Field g(grid_.size(), m() * m());
  for (std::size_t p = 0; p < grid_.size(); ++p) {
    const auto u = grid_.coords(p);
    const Eigen::MatrixXd gm = gfun(u);
    if (gm.rows() != m() || gm.cols() != m()) throw InvalidArgumentError("metric callable returned wrong shape");
    for (int i = 0; i < m(); ++i)
      for (int j = 0; j < m(); ++j) g.at(p)[i * m() + j] = 0.5 * (gm(i, j) + gm(j, i));
  }
  metric_ = std::move(g);
}

const std::vector<double>* ChartedMap::shift(int axis) const {
  const auto& s = shifts_[static_cast<std::size_t>(axis)];
  return s ? &*s : nullptr;
}

void ChartedMap::set_shift(int axis, std::vector<double> s) {
  if (axis < 0 || axis >= m()) throw InvalidArgumentError("shift axis out of range");
  if (!grid_.axis(axis).periodic) throw InvalidArgumentError("shift requires a periodic axis");
  if (static_cast<int>(s.size()) != ambient_dim()) throw InvalidArgumentError("shift has wrong dimension");
  shifts_[static_cast<std::size_t>(axis)] = std::move(s);
}

void ChartedMap::set_normal_hint(const PointMap& hint) {
  Field h(grid_.size(), ambient_dim());
  for (std::size_t p = 0; p < grid_.size(); ++p) {
    const auto u = grid_.coords(p);
    const Eigen::VectorXd v = hint(u);
    if (v.size() != ambient_dim()) throw InvalidArgumentError("normal hint has wrong dimension");
    std::copy(v.data(), v.data() + v.size(), h.at(p));
  }
  hint_ = std::move(h);
}

void ChartedMap::set_normal_hint(Field hint) {
  if (hint.comps != ambient_dim() || hint.points() != grid_.size())
    throw InvalidArgumentError("normal hint field has the wrong shape");
  hint_ = std::move(hint);
}

ChartedMap ChartedMap::transformed(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) const {
  const int D = ambient_dim();
  if (A.rows() != D || A.cols() != D || b.size() != D) throw InvalidArgumentError("transform has wrong shape");
  ChartedMap out = *this;
  auto apply = [&](Field& f, bool affine) {
    for (std::size_t p = 0; p < f.points(); ++p) {
      Eigen::Map<Eigen::VectorXd> v(f.at(p), D);
      Eigen::VectorXd w = A * v;
      if (affine) w += b;
      v = w;
    }
  };
  apply(out.X_, true);
  if (out.hint_) apply(*out.hint_, false);
  for (auto& s : out.shifts_)
    if (s) {
      Eigen::Map<Eigen::VectorXd> v(s->data(), D);
      Eigen::VectorXd w = A * v;
      v = w;
    }
  return out;
}

ChartedMap ChartedMap::with_scaled_metric(double s) const {
  if (!metric_) throw UnsupportedModeError("metric scaling requires an explicit domain metric");
  ChartedMap out = *this;
  for (double& x : out.metric_->data) x *= s * s;
  return out;
}

namespace {

template <class T>
T read_pod(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw ConfigError("truncated sampled-map stream");
  return v;
}

template <class T>
void write_pod(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

}  // namespace

ChartedMap read_sampled_map(std::istream& in, const SpaceForm& ambient, std::string name) {
  const auto m = read_pod<std::uint32_t>(in);
  if (m == 0 || m > 8) throw ConfigError("sampled map: domain dimension out of range");
  std::vector<int> n(m);
  for (auto& x : n) {
    x = static_cast<int>(read_pod<std::uint32_t>(in));
    if (x < 2 || x > (1 << 16)) throw ConfigError("sampled map: bad grid size");
  }
  const auto D = read_pod<std::uint32_t>(in);
  if (static_cast<int>(D) != ambient.ambient_dim()) throw ConfigError("sampled map: ambient dimension mismatch");
  std::vector<double> len(m);
  for (auto& x : len) x = read_pod<double>(in);
  Grid grid = Grid::periodic(n, len);
  Field X(grid.size(), static_cast<int>(D));
  in.read(reinterpret_cast<char*>(X.data.data()), static_cast<std::streamsize>(X.data.size() * sizeof(double)));
  if (!in) throw ConfigError("sampled map: truncated sample block");
  return ChartedMap(std::move(name), std::move(grid), ambient, std::move(X));
}

void write_sampled_map(std::ostream& out, const ChartedMap& map) {
  const Grid& g = map.grid();
  write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(g.dim()));
  for (int a = 0; a < g.dim(); ++a) write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(g.axis(a).n));
  write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(map.ambient_dim()));
  for (int a = 0; a < g.dim(); ++a) write_pod<double>(out, g.axis(a).length);
  out.write(reinterpret_cast<const char*>(map.samples().data.data()),
            static_cast<std::streamsize>(map.samples().data.size() * sizeof(double)));
}

ChartedMap ChartedMap::subsampled(int stride) const {
  if (stride < 1) throw InvalidArgumentError("stride must be positive");
  std::vector<Grid::Axis> axes;
  for (int a = 0; a < m(); ++a) {
    const auto& ax = grid_.axis(a);
    if (!ax.periodic || ax.n % stride != 0)
      throw InvalidArgumentError("subsampling needs periodic axes with sizes divisible by the stride");
    axes.push_back({ax.n / stride, ax.lo, ax.length, true});
  }
  Grid coarse(axes);
  auto pick = [&](const Field& f) {
    Field out(coarse.size(), f.comps);
    std::vector<int> idx(static_cast<std::size_t>(m()));
    for (std::size_t q = 0; q < coarse.size(); ++q) {
      const auto ci = coarse.multi_index(q);
      for (int a = 0; a < m(); ++a) idx[static_cast<std::size_t>(a)] = ci[static_cast<std::size_t>(a)] * stride;
      const double* src = f.at(grid_.flat_index(idx));
      std::copy(src, src + f.comps, out.at(q));
    }
    return out;
  };
  ChartedMap out(name_, coarse, ambient_, pick(X_));
  if (metric_) out.metric_ = pick(*metric_);
  if (hint_) out.hint_ = pick(*hint_);
  out.shifts_ = shifts_;
  return out;
}

}  // namespace cfvar
