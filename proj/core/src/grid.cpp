#include "cfvar/grid.hpp"

#include "cfvar/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace cfvar {

Grid::Grid(std::vector<Axis> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw InvalidArgumentError("grid needs at least one axis");
  strides_.assign(axes_.size(), 1);
  size_ = 1;
  for (std::size_t a = axes_.size(); a-- > 0;) {
    if (axes_[a].n < 2) throw InvalidArgumentError("grid axis needs at least two samples");
    if (!(axes_[a].length > 0)) throw InvalidArgumentError("grid axis length must be positive");
    strides_[a] = size_;
    size_ *= static_cast<std::size_t>(axes_[a].n);
  }
}

Grid Grid::periodic(const std::vector<int>& n, const std::vector<double>& length) {
  if (n.size() != length.size()) throw InvalidArgumentError("grid sizes and lengths differ in rank");
  std::vector<Axis> axes;
  for (std::size_t a = 0; a < n.size(); ++a) axes.push_back({n[a], 0.0, length[a], true});
  return Grid(std::move(axes));
}

bool Grid::fully_periodic() const {
  return std::all_of(axes_.begin(), axes_.end(), [](const Axis& x) { return x.periodic; });
}

double Grid::step(int a) const {
  const Axis& x = axis(a);
  return x.periodic ? x.length / x.n : x.length / (x.n - 1);
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim(); ++a) v *= step(a);
  return v;
}

std::vector<int> Grid::multi_index(std::size_t point) const {
  std::vector<int> idx(axes_.size());
  for (int a = 0; a < dim(); ++a) idx[static_cast<std::size_t>(a)] = coord_index(point, a);
  return idx;
}

std::size_t Grid::flat_index(std::span<const int> idx) const {
  std::size_t p = 0;
  for (int a = 0; a < dim(); ++a) p += static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]) * stride(a);
  return p;
}

std::vector<double> Grid::coords(std::size_t point) const {
  std::vector<double> u(axes_.size());
  for (int a = 0; a < dim(); ++a) u[static_cast<std::size_t>(a)] = axis(a).lo + coord_index(point, a) * step(a);
  return u;
}

bool Grid::is_interior(std::size_t point, int margin) const {
  for (int a = 0; a < dim(); ++a) {
    if (axis(a).periodic) continue;
    const int i = coord_index(point, a);
    if (i < margin || i >= axis(a).n - margin) return false;
  }
  return true;
}

std::vector<double> fornberg_weights(double x0, std::span<const double> nodes, int deriv) {
  const int n = static_cast<int>(nodes.size()) - 1;
  const int M = deriv;
  // c[j][k]: weight of node j for derivative k
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n + 1), std::vector<double>(static_cast<std::size_t>(M + 1), 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, M);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[static_cast<std::size_t>(i)] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
              c1 * (k * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
                    c5 * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]) / c2;
        c[static_cast<std::size_t>(i)][0] = -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            (c4 * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
             k * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]) / c3;
      c[static_cast<std::size_t>(j)][0] = c4 * c[static_cast<std::size_t>(j)][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) w[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)][static_cast<std::size_t>(M)];
  return w;
}

Differentiator::Differentiator(const Grid& grid, int order) : grid_(grid), order_(order) {
  if (order != 2 && order != 4) throw InvalidArgumentError("stencil order must be 2 or 4");
  const int h = half_width();
  std::vector<double> nodes;
  for (int k = -h; k <= h; ++k) nodes.push_back(k);
  central_ = fornberg_weights(0.0, nodes, 1);

  open_weights_.resize(static_cast<std::size_t>(grid.dim()));
  open_start_.resize(static_cast<std::size_t>(grid.dim()));
  for (int a = 0; a < grid.dim(); ++a) {
    const auto& ax = grid.axis(a);
    if (ax.periodic) continue;
    if (ax.n < order + 1) throw InvalidArgumentError("open axis too short for stencil");
    auto& W = open_weights_[static_cast<std::size_t>(a)];
    auto& S = open_start_[static_cast<std::size_t>(a)];
    W.resize(static_cast<std::size_t>(ax.n));
    S.resize(static_cast<std::size_t>(ax.n));
    for (int i = 0; i < ax.n; ++i) {
      const int start = std::clamp(i - h, 0, ax.n - (order + 1));
      std::vector<double> nd;
      for (int k = 0; k <= order; ++k) nd.push_back(start + k);
      W[static_cast<std::size_t>(i)] = fornberg_weights(i, nd, 1);
      S[static_cast<std::size_t>(i)] = start;
    }
  }
}

Field Differentiator::diff(const Field& f, int axis, const std::vector<double>* shift) const {
  const Grid& g = grid_;
  const auto& ax = g.axis(axis);
  const double inv_h = 1.0 / g.step(axis);
  const std::size_t stride = g.stride(axis);
  const int n = ax.n;
  const int comps = f.comps;
  Field out(g.size(), comps);
  const int h = half_width();

  parallel_for(g.size(), [&](std::size_t p) {
    const int i = g.coord_index(p, axis);
    const std::size_t base = p - static_cast<std::size_t>(i) * stride;
    double* o = out.at(p);
    if (ax.periodic) {
      for (int k = -h; k <= h; ++k) {
        const double w = central_[static_cast<std::size_t>(k + h)];
        if (w == 0.0) continue;
        int j = i + k;
        int wraps = 0;
        while (j < 0) { j += n; --wraps; }
        while (j >= n) { j -= n; ++wraps; }
        const double* src = f.at(base + static_cast<std::size_t>(j) * stride);
        for (int c = 0; c < comps; ++c) {
          double v = src[c];
          if (shift && wraps) v += wraps * (*shift)[static_cast<std::size_t>(c)];
          o[c] += w * v;
        }
      }
    } else {
      const auto& W = open_weights_[static_cast<std::size_t>(axis)][static_cast<std::size_t>(i)];
      const int start = open_start_[static_cast<std::size_t>(axis)][static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < W.size(); ++k) {
        const double* src = f.at(base + static_cast<std::size_t>(start + static_cast<int>(k)) * stride);
        for (int c = 0; c < comps; ++c) o[c] += W[k] * src[c];
      }
    }
    for (int c = 0; c < comps; ++c) o[c] *= inv_h;
  });
  return out;
}

unsigned worker_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CFVAR_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
    }
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned nt = static_cast<unsigned>(std::min<std::size_t>(worker_threads(), n));
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + nt - 1) / nt;
  for (unsigned t = 0; t < nt; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace cfvar
