#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cfvar {

/// Tensor-product sample grid over a box in R^m, stored row-major (last axis
/// fastest).  Periodic axes sample [lo, lo+length) with n points; open axes
/// sample [lo, lo+length] including both endpoints.
class Grid {
 public:
  struct Axis {
    int n = 0;
    double lo = 0.0;
    double length = 0.0;
    bool periodic = true;
  };

  Grid() = default;
  explicit Grid(std::vector<Axis> axes);

  /// Fully periodic grid with the given sizes and period lengths.
  static Grid periodic(const std::vector<int>& n, const std::vector<double>& length);

  int dim() const { return static_cast<int>(axes_.size()); }
  std::size_t size() const { return size_; }
  const Axis& axis(int a) const { return axes_[static_cast<std::size_t>(a)]; }
  bool fully_periodic() const;
  double step(int a) const;
  /// Product of steps; the trapezoidal cell volume.
  double cell_volume() const;

  std::size_t stride(int a) const { return strides_[static_cast<std::size_t>(a)]; }
  int coord_index(std::size_t point, int a) const {
    return static_cast<int>((point / stride(a)) % static_cast<std::size_t>(axis(a).n));
  }
  std::vector<int> multi_index(std::size_t point) const;
  std::size_t flat_index(std::span<const int> idx) const;

  /// Parameter coordinates u of a grid point.
  std::vector<double> coords(std::size_t point) const;

  /// False for points within `margin` samples of an open boundary.
  bool is_interior(std::size_t point, int margin) const;

 private:
  std::vector<Axis> axes_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// Finite-difference weights for the derivative of order `deriv` at x0 on the
/// given nodes (Fornberg's recursion).
std::vector<double> fornberg_weights(double x0, std::span<const double> nodes, int deriv);

/// Pointwise field on a grid: `comps` doubles per point, contiguous per point.
struct Field {
  int comps = 0;
  std::vector<double> data;

  Field() = default;
  Field(std::size_t npts, int comps_) : comps(comps_), data(npts * static_cast<std::size_t>(comps_), 0.0) {}

  double* at(std::size_t p) { return data.data() + p * static_cast<std::size_t>(comps); }
  const double* at(std::size_t p) const { return data.data() + p * static_cast<std::size_t>(comps); }
  std::size_t points() const { return comps ? data.size() / static_cast<std::size_t>(comps) : 0; }
};

/// First-derivative operator along one axis with central stencils of order 2
/// or 4; open axes fall back to shifted stencils of the same width.
class Differentiator {
 public:
  Differentiator(const Grid& grid, int order);

  int order() const { return order_; }
  int half_width() const { return order_ / 2; }
  const Grid& grid() const { return grid_; }

  /// d/du_axis of every component.  `shift`, when given, is the per-component
  /// jump of the field across the period of a periodic axis (deck
  /// translation of a periodic chart into flat space).
  Field diff(const Field& f, int axis, const std::vector<double>* shift = nullptr) const;

 private:
  Grid grid_;
  int order_;
  std::vector<double> central_;
  // per open axis: weights for each near-boundary offset, index [axis][pos]
  std::vector<std::vector<std::vector<double>>> open_weights_;
  std::vector<std::vector<int>> open_start_;
};

/// Number of worker threads: hardware concurrency capped by CFVAR_THREADS.
unsigned worker_threads();

/// Runs body(i) for i in [0, n) across worker threads.  Each index is handled
/// by exactly one thread, so writes to disjoint per-index slots are
/// deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cfvar
