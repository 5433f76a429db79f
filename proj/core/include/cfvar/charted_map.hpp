#pragma once

#include "cfvar/grid.hpp"
#include "cfvar/space_form.hpp"

#include <Eigen/Dense>

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cfvar {

enum class MetricMode { Induced, Explicit };

using PointMap = std::function<Eigen::VectorXd(std::span<const double> u)>;
using MetricMap = std::function<Eigen::MatrixXd(std::span<const double> u)>;

/// Map from a grid domain into a space form, sampled on the grid.
///
/// In induced mode the domain metric is the pullback of the ambient metric
/// (isometric immersion); in explicit mode it is a supplied field.  A
/// periodic axis may carry a deck translation: the map satisfies
/// X(u + L e_a) = X(u) + shift_a, which lets cylinders and planes be charted
/// periodically in flat ambients.
class ChartedMap {
 public:
  ChartedMap(std::string name, Grid grid, SpaceForm ambient, Field samples);

  static ChartedMap sample(std::string name, Grid grid, SpaceForm ambient, const PointMap& phi);

  const std::string& name() const { return name_; }
  const Grid& grid() const { return grid_; }
  const SpaceForm& ambient() const { return ambient_; }
  int m() const { return grid_.dim(); }
  int ambient_dim() const { return ambient_.ambient_dim(); }
  const Field& samples() const { return X_; }

  MetricMode mode() const { return metric_ ? MetricMode::Explicit : MetricMode::Induced; }
  const std::optional<Field>& explicit_metric() const { return metric_; }
  void set_explicit_metric(Field g);
  void set_explicit_metric(const MetricMap& g);

  const std::vector<double>* shift(int axis) const;
  void set_shift(int axis, std::vector<double> s);

  /// Optional ambient vector per point used to orient the unit normal of a
  /// hypersurface (<xi, hint> > 0).
  const std::optional<Field>& normal_hint() const { return hint_; }
  void set_normal_hint(const PointMap& hint);
  void set_normal_hint(Field hint);

  /// Copy with every sample replaced by A X + b (A must preserve the ambient
  /// model, e.g. an isometry).  Shifts and hints are transformed linearly.
  ChartedMap transformed(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) const;

  /// Same map with the explicit metric multiplied by s^2.  Throws
  /// UnsupportedModeError in induced mode.
  ChartedMap with_scaled_metric(double s) const;

  /// Every stride-th sample along each axis.  All axes must be periodic with
  /// sizes divisible by stride.
  ChartedMap subsampled(int stride) const;

 private:
  std::string name_;
  Grid grid_;
  SpaceForm ambient_;
  Field X_;
  std::optional<Field> metric_;
  std::vector<std::optional<std::vector<double>>> shifts_;
  std::optional<Field> hint_;
};

/// Binary sampled-map format (little endian):
///   uint32 m, m x uint32 grid sizes, uint32 D, m x float64 period lengths,
///   then npts x D float64 ambient coordinates in row-major grid order.
/// All axes are periodic with lo = 0.
ChartedMap read_sampled_map(std::istream& in, const SpaceForm& ambient, std::string name = "sampled");
void write_sampled_map(std::ostream& out, const ChartedMap& map);

}  // namespace cfvar
