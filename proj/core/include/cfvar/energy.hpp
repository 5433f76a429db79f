#pragma once

#include "cfvar/chart_geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cfvar {

struct EnergyValues {
  double q1 = 0.0;
  double q2 = 0.0;
  double cf = 0.0;  ///< q2 - q1
  double wc = 0.0;  ///< m q1 - q2
};

struct EnergyReport {
  std::string chart;
  int m = 0;
  std::vector<int> grid;
  EnergyValues values;
  double volume = 0.0;
  /// Values on the half grid, when every axis has an even size.
  std::optional<EnergyValues> half_grid;
  /// max over the four integrals of |fine - half| / max(1, |fine|); NaN when
  /// no half grid was available.
  double quadrature_error = 0.0;
  /// false for charts with open axes (boundary terms not accounted for).
  bool invariant = true;
};

struct EnergyOptions {
  GeometryOptions geometry;
  bool estimate_error = true;
  /// Integrate charts with open axes anyway (report flagged non-invariant).
  bool allow_open = false;
};

/// Trapezoidal sums of the Q1, Q2 densities times sqrt|det g| over all grid
/// nodes.  Densities are evaluated through the frame coefficients of the
/// second fundamental form.
EnergyReport integrate_invariants(const ChartedMap& map, const EnergyOptions& opts = {});
EnergyValues integrate_invariants(const ChartGeometry& geo);

/// 1/2 of the integral of <tau, tau>, with tau = g^ij B_ij in ambient
/// coordinates.
double bienergy(const ChartGeometry& geo);

/// Riemannian volume of the chart domain.
double chart_volume(const ChartGeometry& geo);

struct HomothetyReport {
  int m = 0;
  double scale = 1.0;
  EnergyValues base;
  EnergyValues scaled;
  double relative_change_q1 = 0.0;
  double relative_change_q2 = 0.0;
  bool invariance_expected = false;  ///< m == 4
  double expected_factor = 1.0;      ///< scale^(m-4)
  /// |scaled - factor base| / max(1e-300, |factor base|)
  double law_defect_q1 = 0.0;
  double law_defect_q2 = 0.0;
};

/// Recompute I^Q1, I^Q2 with g -> scale^2 g.  Requires an explicit metric.
HomothetyReport homothety_check(const ChartedMap& map, double scale, const GeometryOptions& opts = {});

}  // namespace cfvar
