#pragma once

#include "cfvar/charted_map.hpp"
#include "cfvar/chart_geometry.hpp"
#include "cfvar/isopara_algebra.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cfvar {

// ---------------------------------------------------------------- families

/// S^1(r1) x S^1(r2) in S^3(1), r2 = sqrt(1 - r1^2).  The angles are warped
/// (a = u + w sin u, b = v + w/2 sin 2v) so that the discretization error is
/// not a single Fourier mode.  Normal nu = (-r2 x1, r1 x2): principal
/// curvatures r2/r1 and -r1/r2.
ChartedMap clifford_torus(double r1, int n, double warp = 0.1);
/// Mean curvature of clifford_torus with respect to its normal.
double clifford_mean_curvature(double r1);

/// S^2(r) in S^3(1) at height sqrt(1 - r^2), latitude chart on an open polar
/// band; normal toward decreasing r.
ChartedMap small_sphere(double r, int n);
/// S^2(R) in E^3, open polar band, inward normal.
ChartedMap round_sphere(double R, int n);
/// Totally geodesic plane in E^3 charted periodically with deck shifts.
ChartedMap plane_chart(int n);
/// S^1(r) x R in E^3, the R axis periodic with a deck shift.
ChartedMap cylinder(double r, int n);
/// Torus of revolution in E^3 with tube radius b (1 + bump cos u sin v).
ChartedMap rotation_torus(double a, double b, int n, double bump = 0.0);
/// Product of circles in E^4 (flat, codimension 2), warped angles.
ChartedMap flat_torus_e4(double r1, double r2, int n, double warp = 0.1);
/// (sqrt(1 + r1^2 + r2^2), r1 e^{ia}, r2 e^{ib}) in H^4(-1), codimension 2.
ChartedMap hyperbolic_torus(double r1, double r2, int n, double warp = 0.1);
/// Random smooth closed curve in E^3 (or its radial projection onto S^2(1)).
ChartedMap random_closed_curve(std::uint64_t seed, bool spherical, int n, int modes = 3);
/// Identity of the Lorentzian plane E^2_1, both axes periodic with shifts.
ChartedMap pseudo_plane(int n);
/// Map T^4 -> E^5 close to the identity with a non-flat explicit metric.
ChartedMap torus4_explicit(int n, double amp = 0.2);

using FamilyParams = std::map<std::string, double>;

struct FamilyParam {
  std::string name;
  double default_value = 0.0;
  std::string meaning;
};

struct FamilyEntry {
  std::string id;
  std::string description;
  int m = 0;
  std::vector<FamilyParam> params;
  /// grid holds one size per axis
  std::function<ChartedMap(const FamilyParams&, const std::vector<int>& grid)> build;
  /// Principal curvatures with multiplicities, for hypersurface families
  /// with known spectra.
  std::function<std::optional<NumericSpectrum>(const FamilyParams&)> spectrum;
};

const std::vector<FamilyEntry>& chart_families();
/// Throws ConfigError for unknown ids.
const FamilyEntry& find_family(const std::string& id);
/// Fills defaults; unknown parameter names are rejected.
FamilyParams resolve_params(const FamilyEntry& f, const FamilyParams& given);
/// grid may hold a single size (broadcast) or one size per axis.  In
/// explicit mode the sampled induced metric is attached as the explicit one.
ChartedMap build_family(const std::string& id, const FamilyParams& params, const std::vector<int>& grid,
                        MetricMode mode = MetricMode::Induced);

// ---------------------------------------------------------- flat tori in S^3

struct FlatTorusCase {
  std::string label;  ///< "i", "ii" or "iii"
  /// Admissible values of H^2 for CMC flat tori: always 0, plus
  /// -alpha/(2(alpha+beta)) in case iii.
  std::vector<double> h_squared;
};

FlatTorusCase flat_torus_classify(double alpha, double beta);

/// Coefficient of the unit normal in alpha W1 + beta W2 for a CMC flat torus
/// with mean curvature H: -4H(alpha + 2(alpha+beta)H^2).
double flat_torus_residual_coefficient(double alpha, double beta, double H);

struct CliffordRadii {
  double r1 = 0.0;
  double r2 = 0.0;
  double s = 0.0;  ///< sqrt(2(alpha+beta)/(alpha+2beta))
};

/// Radii of the non-minimal (alpha,beta)-critical Clifford torus.  Throws
/// InvalidArgumentError when no such torus exists.
CliffordRadii clifford_radii(double alpha, double beta);

struct FlatTorusChartCheck {
  double H = 0.0;
  double predicted = 0.0;     ///< residual coefficient
  double measured_max = 0.0;  ///< max |alpha W1 + beta W2 - predicted nu|
  double residual_max = 0.0;  ///< max |alpha W1 + beta W2|
  bool predicted_solution = false;
};

struct FlatTorusCrossCheck {
  double alpha = 0.0;
  double beta = 0.0;
  FlatTorusCase classification;
  std::vector<FlatTorusChartCheck> charts;
  bool agree = false;
};

/// Builds Clifford charts at every admissible H (and one control radius),
/// measures alpha W1 + beta W2 and compares with the classification.
FlatTorusCrossCheck flat_torus_cross_check(double alpha, double beta, int n = 64, double tol = 3e-3);

// -------------------------------------------------------- surface criteria

struct TwoDimVerdict {
  bool cf = false;
  std::string reason;
  double k_min = 0.0;
  double k_max = 0.0;
  double h_max = 0.0;        ///< max norm of the mean curvature vector
  double k_minus_2c = 0.0;   ///< max |K - 2c|
  std::vector<double> k_field;
  std::vector<double> h_field;
};

/// m = 2 immersions into space forms: CF iff K = 2c, or K constant and
/// minimal.  Fields are sampled at interior points.
TwoDimVerdict two_dim_criterion(const ChartGeometry& geo, double tol = 1e-4);

struct RicciFlatVerdict {
  double ricci_max = 0.0;   ///< max |Q^i_j| over interior points
  double cf_max = 0.0;      ///< max norm of the second-order CF expression
  double cf_normal_max = 0.0;
  bool ricci_flat = false;
  bool cf = false;
};

RicciFlatVerdict ricci_flat_check(const ChartGeometry& geo, double tol = 1e-5);

// ----------------------------------------------------- classification suite

struct RootReport {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  std::string matched;
};

struct ClassificationReport {
  std::string id;
  std::string title;
  ConditionKind kind = ConditionKind::CF;
  std::string parameters;
  std::string derived;
  std::string expected;
  std::vector<std::string> coefficients;  ///< derived canonical representative, descending
  int zero_root_multiplicity = 0;
  std::vector<RootReport> roots;
  std::vector<std::string> expected_roots;
  std::string multiplicities;
  std::vector<std::string> evidence;
  bool match = false;
};

/// Every isoparametric classification: spherical g = 1, 2, 3, 4, 6 families,
/// Euclidean and hyperbolic ambients.  Parameterized families are checked
/// for m <= max_m and symbolically in their parameters.
std::vector<ClassificationReport> classification_suite(int max_m = 8);

struct IsoparaFamily {
  std::string id;
  std::string title;
  int g = 0;
  std::vector<int> multiplicities;
  std::string evidence;
};

/// Spherical isoparametric family by id (g1, g2, g3_1..g3_4, g4_1..g4_6,
/// g6_1, g6_2) or by dimension alias with g given (M18 with g = 4).  The
/// g = 4 and g = 6 multiplicities are recovered by matching the derived
/// condition against the reference polynomial or root set; m is the family
/// parameter of g1, g4_4..g4_6 and p, m of g2.  Throws ConfigError for
/// unknown ids.
IsoparaFamily isopara_family(const std::string& name, int g = 0, int m = 0, int p = 1);

std::string format_table(const std::vector<ClassificationReport>& reports);

}  // namespace cfvar
