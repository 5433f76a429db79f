#pragma once

#include "cfvar/chart_geometry.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace cfvar {

/// Values of nabla~^k dphi in the coordinate frame: k+1 domain slots, then
/// one ambient slot of width D, row-major.
struct JetField {
  int order = 0;
  int m = 0;
  int D = 0;
  Field values;

  const double* at(std::size_t p, std::initializer_list<int> slots) const;
  Eigen::VectorXd vec(std::size_t p, std::initializer_list<int> slots) const;
};

struct CovariantJets {
  JetField first;   ///< nabla~ dphi
  JetField second;  ///< nabla~^2 dphi
  JetField third;   ///< nabla~^3 dphi
};

/// Recursive construction: each order is the projected coordinate derivative
/// of the previous one minus Christoffel corrections on every domain slot.
CovariantJets covariant_jets(const ChartGeometry& geo);

struct NormSummary {
  double max = 0.0;  ///< max over interior points of the pointwise ambient norm
  double l2 = 0.0;   ///< sqrt of the mean squared pointwise norm
};

/// Per-point ambient vectors (D components) and a norm summary over the
/// interior points.
NormSummary summarize(const ChartGeometry& geo, const Field& f);

struct ResidualField {
  Field w1;
  Field w2;
  Field cf;  ///< w2 - w1, assembled
  Field wc;  ///< m w1 - w2, assembled
  Field alpha_beta;
  double alpha = 1.0;
  double beta = 0.0;
};

Field w1_residual(const ChartGeometry& geo, const CovariantJets& jets);
Field w2_residual(const ChartGeometry& geo, const CovariantJets& jets);
/// alpha W1 + beta W2; alpha = beta = 0 is rejected.
Field alpha_beta_residual(const ChartGeometry& geo, const CovariantJets& jets, double alpha, double beta);
ResidualField residuals(const ChartGeometry& geo, const CovariantJets& jets, double alpha = -1.0, double beta = 1.0);

/// W1 and W2 at one point summed over a pseudo-orthonormal domain frame
/// instead of contracting with g^-1.
std::pair<Eigen::VectorXd, Eigen::VectorXd> w_residuals_in_frame(const ChartGeometry& geo,
                                                                  const CovariantJets& jets, std::size_t p);

struct SecondOrderCF {
  Field tangent;  ///< -dphi(tr nabla Q)
  Field normal;   ///< 2c(m-1) tau - tr h(Q(-),-)
  Field total;
};

/// Second-order Chern-Federer operator of an isometric immersion into a
/// space form.  Throws UnsupportedModeError in explicit-metric mode.
SecondOrderCF cf_residual_second_order(const ChartGeometry& geo);

struct DeviationReport {
  double max_abs = 0.0;   ///< max_p |a(p) - b(p)|
  double scale = 1.0;     ///< max(1, max_p |b(p)|)
  double relative = 0.0;  ///< max_abs / scale
  std::size_t points = 0;
};

DeviationReport compare_fields(const ChartGeometry& geo, const Field& a, const Field& b);

/// W2 - W1 against the second-order expression.
DeviationReport oracle_equivalence(const ChartGeometry& geo, const CovariantJets& jets);

/// -nabla*nabla tau computed by differentiating the tension field twice,
/// against g^ij g^kl (nabla~^3 dphi)_ijkl.
DeviationReport rough_laplacian_check(const ChartGeometry& geo, const CovariantJets& jets);

struct CommutationReport {
  DeviationReport third_order;  ///< second jets, first two slots swapped
  DeviationReport fourth_order;  ///< third jets, slots 2 and 3 swapped
};

CommutationReport commutation_checks(const ChartGeometry& geo, const CovariantJets& jets);

struct MuNuReport {
  DeviationReport assembly;      ///< (v2 - v1) against (W2 - W1)
  double sigma3_defect = 0.0;    ///< max |pattern(sigma3 (mu+nu)) + (v2 - v1)|
  double sigma6_defect = 0.0;
  Field v1;
  Field v2;
};

MuNuReport mu_nu_contraction_residual(const ChartGeometry& geo, const CovariantJets& jets);

/// max |(nabla~^2 dphi)(X,Y,Z) - (nabla~^2 dphi)(X,Z,Y)| with the second
/// jet built from the unsymmetrized second fundamental form.
double second_jet_slot_asymmetry(const ChartGeometry& geo);

}  // namespace cfvar
