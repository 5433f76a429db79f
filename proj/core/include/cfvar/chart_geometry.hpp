#pragma once

#include "cfvar/charted_map.hpp"
#include "cfvar/invariant_algebra.hpp"

#include <Eigen/Dense>

#include <vector>

namespace cfvar {

struct GeometryOptions {
  int stencil_order = 4;
  double condition_limit = 1e8;
};

/// Grid-wide pointwise geometry of a charted map, computed once on
/// construction.  Layouts per point (row-major, 0-based):
///   E:      [i*D + c]              dphi(d_i), projected to T N
///   g, g^-1:[i*m + j]
///   Gamma:  [(k*m + i)*m + j]      Gamma^k_ij
///   B:      [(i*m + j)*D + c]      second fundamental form (nabla~ dphi)(d_i,d_j)
///   Riem:   [((a*m + b)*m + c)*m + d]  R^a_bcd with R(d_c,d_d)d_b = R^a_bcd d_a
///   Ric:    [b*m + d]
///   Q:      [a*m + b]              Ricci operator g^-1 Ric
class ChartGeometry {
 public:
  explicit ChartGeometry(const ChartedMap& map, GeometryOptions opts = {});

  const ChartedMap& map() const { return map_; }
  const Grid& grid() const { return map_.grid(); }
  const SpaceForm& ambient() const { return map_.ambient(); }
  const Differentiator& differentiator() const { return diff_; }
  const GeometryOptions& options() const { return opts_; }
  int m() const { return m_; }
  int D() const { return D_; }
  std::size_t size() const { return grid().size(); }
  bool immersion_mode() const { return map_.mode() == MetricMode::Induced; }

  /// Samples within this many points of an open boundary are excluded from
  /// reports.
  int margin() const;
  bool is_interior(std::size_t p) const { return grid().is_interior(p, margin()); }
  std::vector<std::size_t> interior_points() const;

  const Field& X() const { return map_.samples(); }
  const Field& E() const { return E_; }
  const Field& g() const { return g_; }
  const Field& g_inv() const { return ginv_; }
  const Field& christoffel() const { return gamma_; }
  const Field& B() const { return B_; }
  const Field& B_unsymmetrized() const { return Braw_; }
  const Field& riemann() const { return riem_; }
  const Field& ricci() const { return ric_; }
  const Field& ricci_operator_field() const { return Q_; }

  /// Domain signature (taken from the metric at the first point).
  const Signature& domain_sig() const { return domain_sig_; }

  Eigen::MatrixXd metric(std::size_t p) const;
  Eigen::MatrixXd metric_inverse(std::size_t p) const;
  Eigen::VectorXd position(std::size_t p) const;
  Eigen::VectorXd e_vec(std::size_t p, int i) const;
  Eigen::VectorXd b_vec(std::size_t p, int i, int j) const;

  /// Pseudo-orthonormal domain frame (columns, coordinate components) from
  /// the eigendecomposition of g, timelike vectors first.
  Eigen::MatrixXd domain_frame(std::size_t p) const;

  /// Pseudo-orthonormal frame of T_X N (columns, ambient components).  In
  /// immersion mode the normal vectors come first, then dphi of the domain
  /// frame; vectors with negative norm are moved to the front.  `sig`
  /// receives the codomain signature.
  Eigen::MatrixXd ambient_frame(std::size_t p, Signature* sig = nullptr, int* codim = nullptr) const;

  /// h^alpha_ij = <B(e_i,e_j), xi_alpha> in the two frames above.
  FormCoefficients second_fundamental_form(std::size_t p) const;

  Eigen::MatrixXd ricci_operator(std::size_t p) const;
  double scalar_curvature(std::size_t p) const;

  /// tau = g^ij B_ij.
  Eigen::VectorXd tension(std::size_t p) const;
  Eigen::VectorXd mean_curvature_vector(std::size_t p) const;

  /// Unit normal of a Riemannian hypersurface, oriented by the map's normal
  /// hint when present.
  Eigen::VectorXd unit_normal(std::size_t p) const;
  /// Eigenvalues of the shape operator g^-1 <B, xi>, descending.
  std::vector<double> principal_curvatures(std::size_t p) const;

  /// (A_tau)^a_b = g^ac <B_cb, tau>.
  Eigen::MatrixXd shape_operator_tension(std::size_t p) const;
  /// (A^C)^a_b = g^ac g^de <B_cd, B_eb>.
  Eigen::MatrixXd casorati_operator(std::size_t p) const;
  /// Xi = A_tau - A^C.
  Eigen::MatrixXd xi_operator(std::size_t p) const;

  double metric_condition(std::size_t p) const;

 private:
  void require_immersion(const char* what) const;

  ChartedMap map_;
  GeometryOptions opts_;
  Differentiator diff_;
  int m_;
  int D_;
  Signature domain_sig_;
  Field E_, g_, ginv_, gamma_, B_, Braw_, riem_, ric_, Q_;
};

/// Convenience point operations.
FormCoefficients second_fundamental_form(const ChartGeometry& geo, std::size_t p);
Eigen::MatrixXd ricci_operator(const ChartGeometry& geo, std::size_t p);
Eigen::MatrixXd xi_operator(const ChartGeometry& geo, std::size_t p);
std::vector<double> principal_curvatures(const ChartGeometry& geo, std::size_t p);
Eigen::VectorXd mean_curvature_vector(const ChartGeometry& geo, std::size_t p);

/// Maximum over interior points of max|Q - c(m-1) id - Xi|.
double gauss_identity_defect(const ChartGeometry& geo);

}  // namespace cfvar
