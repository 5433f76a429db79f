#pragma once

#include "cfvar/invariant_algebra.hpp"

#include <Eigen/Dense>

#include <string>

namespace cfvar {

enum class SpaceModel { PseudoEuclidean, SphereEmbedded, HyperbolicEmbedded };

/// Constant-curvature ambient N^n(c).  Curved models are realized
/// extrinsically: the sphere of radius 1/sqrt(c) in E^{n+1}, and the upper
/// sheet of -x_1^2 + x_2^2 + ... + x_{n+1}^2 = 1/c in Minkowski space.
class SpaceForm {
 public:
  static SpaceForm euclidean(int n);
  static SpaceForm pseudo_euclidean(int n, int q);
  static SpaceForm sphere(int n, double c = 1.0);
  static SpaceForm hyperbolic(int n, double c = -1.0);

  const Signature& sig() const { return sig_; }
  double curvature() const { return c_; }
  SpaceModel model() const { return model_; }
  /// Number of coordinates of the flat space the model lives in.
  int ambient_dim() const { return model_ == SpaceModel::PseudoEuclidean ? sig_.dim : sig_.dim + 1; }

  /// Sign of the k-th ambient coordinate in the flat inner product.
  int ambient_epsilon(int k) const;
  double inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  double inner(const double* u, const double* v) const;

  /// Orthogonal projection of an ambient vector w onto T_X N.
  Eigen::VectorXd project(const Eigen::VectorXd& X, const Eigen::VectorXd& w) const;
  void project_inplace(const double* X, double* w) const;

  /// R^N(U,V)W = c(<V,W>U - <U,W>V).
  Eigen::VectorXd curvature_tensor(const Eigen::VectorXd& U, const Eigen::VectorXd& V,
                                   const Eigen::VectorXd& W) const;

  /// Distance of X from the model, e.g. |<X,X> - 1/c| for curved models.
  double constraint_defect(const Eigen::VectorXd& X) const;

  std::string describe() const;

 private:
  SpaceForm(Signature sig, double c, SpaceModel model) : sig_(sig), c_(c), model_(model) {}

  Signature sig_;
  double c_;
  SpaceModel model_;
};

}  // namespace cfvar
