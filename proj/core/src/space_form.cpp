#include "cfvar/space_form.hpp"

#include "cfvar/error.hpp"

#include <cmath>
#include <sstream>

namespace cfvar {

SpaceForm SpaceForm::euclidean(int n) { return SpaceForm(Signature(n, 0), 0.0, SpaceModel::PseudoEuclidean); }

SpaceForm SpaceForm::pseudo_euclidean(int n, int q) {
  return SpaceForm(Signature(n, q), 0.0, SpaceModel::PseudoEuclidean);
}

SpaceForm SpaceForm::sphere(int n, double c) {
  if (!(c > 0)) throw InvalidArgumentError("sphere model requires c > 0");
  return SpaceForm(Signature(n, 0), c, SpaceModel::SphereEmbedded);
}

SpaceForm SpaceForm::hyperbolic(int n, double c) {
  if (!(c < 0)) throw InvalidArgumentError("hyperbolic model requires c < 0");
  return SpaceForm(Signature(n, 0), c, SpaceModel::HyperbolicEmbedded);
}

int SpaceForm::ambient_epsilon(int k) const {
  switch (model_) {
    case SpaceModel::PseudoEuclidean: return sig_.epsilon(k);
    case SpaceModel::SphereEmbedded: return 1;
    case SpaceModel::HyperbolicEmbedded: return k == 0 ? -1 : 1;
  }
  return 1;
}

double SpaceForm::inner(const double* u, const double* v) const {
  double s = 0.0;
  for (int k = 0; k < ambient_dim(); ++k) s += ambient_epsilon(k) * u[k] * v[k];
  return s;
}

double SpaceForm::inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  return inner(u.data(), v.data());
}

void SpaceForm::project_inplace(const double* X, double* w) const {
  if (model_ == SpaceModel::PseudoEuclidean) return;
  const double xx = inner(X, X);
  const double f = inner(w, X) / xx;
  for (int k = 0; k < ambient_dim(); ++k) w[k] -= f * X[k];
}

Eigen::VectorXd SpaceForm::project(const Eigen::VectorXd& X, const Eigen::VectorXd& w) const {
  Eigen::VectorXd out = w;
  project_inplace(X.data(), out.data());
  return out;
}

Eigen::VectorXd SpaceForm::curvature_tensor(const Eigen::VectorXd& U, const Eigen::VectorXd& V,
                                            const Eigen::VectorXd& W) const {
  if (c_ == 0.0) return Eigen::VectorXd::Zero(U.size());
  return c_ * (inner(V, W) * U - inner(U, W) * V);
}

double SpaceForm::constraint_defect(const Eigen::VectorXd& X) const {
  switch (model_) {
    case SpaceModel::PseudoEuclidean: return 0.0;
    case SpaceModel::SphereEmbedded:
    case SpaceModel::HyperbolicEmbedded: return std::abs(inner(X, X) - 1.0 / c_);
  }
  return 0.0;
}

std::string SpaceForm::describe() const {
  std::ostringstream os;
  switch (model_) {
    case SpaceModel::PseudoEuclidean: os << "E^" << sig_.dim << "_" << sig_.index; break;
    case SpaceModel::SphereEmbedded: os << "S^" << sig_.dim << "(c=" << c_ << ")"; break;
    case SpaceModel::HyperbolicEmbedded: os << "H^" << sig_.dim << "(c=" << c_ << ")"; break;
  }
  return os.str();
}

}  // namespace cfvar
