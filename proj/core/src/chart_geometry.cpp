#include "cfvar/chart_geometry.hpp"

#include "cfvar/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cfvar {

namespace {

std::size_t idx2(int m, int i, int j) { return static_cast<std::size_t>(i * m + j); }
std::size_t idx3(int m, int i, int j, int k) { return static_cast<std::size_t>((i * m + j) * m + k); }
std::size_t idx4(int m, int a, int b, int c, int d) {
  return static_cast<std::size_t>(((a * m + b) * m + c) * m + d);
}

Eigen::MatrixXd read_matrix(const Field& f, std::size_t p, int m) {
  Eigen::MatrixXd M(m, m);
  const double* s = f.at(p);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M(i, j) = s[idx2(m, i, j)];
  return M;
}

}  // namespace

ChartGeometry::ChartGeometry(const ChartedMap& map, GeometryOptions opts)
    : map_(map), opts_(opts), diff_(map.grid(), opts.stencil_order), m_(map.m()), D_(map.ambient_dim()) {
  const std::size_t N = size();
  const SpaceForm& amb = ambient();
  const int m = m_;
  const int D = D_;

  // dphi, projected to the tangent space of the model
  E_ = Field(N, m * D);
  for (int i = 0; i < m; ++i) {
    const Field dX = diff_.diff(X(), i, map_.shift(i));
    for (std::size_t p = 0; p < N; ++p) {
      double* e = E_.at(p) + i * D;
      std::copy(dX.at(p), dX.at(p) + D, e);
      amb.project_inplace(X().at(p), e);
    }
  }

  // domain metric
  if (map_.mode() == MetricMode::Explicit) {
    g_ = *map_.explicit_metric();
  } else {
    g_ = Field(N, m * m);
    for (std::size_t p = 0; p < N; ++p)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g_.at(p)[idx2(m, i, j)] = amb.inner(E_.at(p) + i * D, E_.at(p) + j * D);
  }

  ginv_ = Field(N, m * m);
  int neg0 = -1;
  for (std::size_t p = 0; p < N; ++p) {
    const Eigen::MatrixXd G = read_matrix(g_, p, m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double amax = ev.cwiseAbs().maxCoeff();
    const double amin = ev.cwiseAbs().minCoeff();
    if (!(amin > 0) || amax / amin > opts_.condition_limit)
      throw SingularChartError("degenerate domain metric at grid point " + std::to_string(p) + " of chart '" +
                               map_.name() + "'");
    const int neg = static_cast<int>((ev.array() < 0).count());
    if (neg0 < 0)
      neg0 = neg;
    else if (neg != neg0)
      throw SingularChartError("domain metric changes signature at grid point " + std::to_string(p));
    const Eigen::MatrixXd Gi = G.inverse();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) ginv_.at(p)[idx2(m, i, j)] = 0.5 * (Gi(i, j) + Gi(j, i));
  }
  domain_sig_ = Signature(m, neg0);

  // Christoffel symbols from metric derivatives
  std::vector<Field> dg;
  for (int l = 0; l < m; ++l) dg.push_back(diff_.diff(g_, l));
  gamma_ = Field(N, m * m * m);
  for (std::size_t p = 0; p < N; ++p) {
    const double* gi = ginv_.at(p);
    double* G = gamma_.at(p);
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          double s = 0.0;
          for (int l = 0; l < m; ++l) {
            const double first = dg[static_cast<std::size_t>(i)].at(p)[idx2(m, l, j)] +
                                 dg[static_cast<std::size_t>(j)].at(p)[idx2(m, l, i)] -
                                 dg[static_cast<std::size_t>(l)].at(p)[idx2(m, i, j)];
            s += gi[idx2(m, k, l)] * first;
          }
          G[idx3(m, k, i, j)] = G[idx3(m, k, j, i)] = 0.5 * s;
        }
  }

  // second fundamental form
  Braw_ = Field(N, m * m * D);
  for (int i = 0; i < m; ++i) {
    const Field dE = diff_.diff(E_, i);
    for (std::size_t p = 0; p < N; ++p) {
      const double* G = gamma_.at(p);
      for (int j = 0; j < m; ++j) {
        double* b = Braw_.at(p) + idx2(m, i, j) * static_cast<std::size_t>(D);
        std::copy(dE.at(p) + j * D, dE.at(p) + (j + 1) * D, b);
        amb.project_inplace(X().at(p), b);
        for (int k = 0; k < m; ++k) {
          const double gk = G[idx3(m, k, i, j)];
          const double* e = E_.at(p) + k * D;
          for (int c = 0; c < D; ++c) b[c] -= gk * e[c];
        }
      }
    }
  }
  B_ = Field(N, m * m * D);
  for (std::size_t p = 0; p < N; ++p)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int c = 0; c < D; ++c)
          B_.at(p)[idx2(m, i, j) * D + c] =
              0.5 * (Braw_.at(p)[idx2(m, i, j) * D + c] + Braw_.at(p)[idx2(m, j, i) * D + c]);

  // intrinsic curvature
  std::vector<Field> dG;
  for (int c = 0; c < m; ++c) dG.push_back(diff_.diff(gamma_, c));
  riem_ = Field(N, m * m * m * m);
  ric_ = Field(N, m * m);
  Q_ = Field(N, m * m);
  for (std::size_t p = 0; p < N; ++p) {
    const double* G = gamma_.at(p);
    double* R = riem_.at(p);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          for (int d = 0; d < m; ++d) {
            double s = dG[static_cast<std::size_t>(c)].at(p)[idx3(m, a, d, b)] -
                       dG[static_cast<std::size_t>(d)].at(p)[idx3(m, a, c, b)];
            for (int e = 0; e < m; ++e)
              s += G[idx3(m, a, c, e)] * G[idx3(m, e, d, b)] - G[idx3(m, a, d, e)] * G[idx3(m, e, c, b)];
            R[idx4(m, a, b, c, d)] = s;
          }
    double* Ric = ric_.at(p);
    for (int b = 0; b < m; ++b)
      for (int d = 0; d < m; ++d) {
        double s = 0.0;
        for (int a = 0; a < m; ++a) s += R[idx4(m, a, b, a, d)];
        Ric[idx2(m, b, d)] = s;
      }
    for (int b = 0; b < m; ++b)
      for (int d = b + 1; d < m; ++d)
        Ric[idx2(m, b, d)] = Ric[idx2(m, d, b)] = 0.5 * (Ric[idx2(m, b, d)] + Ric[idx2(m, d, b)]);
    const double* gi = ginv_.at(p);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        double s = 0.0;
        for (int c = 0; c < m; ++c) s += gi[idx2(m, a, c)] * Ric[idx2(m, c, b)];
        Q_.at(p)[idx2(m, a, b)] = s;
      }
  }
}

int ChartGeometry::margin() const { return 4 * diff_.half_width(); }

std::vector<std::size_t> ChartGeometry::interior_points() const {
  std::vector<std::size_t> pts;
  for (std::size_t p = 0; p < size(); ++p)
    if (is_interior(p)) pts.push_back(p);
  return pts;
}

Eigen::MatrixXd ChartGeometry::metric(std::size_t p) const { return read_matrix(g_, p, m_); }
Eigen::MatrixXd ChartGeometry::metric_inverse(std::size_t p) const { return read_matrix(ginv_, p, m_); }

Eigen::VectorXd ChartGeometry::position(std::size_t p) const {
  return Eigen::Map<const Eigen::VectorXd>(X().at(p), D_);
}

Eigen::VectorXd ChartGeometry::e_vec(std::size_t p, int i) const {
  return Eigen::Map<const Eigen::VectorXd>(E_.at(p) + i * D_, D_);
}

Eigen::VectorXd ChartGeometry::b_vec(std::size_t p, int i, int j) const {
  return Eigen::Map<const Eigen::VectorXd>(B_.at(p) + idx2(m_, i, j) * D_, D_);
}

double ChartGeometry::metric_condition(std::size_t p) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(metric(p));
  const Eigen::VectorXd a = es.eigenvalues().cwiseAbs();
  return a.maxCoeff() / a.minCoeff();
}

Eigen::MatrixXd ChartGeometry::domain_frame(std::size_t p) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(metric(p));
  Eigen::MatrixXd F = es.eigenvectors();
  const Eigen::VectorXd ev = es.eigenvalues();
  for (int i = 0; i < m_; ++i) {
    Eigen::VectorXd col = F.col(i) / std::sqrt(std::abs(ev(i)));
    // deterministic orientation: largest component positive
    Eigen::Index k = 0;
    col.cwiseAbs().maxCoeff(&k);
    if (col(k) < 0) col = -col;
    F.col(i) = col;
  }
  return F;
}

Eigen::MatrixXd ChartGeometry::ambient_frame(std::size_t p, Signature* sig, int* codim) const {
  const SpaceForm& amb = ambient();
  const int n = amb.sig().dim;
  const Eigen::VectorXd Xp = position(p);
  const bool imm = immersion_mode();
  const int want = imm ? n - m_ : n;

  std::vector<Eigen::VectorXd> tang;
  if (imm) {
    const Eigen::MatrixXd F = domain_frame(p);
    for (int i = 0; i < m_; ++i) {
      Eigen::VectorXd t = Eigen::VectorXd::Zero(D_);
      for (int k = 0; k < m_; ++k) t += F(k, i) * e_vec(p, k);
      tang.push_back(t);
    }
  }

  std::vector<Eigen::VectorXd> cand;
  const Eigen::MatrixXd gi = metric_inverse(p);
  for (int A = 0; A < D_; ++A) {
    Eigen::VectorXd w = Eigen::VectorXd::Unit(D_, A);
    w = amb.project(Xp, w);
    if (imm) {
      Eigen::VectorXd corr = Eigen::VectorXd::Zero(D_);
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) corr += gi(i, j) * amb.inner(w, e_vec(p, i)) * e_vec(p, j);
      w -= corr;
    }
    cand.push_back(w);
  }

  std::vector<Eigen::VectorXd> normals;
  std::vector<int> nsign;
  for (int r = 0; r < want; ++r) {
    int best = -1;
    double bestn = 0.0;
    for (int A = 0; A < static_cast<int>(cand.size()); ++A) {
      const double q = std::abs(amb.inner(cand[static_cast<std::size_t>(A)], cand[static_cast<std::size_t>(A)]));
      if (q > bestn * (1 + 1e-12)) {
        bestn = q;
        best = A;
      }
    }
    if (best < 0 || bestn < 1e-20) throw SingularChartError("could not complete an ambient frame");
    const Eigen::VectorXd w = cand[static_cast<std::size_t>(best)];
    const double q = amb.inner(w, w);
    const int s = q < 0 ? -1 : 1;
    const Eigen::VectorXd xi = w / std::sqrt(std::abs(q));
    normals.push_back(xi);
    nsign.push_back(s);
    cand.erase(cand.begin() + best);
    for (auto& c : cand) c -= s * amb.inner(c, xi) * xi;
  }
  if (imm && want == 1 && map_.normal_hint()) {
    const Eigen::Map<const Eigen::VectorXd> h(map_.normal_hint()->at(p), D_);
    if (amb.inner(normals[0], h) < 0) normals[0] = -normals[0];
  }

  std::vector<Eigen::VectorXd> all;
  std::vector<int> sign;
  for (std::size_t r = 0; r < normals.size(); ++r) {
    all.push_back(normals[r]);
    sign.push_back(nsign[r]);
  }
  for (int i = 0; i < static_cast<int>(tang.size()); ++i) {
    all.push_back(tang[static_cast<std::size_t>(i)]);
    sign.push_back(domain_sig_.epsilon(i));
  }
  Eigen::MatrixXd out(D_, n);
  int col = 0;
  int q = 0;
  for (int pass : {-1, 1})
    for (std::size_t r = 0; r < all.size(); ++r)
      if (sign[r] == pass) {
        out.col(col++) = all[r];
        if (pass < 0) ++q;
      }
  if (sig) *sig = Signature(n, q);
  if (codim) *codim = want;
  return out;
}

FormCoefficients ChartGeometry::second_fundamental_form(std::size_t p) const {
  const Eigen::MatrixXd F = domain_frame(p);
  Signature csig;
  const Eigen::MatrixXd xi = ambient_frame(p, &csig);
  const int n = csig.dim;
  std::vector<Eigen::MatrixXd> slices(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(m_, m_));
  // B in coordinates, then frame change
  std::vector<Eigen::VectorXd> Bc(static_cast<std::size_t>(m_ * m_));
  for (int k = 0; k < m_; ++k)
    for (int l = 0; l < m_; ++l) Bc[idx2(m_, k, l)] = b_vec(p, k, l);
  for (int a = 0; a < n; ++a) {
    Eigen::MatrixXd hc(m_, m_);
    for (int k = 0; k < m_; ++k)
      for (int l = 0; l < m_; ++l) hc(k, l) = ambient().inner(Bc[idx2(m_, k, l)], Eigen::VectorXd(xi.col(a)));
    Eigen::MatrixXd h = F.transpose() * hc * F;
    slices[static_cast<std::size_t>(a)] = 0.5 * (h + h.transpose());
  }
  return FormCoefficients(domain_sig_, csig, slices);
}

Eigen::MatrixXd ChartGeometry::ricci_operator(std::size_t p) const { return read_matrix(Q_, p, m_); }

double ChartGeometry::scalar_curvature(std::size_t p) const { return ricci_operator(p).trace(); }

Eigen::VectorXd ChartGeometry::tension(std::size_t p) const {
  Eigen::VectorXd t = Eigen::VectorXd::Zero(D_);
  const double* gi = ginv_.at(p);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) t += gi[idx2(m_, i, j)] * b_vec(p, i, j);
  return t;
}

Eigen::VectorXd ChartGeometry::mean_curvature_vector(std::size_t p) const { return tension(p) / m_; }

void ChartGeometry::require_immersion(const char* what) const {
  if (!immersion_mode()) throw UnsupportedModeError(std::string(what) + " requires an isometric immersion chart");
}

Eigen::VectorXd ChartGeometry::unit_normal(std::size_t p) const {
  require_immersion("unit normal");
  if (ambient().sig().dim - m_ != 1 || domain_sig_.index != 0 || ambient().sig().index != 0)
    throw UnsupportedModeError("unit normal requires a Riemannian hypersurface");
  int codim = 0;
  const Eigen::MatrixXd fr = ambient_frame(p, nullptr, &codim);
  return fr.col(0);
}

std::vector<double> ChartGeometry::principal_curvatures(std::size_t p) const {
  const Eigen::VectorXd xi = unit_normal(p);
  Eigen::MatrixXd h(m_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) h(i, j) = ambient().inner(b_vec(p, i, j), xi);
  h = 0.5 * (h + h.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(h, metric(p));
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + m_);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Eigen::MatrixXd ChartGeometry::shape_operator_tension(std::size_t p) const {
  require_immersion("shape operator");
  const Eigen::VectorXd tau = tension(p);
  Eigen::MatrixXd h(m_, m_);
  for (int c = 0; c < m_; ++c)
    for (int b = 0; b < m_; ++b) h(c, b) = ambient().inner(b_vec(p, c, b), tau);
  return metric_inverse(p) * h;
}

Eigen::MatrixXd ChartGeometry::casorati_operator(std::size_t p) const {
  require_immersion("Casorati operator");
  const Eigen::MatrixXd gi = metric_inverse(p);
  Eigen::MatrixXd inner_cb = Eigen::MatrixXd::Zero(m_, m_);
  for (int c = 0; c < m_; ++c)
    for (int b = 0; b < m_; ++b)
      for (int d = 0; d < m_; ++d)
        for (int e = 0; e < m_; ++e) inner_cb(c, b) += gi(d, e) * ambient().inner(b_vec(p, c, d), b_vec(p, e, b));
  return gi * inner_cb;
}

Eigen::MatrixXd ChartGeometry::xi_operator(std::size_t p) const {
  return shape_operator_tension(p) - casorati_operator(p);
}

FormCoefficients second_fundamental_form(const ChartGeometry& geo, std::size_t p) {
  return geo.second_fundamental_form(p);
}
Eigen::MatrixXd ricci_operator(const ChartGeometry& geo, std::size_t p) { return geo.ricci_operator(p); }
Eigen::MatrixXd xi_operator(const ChartGeometry& geo, std::size_t p) { return geo.xi_operator(p); }
std::vector<double> principal_curvatures(const ChartGeometry& geo, std::size_t p) {
  return geo.principal_curvatures(p);
}
Eigen::VectorXd mean_curvature_vector(const ChartGeometry& geo, std::size_t p) {
  return geo.mean_curvature_vector(p);
}

double gauss_identity_defect(const ChartGeometry& geo) {
  const int m = geo.m();
  const double c = geo.ambient().curvature();
  double worst = 0.0;
  for (std::size_t p : geo.interior_points()) {
    const Eigen::MatrixXd d =
        geo.ricci_operator(p) - c * (m - 1) * Eigen::MatrixXd::Identity(m, m) - geo.xi_operator(p);
    worst = std::max(worst, d.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace cfvar
