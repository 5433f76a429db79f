#include "cfvar/jet_calculus.hpp"

#include "cfvar/error.hpp"
#include "cfvar/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace cfvar {

namespace {

int ipow(int b, int e) {
  int r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

std::size_t g2(int m, int i, int j) { return static_cast<std::size_t>(i * m + j); }
std::size_t g3(int m, int k, int i, int j) { return static_cast<std::size_t>((k * m + i) * m + j); }
std::size_t g4(int m, int a, int b, int c, int d) { return static_cast<std::size_t>(((a * m + b) * m + c) * m + d); }

/// One application of the pullback covariant derivative to a section-valued
/// tensor with `s` domain slots: out_{i,rest} = P(d_i V_rest) - sum over slots
/// of Gamma corrections.
Field covariant_step(const ChartGeometry& geo, const Field& V, int s) {
  const int m = geo.m();
  const int D = geo.D();
  const int ms = ipow(m, s);
  const std::size_t N = geo.size();
  Field out(N, m * ms * D);
  for (int i = 0; i < m; ++i) {
    const Field dV = geo.differentiator().diff(V, i);
    parallel_for(N, [&, i](std::size_t p) {
      const double* G = geo.christoffel().at(p);
      const double* X = geo.X().at(p);
      const double* v = V.at(p);
      std::vector<int> dig(static_cast<std::size_t>(s));
      for (int r = 0; r < ms; ++r) {
        double* o = out.at(p) + (static_cast<std::size_t>(i) * ms + r) * D;
        std::copy(dV.at(p) + static_cast<std::size_t>(r) * D, dV.at(p) + static_cast<std::size_t>(r + 1) * D, o);
        geo.ambient().project_inplace(X, o);
        int rr = r;
        for (int t = s - 1; t >= 0; --t) {
          dig[static_cast<std::size_t>(t)] = rr % m;
          rr /= m;
        }
        for (int t = 0; t < s; ++t) {
          const int pw = ipow(m, s - 1 - t);
          const int st = dig[static_cast<std::size_t>(t)];
          const int base = r - st * pw;
          for (int q = 0; q < m; ++q) {
            const double gq = G[g3(m, q, i, st)];
            if (gq == 0.0) continue;
            const double* w = v + static_cast<std::size_t>(base + q * pw) * D;
            for (int c = 0; c < D; ++c) o[c] -= gq * w[c];
          }
        }
      }
    });
  }
  return out;
}

/// R^N(U,V)W = c(<V,W>U - <U,W>V) into out (accumulating with weight w).
void add_curvature(const SpaceForm& amb, const double* U, const double* V, const double* W, double w, double* out) {
  const double c = amb.curvature();
  if (c == 0.0 || w == 0.0) return;
  const double vw = amb.inner(V, W);
  const double uw = amb.inner(U, W);
  const int D = amb.ambient_dim();
  for (int k = 0; k < D; ++k) out[k] += w * c * (vw * U[k] - uw * V[k]);
}

double vnorm(const SpaceForm& amb, const double* v, int D) {
  // Euclidean norm of the ambient components; the model inner product may be
  // indefinite, so norms in reports use the coordinate norm.
  (void)amb;
  double s = 0.0;
  for (int k = 0; k < D; ++k) s += v[k] * v[k];
  return std::sqrt(s);
}

}  // namespace

const double* JetField::at(std::size_t p, std::initializer_list<int> slots) const {
  std::size_t r = 0;
  for (int s : slots) r = r * static_cast<std::size_t>(m) + static_cast<std::size_t>(s);
  return values.at(p) + r * static_cast<std::size_t>(D);
}

Eigen::VectorXd JetField::vec(std::size_t p, std::initializer_list<int> slots) const {
  return Eigen::Map<const Eigen::VectorXd>(at(p, slots), D);
}

CovariantJets covariant_jets(const ChartGeometry& geo) {
  CovariantJets j;
  j.first = {1, geo.m(), geo.D(), geo.B()};
  j.second = {2, geo.m(), geo.D(), covariant_step(geo, geo.B(), 2)};
  j.third = {3, geo.m(), geo.D(), covariant_step(geo, j.second.values, 3)};
  return j;
}

NormSummary summarize(const ChartGeometry& geo, const Field& f) {
  NormSummary s;
  std::vector<double> sq;
  for (std::size_t p : geo.interior_points()) {
    const double n = vnorm(geo.ambient(), f.at(p), f.comps);
    s.max = std::max(s.max, n);
    sq.push_back(n * n);
  }
  if (!sq.empty()) s.l2 = std::sqrt(pairwise_sum(sq) / static_cast<double>(sq.size()));
  return s;
}

namespace {

/// W1 (pattern13 = true) or W2 by contraction with g^-1.
Field w_residual(const ChartGeometry& geo, const CovariantJets& jets, bool pattern13) {
  const int m = geo.m();
  const int D = geo.D();
  Field out(geo.size(), D);
  parallel_for(geo.size(), [&](std::size_t p) {
    const double* gi = geo.g_inv().at(p);
    double* o = out.at(p);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l) {
            const double w = pattern13 ? gi[g2(m, i, k)] * gi[g2(m, j, l)] : gi[g2(m, i, j)] * gi[g2(m, k, l)];
            if (w == 0.0) continue;
            const double* J = jets.third.at(p, {i, j, k, l});
            for (int c = 0; c < D; ++c) o[c] += w * J[c];
            add_curvature(geo.ambient(), geo.B().at(p) + g2(m, i, j) * D, geo.E().at(p) + k * D,
                          geo.E().at(p) + l * D, w, o);
          }
  });
  return out;
}

}  // namespace

Field w1_residual(const ChartGeometry& geo, const CovariantJets& jets) { return w_residual(geo, jets, true); }
Field w2_residual(const ChartGeometry& geo, const CovariantJets& jets) { return w_residual(geo, jets, false); }

Field alpha_beta_residual(const ChartGeometry& geo, const CovariantJets& jets, double alpha, double beta) {
  if (alpha == 0.0 && beta == 0.0) throw InvalidArgumentError("alpha and beta must not both vanish");
  const Field w1 = w1_residual(geo, jets);
  const Field w2 = w2_residual(geo, jets);
  Field out(geo.size(), geo.D());
  for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] = alpha * w1.data[k] + beta * w2.data[k];
  return out;
}

ResidualField residuals(const ChartGeometry& geo, const CovariantJets& jets, double alpha, double beta) {
  if (alpha == 0.0 && beta == 0.0) throw InvalidArgumentError("alpha and beta must not both vanish");
  ResidualField r;
  r.alpha = alpha;
  r.beta = beta;
  r.w1 = w1_residual(geo, jets);
  r.w2 = w2_residual(geo, jets);
  r.cf = Field(geo.size(), geo.D());
  r.wc = Field(geo.size(), geo.D());
  r.alpha_beta = Field(geo.size(), geo.D());
  const double m = geo.m();
  for (std::size_t k = 0; k < r.w1.data.size(); ++k) {
    r.cf.data[k] = r.w2.data[k] - r.w1.data[k];
    r.wc.data[k] = m * r.w1.data[k] - r.w2.data[k];
    r.alpha_beta.data[k] = alpha * r.w1.data[k] + beta * r.w2.data[k];
  }
  return r;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> w_residuals_in_frame(const ChartGeometry& geo,
                                                                  const CovariantJets& jets, std::size_t p) {
  const int m = geo.m();
  const int D = geo.D();
  const Eigen::MatrixXd F = geo.domain_frame(p);
  const Signature& sig = geo.domain_sig();
  // frame components of dphi, B, J3
  std::vector<Eigen::VectorXd> Ef(static_cast<std::size_t>(m), Eigen::VectorXd::Zero(D));
  for (int a = 0; a < m; ++a)
    for (int k = 0; k < m; ++k) Ef[static_cast<std::size_t>(a)] += F(k, a) * geo.e_vec(p, k);
  auto Bf = [&](int a, int b) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(D);
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) v += F(k, a) * F(l, b) * geo.b_vec(p, k, l);
    return v;
  };
  auto J3f = [&](int a, int b, int c, int d) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(D);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l) {
            const double w = F(i, a) * F(j, b) * F(k, c) * F(l, d);
            if (w != 0.0) v += w * jets.third.vec(p, {i, j, k, l});
          }
    return v;
  };
  Eigen::VectorXd w1 = Eigen::VectorXd::Zero(D);
  Eigen::VectorXd w2 = Eigen::VectorXd::Zero(D);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double e = sig.epsilon(i) * sig.epsilon(j);
      const Eigen::VectorXd Bij = Bf(i, j);
      const Eigen::VectorXd Bii = Bf(i, i);
      w1 += e * (J3f(i, j, i, j) + geo.ambient().curvature_tensor(Bij, Ef[static_cast<std::size_t>(i)],
                                                                     Ef[static_cast<std::size_t>(j)]));
      w2 += e * (J3f(i, i, j, j) + geo.ambient().curvature_tensor(Bii, Ef[static_cast<std::size_t>(j)],
                                                                     Ef[static_cast<std::size_t>(j)]));
    }
  return {w1, w2};
}

SecondOrderCF cf_residual_second_order(const ChartGeometry& geo) {
  if (!geo.immersion_mode())
    throw UnsupportedModeError("second-order Chern-Federer operator requires an isometric immersion chart");
  const int m = geo.m();
  const int D = geo.D();
  const double c = geo.ambient().curvature();
  const std::size_t N = geo.size();
  const Field& Q = geo.ricci_operator_field();
  std::vector<Field> dQ;
  for (int i = 0; i < m; ++i) dQ.push_back(geo.differentiator().diff(Q, i));

  SecondOrderCF out{Field(N, D), Field(N, D), Field(N, D)};
  parallel_for(N, [&](std::size_t p) {
    const double* G = geo.christoffel().at(p);
    const double* gi = geo.g_inv().at(p);
    const double* q = Q.at(p);
    // (tr nabla Q)^a = g^ib (nabla_i Q)^a_b
    std::vector<double> trq(static_cast<std::size_t>(m), 0.0);
    for (int a = 0; a < m; ++a) {
      double s = 0.0;
      for (int i = 0; i < m; ++i)
        for (int b = 0; b < m; ++b) {
          double nq = dQ[static_cast<std::size_t>(i)].at(p)[g2(m, a, b)];
          for (int e = 0; e < m; ++e) nq += G[g3(m, a, i, e)] * q[g2(m, e, b)] - G[g3(m, e, i, b)] * q[g2(m, a, e)];
          s += gi[g2(m, i, b)] * nq;
        }
      trq[static_cast<std::size_t>(a)] = s;
    }
    double* t = out.tangent.at(p);
    for (int a = 0; a < m; ++a)
      for (int k = 0; k < D; ++k) t[k] -= trq[static_cast<std::size_t>(a)] * geo.E().at(p)[a * D + k];

    double* n = out.normal.at(p);
    const Eigen::VectorXd tau = geo.tension(p);
    for (int k = 0; k < D; ++k) n[k] = 2.0 * c * (m - 1) * tau(k);
    // tr h(Q(-),-) = g^ij Q^a_i B_aj
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const double gij = gi[g2(m, i, j)];
        if (gij == 0.0) continue;
        for (int a = 0; a < m; ++a) {
          const double w = gij * q[g2(m, a, i)];
          if (w == 0.0) continue;
          const double* b = geo.B().at(p) + g2(m, a, j) * D;
          for (int k = 0; k < D; ++k) n[k] -= w * b[k];
        }
      }
    double* tot = out.total.at(p);
    for (int k = 0; k < D; ++k) tot[k] = t[k] + n[k];
  });
  return out;
}

DeviationReport compare_fields(const ChartGeometry& geo, const Field& a, const Field& b) {
  DeviationReport r;
  double bmax = 0.0;
  const int D = a.comps;
  std::vector<double> diff(static_cast<std::size_t>(D));
  for (std::size_t p : geo.interior_points()) {
    for (int k = 0; k < D; ++k) diff[static_cast<std::size_t>(k)] = a.at(p)[k] - b.at(p)[k];
    r.max_abs = std::max(r.max_abs, vnorm(geo.ambient(), diff.data(), D));
    bmax = std::max(bmax, vnorm(geo.ambient(), b.at(p), D));
    ++r.points;
  }
  r.scale = std::max(1.0, bmax);
  r.relative = r.max_abs / r.scale;
  return r;
}

DeviationReport oracle_equivalence(const ChartGeometry& geo, const CovariantJets& jets) {
  const Field w1 = w1_residual(geo, jets);
  const Field w2 = w2_residual(geo, jets);
  Field cf(geo.size(), geo.D());
  for (std::size_t k = 0; k < cf.data.size(); ++k) cf.data[k] = w2.data[k] - w1.data[k];
  const SecondOrderCF so = cf_residual_second_order(geo);
  return compare_fields(geo, cf, so.total);
}

DeviationReport rough_laplacian_check(const ChartGeometry& geo, const CovariantJets& jets) {
  const int m = geo.m();
  const int D = geo.D();
  const std::size_t N = geo.size();
  Field tau(N, D);
  for (std::size_t p = 0; p < N; ++p) {
    const Eigen::VectorXd t = geo.tension(p);
    std::copy(t.data(), t.data() + D, tau.at(p));
  }
  const Field dtau = covariant_step(geo, tau, 0);
  const Field S = covariant_step(geo, dtau, 1);
  Field lhs(N, D);
  Field rhs(N, D);
  for (std::size_t p = 0; p < N; ++p) {
    const double* gi = geo.g_inv().at(p);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const double gij = gi[g2(m, i, j)];
        for (int c = 0; c < D; ++c) lhs.at(p)[c] += gij * S.at(p)[g2(m, i, j) * D + c];
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l) {
            const double w = gij * gi[g2(m, k, l)];
            const double* J = jets.third.at(p, {i, j, k, l});
            for (int c = 0; c < D; ++c) rhs.at(p)[c] += w * J[c];
          }
      }
  }
  return compare_fields(geo, lhs, rhs);
}

CommutationReport commutation_checks(const ChartGeometry& geo, const CovariantJets& jets) {
  const int m = geo.m();
  const int D = geo.D();
  const std::size_t N = geo.size();
  const SpaceForm& amb = geo.ambient();
  const Field& R = geo.riemann();

  // nabla R^M
  std::vector<Field> dR;
  for (int i = 0; i < m; ++i) dR.push_back(geo.differentiator().diff(R, i));

  const int n3 = m * m * m;
  const int n4 = n3 * m;
  Field l3a(N, n3 * D), l3b(N, n3 * D), l4a(N, n4 * D), l4b(N, n4 * D);
  parallel_for(N, [&](std::size_t p) {
    const double* G = geo.christoffel().at(p);
    const double* Rp = R.at(p);
    const double* E = geo.E().at(p);
    const double* B = geo.B().at(p);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          const std::size_t o = g3(m, i, j, k) * D;
          const double* a1 = jets.second.at(p, {i, j, k});
          const double* a2 = jets.second.at(p, {j, i, k});
          double* L = l3a.at(p) + o;
          double* Rt = l3b.at(p) + o;
          for (int c = 0; c < D; ++c) L[c] = a1[c] - a2[c];
          add_curvature(amb, E + i * D, E + j * D, E + k * D, 1.0, Rt);
          for (int a = 0; a < m; ++a) {
            const double r = Rp[g4(m, a, k, i, j)];
            for (int c = 0; c < D; ++c) Rt[c] -= r * E[a * D + c];
          }
        }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l) {
            const std::size_t o = g4(m, i, j, k, l) * D;
            const double* a1 = jets.third.at(p, {i, j, k, l});
            const double* a2 = jets.third.at(p, {i, k, j, l});
            double* L = l4a.at(p) + o;
            double* Rt = l4b.at(p) + o;
            for (int c = 0; c < D; ++c) L[c] = a1[c] - a2[c];
            add_curvature(amb, B + g2(m, i, j) * D, E + k * D, E + l * D, 1.0, Rt);
            add_curvature(amb, E + j * D, B + g2(m, i, k) * D, E + l * D, 1.0, Rt);
            add_curvature(amb, E + j * D, E + k * D, B + g2(m, i, l) * D, 1.0, Rt);
            for (int a = 0; a < m; ++a) {
              const double r = Rp[g4(m, a, l, j, k)];
              // (nabla_i R)^a_ljk
              double nr = dR[static_cast<std::size_t>(i)].at(p)[g4(m, a, l, j, k)];
              for (int e = 0; e < m; ++e) {
                nr += G[g3(m, a, i, e)] * Rp[g4(m, e, l, j, k)];
                nr -= G[g3(m, e, i, l)] * Rp[g4(m, a, e, j, k)];
                nr -= G[g3(m, e, i, j)] * Rp[g4(m, a, l, e, k)];
                nr -= G[g3(m, e, i, k)] * Rp[g4(m, a, l, j, e)];
              }
              for (int c = 0; c < D; ++c) Rt[c] -= r * B[g2(m, i, a) * D + c] + nr * E[a * D + c];
            }
          }
  });

  auto per_entry = [&](const Field& a, const Field& b, int entries) {
    DeviationReport r;
    double bmax = 0.0;
    std::vector<double> d(static_cast<std::size_t>(D));
    for (std::size_t p : geo.interior_points()) {
      for (int e = 0; e < entries; ++e) {
        const double* x = a.at(p) + static_cast<std::size_t>(e) * D;
        const double* y = b.at(p) + static_cast<std::size_t>(e) * D;
        for (int c = 0; c < D; ++c) d[static_cast<std::size_t>(c)] = x[c] - y[c];
        r.max_abs = std::max(r.max_abs, vnorm(amb, d.data(), D));
        bmax = std::max(bmax, vnorm(amb, y, D));
      }
      ++r.points;
    }
    r.scale = std::max(1.0, bmax);
    r.relative = r.max_abs / r.scale;
    return r;
  };
  return {per_entry(l3a, l3b, n3), per_entry(l4a, l4b, n4)};
}

MuNuReport mu_nu_contraction_residual(const ChartGeometry& geo, const CovariantJets& jets) {
  const int m = geo.m();
  const int D = geo.D();
  const std::size_t N = geo.size();
  const SpaceForm& amb = geo.ambient();
  MuNuReport rep;
  rep.v1 = Field(N, D);
  rep.v2 = Field(N, D);
  Field s3(N, D), s6(N, D);
  const int n4 = m * m * m * m;
  parallel_for(N, [&](std::size_t p) {
    // T = mu + nu, nu_ijkl = R^N(B_kl, E_i) E_j
    std::vector<double> T(static_cast<std::size_t>(n4 * D), 0.0);
    const double* E = geo.E().at(p);
    const double* B = geo.B().at(p);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l) {
            double* t = T.data() + g4(m, i, j, k, l) * D;
            const double* J = jets.third.at(p, {i, j, k, l});
            for (int c = 0; c < D; ++c) t[c] = J[c];
            add_curvature(amb, B + g2(m, k, l) * D, E + i * D, E + j * D, 1.0, t);
          }
    const double* gi = geo.g_inv().at(p);
    auto pattern = [&](auto idx, double* out_v2_minus_v1, double* v1o, double* v2o) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) {
              const double* t = T.data() + idx(i, j, k, l) * D;
              const double w13 = gi[g2(m, i, k)] * gi[g2(m, j, l)];
              const double w12 = gi[g2(m, i, j)] * gi[g2(m, k, l)];
              for (int c = 0; c < D; ++c) {
                out_v2_minus_v1[c] += (w12 - w13) * t[c];
                if (v1o) v1o[c] += w13 * t[c];
                if (v2o) v2o[c] += w12 * t[c];
              }
            }
    };
    std::vector<double> base(static_cast<std::size_t>(D), 0.0);
    pattern([&](int i, int j, int k, int l) { return g4(m, i, j, k, l); }, base.data(), rep.v1.at(p), rep.v2.at(p));
    // sigma3: (sigma T)_ijkl = T_ljki; sigma6: T_ikjl
    pattern([&](int i, int j, int k, int l) { return g4(m, l, j, k, i); }, s3.at(p), nullptr, nullptr);
    pattern([&](int i, int j, int k, int l) { return g4(m, i, k, j, l); }, s6.at(p), nullptr, nullptr);
    for (int c = 0; c < D; ++c) {
      s3.at(p)[c] += base[static_cast<std::size_t>(c)];
      s6.at(p)[c] += base[static_cast<std::size_t>(c)];
    }
  });
  Field vdiff(N, D);
  for (std::size_t k = 0; k < vdiff.data.size(); ++k) vdiff.data[k] = rep.v2.data[k] - rep.v1.data[k];
  const Field w1 = w1_residual(geo, jets);
  const Field w2 = w2_residual(geo, jets);
  Field wdiff(N, D);
  for (std::size_t k = 0; k < wdiff.data.size(); ++k) wdiff.data[k] = w2.data[k] - w1.data[k];
  rep.assembly = compare_fields(geo, vdiff, wdiff);
  rep.sigma3_defect = summarize(geo, s3).max;
  rep.sigma6_defect = summarize(geo, s6).max;
  return rep;
}

double second_jet_slot_asymmetry(const ChartGeometry& geo) {
  const int m = geo.m();
  const int D = geo.D();
  const Field J2raw = covariant_step(geo, geo.B_unsymmetrized(), 2);
  double worst = 0.0;
  for (std::size_t p : geo.interior_points())
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
          const double* a = J2raw.at(p) + g3(m, i, j, k) * D;
          const double* b = J2raw.at(p) + g3(m, i, k, j) * D;
          double s = 0.0;
          for (int c = 0; c < D; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
          worst = std::max(worst, std::sqrt(s));
        }
  return worst;
}

}  // namespace cfvar
