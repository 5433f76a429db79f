#include "cfvar/invariant_algebra.hpp"

#include "cfvar/error.hpp"
#include "cfvar/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace cfvar {

Signature::Signature(int dim_, int index_) : dim(dim_), index(index_) {
  if (dim_ <= 0) throw InvalidArgumentError("signature dimension must be positive");
  if (index_ < 0 || index_ > dim_) throw InvalidArgumentError("signature index out of range");
}

Eigen::MatrixXd Signature::eta() const {
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) e(i, i) = epsilon(i);
  return e;
}

FormCoefficients::FormCoefficients(Signature domain, Signature codomain)
    : domain_(domain),
      codomain_(codomain),
      h_(static_cast<std::size_t>(codomain.dim) * domain.dim * domain.dim, 0.0) {}

FormCoefficients::FormCoefficients(Signature domain, Signature codomain,
                                   const std::vector<Eigen::MatrixXd>& slices)
    : FormCoefficients(domain, codomain) {
  if (static_cast<int>(slices.size()) != n())
    throw InvalidArgumentError("expected one coefficient matrix per codomain direction");
  double scale = 1.0;
  for (const auto& s : slices) {
    if (s.rows() != m() || s.cols() != m())
      throw InvalidArgumentError("coefficient matrix has wrong shape");
    scale = std::max(scale, s.cwiseAbs().maxCoeff());
  }
  for (int a = 0; a < n(); ++a) {
    const auto& s = slices[static_cast<std::size_t>(a)];
    for (int i = 0; i < m(); ++i) {
      for (int j = 0; j < m(); ++j) {
        if (std::abs(s(i, j) - s(j, i)) > 1e-12 * scale)
          throw InvalidArgumentError("second fundamental form coefficients are not symmetric");
        h_[(static_cast<std::size_t>(a) * m() + i) * m() + j] = 0.5 * (s(i, j) + s(j, i));
      }
    }
  }
}

Eigen::MatrixXd FormCoefficients::slice(int alpha) const {
  Eigen::MatrixXd s(m(), m());
  for (int i = 0; i < m(); ++i)
    for (int j = 0; j < m(); ++j) s(i, j) = (*this)(alpha, i, j);
  return s;
}

FormCoefficients FormCoefficients::scaled(double t) const {
  FormCoefficients out = *this;
  for (double& x : out.h_) x *= t;
  return out;
}

double eval_q1(const FormCoefficients& H) {
  const auto& ds = H.domain_sig();
  const auto& cs = H.codomain_sig();
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(H.n()) * H.m() * H.m());
  for (int a = 0; a < H.n(); ++a)
    for (int i = 0; i < H.m(); ++i)
      for (int j = 0; j < H.m(); ++j) {
        const double h = H(a, i, j);
        terms.push_back(cs.epsilon(a) * ds.epsilon(i) * ds.epsilon(j) * h * h);
      }
  return pairwise_sum(terms);
}

double eval_q2(const FormCoefficients& H) {
  const auto& ds = H.domain_sig();
  const auto& cs = H.codomain_sig();
  std::vector<double> terms;
  std::vector<double> diag(static_cast<std::size_t>(H.m()));
  for (int a = 0; a < H.n(); ++a) {
    for (int i = 0; i < H.m(); ++i) diag[static_cast<std::size_t>(i)] = ds.epsilon(i) * H(a, i, i);
    const double tr = pairwise_sum(diag);
    terms.push_back(cs.epsilon(a) * tr * tr);
  }
  return pairwise_sum(terms);
}

double eval_cf(const FormCoefficients& H) { return eval_q2(H) - eval_q1(H); }

double eval_wc(const FormCoefficients& H) { return H.m() * eval_q1(H) - eval_q2(H); }

bool is_pseudo_orthogonal(const Eigen::MatrixXd& a, const Signature& sig, double tol) {
  if (a.rows() != sig.dim || a.cols() != sig.dim) return false;
  const Eigen::MatrixXd eta = sig.eta();
  return ((a.transpose() * eta * a) - eta).cwiseAbs().maxCoeff() <= tol;
}

FormCoefficients act_group(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                           const FormCoefficients& H) {
  const Signature& ds = H.domain_sig();
  const Signature& cs = H.codomain_sig();
  if (!is_pseudo_orthogonal(a, ds)) throw InvalidArgumentError("domain matrix is not pseudo-orthogonal");
  if (!is_pseudo_orthogonal(b, cs)) throw InvalidArgumentError("codomain matrix is not pseudo-orthogonal");

  const Eigen::MatrixXd eta = ds.eta();
  const Eigen::MatrixXd ainv = eta * a.transpose() * eta;

  // vector components v^alpha = eps'_alpha h^alpha, pulled back by a^{-1}
  std::vector<Eigen::MatrixXd> w(static_cast<std::size_t>(H.n()));
  for (int al = 0; al < H.n(); ++al)
    w[static_cast<std::size_t>(al)] = ainv.transpose() * (cs.epsilon(al) * H.slice(al)) * ainv;

  std::vector<Eigen::MatrixXd> out(static_cast<std::size_t>(H.n()));
  for (int be = 0; be < H.n(); ++be) {
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(H.m(), H.m());
    for (int al = 0; al < H.n(); ++al) v += b(be, al) * w[static_cast<std::size_t>(al)];
    v = 0.5 * (v + v.transpose());
    out[static_cast<std::size_t>(be)] = cs.epsilon(be) * v;
  }
  return FormCoefficients(ds, cs, out);
}

namespace {

Eigen::MatrixXd haar_orthogonal(int k, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < k; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

Eigen::MatrixXd block_rotation(const Signature& sig, std::mt19937_64& rng) {
  const int p = sig.index;
  const int s = sig.dim - p;
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(sig.dim, sig.dim);
  if (p > 0) r.topLeftCorner(p, p) = haar_orthogonal(p, rng);
  if (s > 0) r.bottomRightCorner(s, s) = haar_orthogonal(s, rng);
  return r;
}

}  // namespace

Eigen::MatrixXd random_pseudo_orthogonal(const Signature& sig, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (sig.index == 0) return haar_orthogonal(sig.dim, rng);

  Eigen::MatrixXd a = block_rotation(sig, rng);
  if (sig.index < sig.dim) {
    std::uniform_real_distribution<double> rapidity(-1.0, 1.0);
    std::uniform_int_distribution<int> pick(sig.index, sig.dim - 1);
    for (int i = 0; i < sig.index; ++i) {
      const int j = pick(rng);
      const double phi = rapidity(rng);
      Eigen::MatrixXd boost = Eigen::MatrixXd::Identity(sig.dim, sig.dim);
      boost(i, i) = boost(j, j) = std::cosh(phi);
      boost(i, j) = boost(j, i) = std::sinh(phi);
      a = a * boost;
    }
  }
  return a * block_rotation(sig, rng);
}

FourTensor::FourTensor(Signature sig)
    : sig_(sig), data_(static_cast<std::size_t>(sig.dim) * sig.dim * sig.dim * sig.dim, 0.0) {}

FourTensor rho_tensor(const FormCoefficients& H) {
  FourTensor T(H.domain_sig());
  const int m = H.m();
  std::vector<double> terms(static_cast<std::size_t>(H.n()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          for (int a = 0; a < H.n(); ++a)
            terms[static_cast<std::size_t>(a)] = H.codomain_sig().epsilon(a) * H(a, i, j) * H(a, k, l);
          T(i, j, k, l) = pairwise_sum(terms);
        }
  return T;
}

ContractionPair contract_pattern(const FourTensor& T) {
  const int m = T.m();
  const auto& s = T.domain_sig();
  std::vector<double> t1234;
  std::vector<double> t1324;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double e = s.epsilon(i) * s.epsilon(j);
      t1234.push_back(e * T(i, i, j, j));
      t1324.push_back(e * T(i, j, i, j));
    }
  return {pairwise_sum(t1234), pairwise_sum(t1324)};
}

double cf_pattern_value(const FourTensor& T) {
  const auto c = contract_pattern(T);
  return c.c1234 - c.c1324;
}

Permutation4::Permutation4(std::array<int, 4> one_based_images) {
  std::array<bool, 4> seen{};
  for (std::size_t s = 0; s < 4; ++s) {
    const int v = one_based_images[s] - 1;
    if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)])
      throw InvalidArgumentError("not a permutation of {1,2,3,4}");
    seen[static_cast<std::size_t>(v)] = true;
    images_[s] = v;
  }
}

Permutation4 Permutation4::then(const Permutation4& next) const {
  // permute4(permute4(T, *this), next) == permute4(T, this->then(next))
  Permutation4 out;
  for (int s = 0; s < 4; ++s) out.images_[static_cast<std::size_t>(s)] = next((*this)(s));
  return out;
}

std::string Permutation4::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int s = 0; s < 4; ++s) os << (s ? "," : "") << (images_[static_cast<std::size_t>(s)] + 1);
  os << ')';
  return os.str();
}

Permutation4 Permutation4::sigma(int k) {
  switch (k) {
    case 1: return Permutation4({2, 1, 3, 4});
    case 2: return Permutation4({3, 2, 1, 4});
    case 3: return Permutation4({4, 2, 3, 1});
    case 4: return Permutation4({3, 4, 1, 2});
    case 5: return Permutation4({1, 4, 3, 2});
    case 6: return Permutation4({1, 3, 2, 4});
    default: throw InvalidArgumentError("sigma index must be in 1..6");
  }
}

FourTensor permute4(const FourTensor& T, const Permutation4& sigma) {
  FourTensor out(T.domain_sig());
  const int m = T.m();
  std::array<int, 4> idx{};
  for (idx[0] = 0; idx[0] < m; ++idx[0])
    for (idx[1] = 0; idx[1] < m; ++idx[1])
      for (idx[2] = 0; idx[2] < m; ++idx[2])
        for (idx[3] = 0; idx[3] < m; ++idx[3])
          out(idx[0], idx[1], idx[2], idx[3]) =
              T(idx[static_cast<std::size_t>(sigma(0))], idx[static_cast<std::size_t>(sigma(1))],
                idx[static_cast<std::size_t>(sigma(2))], idx[static_cast<std::size_t>(sigma(3))]);
  return out;
}

S4SymmetryReport s4_symmetry_report(const FormCoefficients& H, double tol) {
  S4SymmetryReport rep;
  const FourTensor rho = rho_tensor(H);
  rep.base_value = cf_pattern_value(rho);
  const double scale = 1.0 + std::abs(rep.base_value);
  for (int k = 1; k <= 6; ++k) {
    const double v = cf_pattern_value(permute4(rho, Permutation4::sigma(k)));
    const auto s = static_cast<std::size_t>(k - 1);
    rep.values[s] = v;
    if (std::abs(v - rep.base_value) <= tol * scale)
      rep.sign[s] = 1;
    else if (std::abs(v + rep.base_value) <= tol * scale)
      rep.sign[s] = -1;
    else
      rep.sign[s] = 0;
  }
  rep.antisymmetry_defect_sigma3 = std::abs(rep.values[2] + rep.base_value);
  rep.antisymmetry_defect_sigma6 = std::abs(rep.values[5] + rep.base_value);
  rep.antisymmetric_under_sigma3_and_sigma6 =
      rep.antisymmetry_defect_sigma3 <= tol * scale && rep.antisymmetry_defect_sigma6 <= tol * scale;
  return rep;
}

AntisymmetricSpan antisymmetric_span(const std::vector<FormCoefficients>& samples) {
  std::vector<Eigen::RowVector2d> rows;
  for (const auto& H : samples) {
    const FourTensor rho = rho_tensor(H);
    const auto base = contract_pattern(rho);
    for (int k : {3, 6}) {
      const auto c = contract_pattern(permute4(rho, Permutation4::sigma(k)));
      Eigen::RowVector2d r(c.c1234 + base.c1234, c.c1324 + base.c1324);
      const double nrm = r.norm();
      if (nrm > 0) rows.push_back(r / nrm);
    }
  }
  AntisymmetricSpan out;
  if (rows.empty()) {
    out.kernel = Eigen::Vector2d(1.0, 0.0);
    return out;
  }
  Eigen::MatrixXd A(static_cast<Eigen::Index>(rows.size()), 2);
  for (std::size_t r = 0; r < rows.size(); ++r) A.row(static_cast<Eigen::Index>(r)) = rows[r];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  out.singular_values = svd.singularValues();
  const double smax = out.singular_values(0);
  out.rank = 0;
  for (int i = 0; i < 2; ++i)
    if (out.singular_values(i) > 1e-10 * smax) ++out.rank;
  Eigen::Vector2d k = svd.matrixV().col(1);
  if (k(0) < 0 || (k(0) == 0 && k(1) < 0)) k = -k;
  out.kernel = k.normalized();
  return out;
}

}  // namespace cfvar
