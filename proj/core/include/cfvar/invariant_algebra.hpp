#pragma once

// Signature-aware pointwise algebra of second fundamental forms.
//
// Indices are 1-based in the mathematical notation used by the comments and
// 0-based everywhere in storage and in the API; Signature::epsilon is the only
// place that converts between the two conventions.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cfvar {

/// Dimension and index of a pseudo-Euclidean space E^dim_index.
struct Signature {
  int dim = 0;
  int index = 0;

  Signature() = default;
  Signature(int dim, int index);

  static Signature riemannian(int dim) { return Signature(dim, 0); }

  /// -1 for the first `index` basis vectors, +1 afterwards (0-based i).
  int epsilon(int i) const { return i < index ? -1 : 1; }

  /// diag(epsilon(0), ..., epsilon(dim-1)).
  Eigen::MatrixXd eta() const;

  bool operator==(const Signature&) const = default;
};

/// Coefficients h^alpha_ij of a symmetric bilinear map E^m_p x E^m_p -> E^n_q
/// with respect to pseudo-orthonormal bases; h^alpha_ij = <H(e_i,e_j), xi_alpha>.
class FormCoefficients {
 public:
  FormCoefficients(Signature domain, Signature codomain);

  /// One m x m matrix per codomain direction.  Throws InvalidArgumentError if
  /// shapes disagree or a slice is not symmetric to 1e-12 (relative).  Slices
  /// are symmetrized exactly.
  FormCoefficients(Signature domain, Signature codomain,
                   const std::vector<Eigen::MatrixXd>& slices);

  const Signature& domain_sig() const { return domain_; }
  const Signature& codomain_sig() const { return codomain_; }
  int m() const { return domain_.dim; }
  int n() const { return codomain_.dim; }

  double operator()(int alpha, int i, int j) const {
    return h_[(static_cast<std::size_t>(alpha) * m() + i) * m() + j];
  }
  Eigen::MatrixXd slice(int alpha) const;

  FormCoefficients scaled(double t) const;

 private:
  Signature domain_;
  Signature codomain_;
  std::vector<double> h_;
};

double eval_q1(const FormCoefficients& H);
double eval_q2(const FormCoefficients& H);
/// Chern-Federer polynomial Q2 - Q1.
double eval_cf(const FormCoefficients& H);
/// Willmore-Chen polynomial m*Q1 - Q2.
double eval_wc(const FormCoefficients& H);

inline constexpr double kPseudoOrthogonalTol = 1e-10;

/// True when a^T eta a = eta entrywise within `tol`.
bool is_pseudo_orthogonal(const Eigen::MatrixXd& a, const Signature& sig,
                          double tol = kPseudoOrthogonalTol);

/// (gH)(u,v) = b(H(a^{-1}u, a^{-1}v)) for g = (a,b) in O(p,m-p) x O(q,n-q).
/// Throws InvalidArgumentError when either matrix fails the pseudo-orthogonality
/// check.
FormCoefficients act_group(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                           const FormCoefficients& H);

/// Deterministic random element of O(p, m-p).  For p = 0 a Haar rotation from
/// the QR factorization of a Gaussian matrix; for p > 0 a product of Haar
/// rotations inside the two sign blocks and hyperbolic boosts with rapidity in
/// [-1, 1].
Eigen::MatrixXd random_pseudo_orthogonal(const Signature& sig, std::uint64_t seed);

/// Dense rank-4 covariant tensor on E^m_p.
class FourTensor {
 public:
  explicit FourTensor(Signature sig);

  const Signature& domain_sig() const { return sig_; }
  int m() const { return sig_.dim; }

  double& operator()(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return data_[index(i, j, k, l)]; }

 private:
  std::size_t index(int i, int j, int k, int l) const {
    const std::size_t mm = static_cast<std::size_t>(m());
    return ((i * mm + j) * mm + k) * mm + l;
  }

  Signature sig_;
  std::vector<double> data_;
};

/// rho_ijkl = sum_alpha eps'_alpha h^alpha_ij h^alpha_kl.
FourTensor rho_tensor(const FormCoefficients& H);

struct ContractionPair {
  double c1234 = 0.0;  ///< C12 C34 T = sum eps_i eps_j T_iijj
  double c1324 = 0.0;  ///< C13 C24 T = sum eps_i eps_j T_ijij
};

ContractionPair contract_pattern(const FourTensor& T);

/// Element of S4 stored as the images of (1,2,3,4), 0-based.
class Permutation4 {
 public:
  constexpr Permutation4() : images_{0, 1, 2, 3} {}
  /// Images given 1-based, e.g. {4,2,3,1} for the swap of slots 1 and 4.
  Permutation4(std::array<int, 4> one_based_images);

  int operator()(int slot) const { return images_[static_cast<std::size_t>(slot)]; }
  Permutation4 then(const Permutation4& next) const;
  std::string to_string() const;

  bool operator==(const Permutation4&) const = default;

  static Permutation4 identity() { return Permutation4(); }
  /// The six representatives sigma_1..sigma_6 of the reduced S4 action
  /// (k is 1-based).
  static Permutation4 sigma(int k);

 private:
  std::array<int, 4> images_;
};

/// (sigma T)_{i1 i2 i3 i4} = T_{i_sigma(1) i_sigma(2) i_sigma(3) i_sigma(4)}.
FourTensor permute4(const FourTensor& T, const Permutation4& sigma);

/// Value of the Chern-Federer contraction pattern (C12 C34 - C13 C24) on T.
double cf_pattern_value(const FourTensor& T);

struct S4SymmetryReport {
  double base_value = 0.0;              ///< CF pattern on rho
  std::array<double, 6> values{};       ///< CF pattern on sigma_k rho
  std::array<int, 6> sign{};            ///< +1 symmetric, -1 antisymmetric, 0 neither
  double antisymmetry_defect_sigma3 = 0.0;  ///< |value(sigma3) + base|
  double antisymmetry_defect_sigma6 = 0.0;  ///< |value(sigma6) + base|
  bool antisymmetric_under_sigma3_and_sigma6 = false;
};

S4SymmetryReport s4_symmetry_report(const FormCoefficients& H, double tol = 1e-12);

/// Kernel of the antisymmetry constraints "f(sigma3 rho) = -f(rho)" and
/// "f(sigma6 rho) = -f(rho)" for f = a*C12C34 + b*C13C24, assembled from
/// the given samples.  rank == 1 and kernel proportional to (1,-1) means the
/// CF pattern is the unique antisymmetric element of the span.
struct AntisymmetricSpan {
  int rank = 0;
  Eigen::Vector2d kernel = Eigen::Vector2d::Zero();  ///< unit vector, first entry >= 0
  Eigen::Vector2d singular_values = Eigen::Vector2d::Zero();
};

AntisymmetricSpan antisymmetric_span(const std::vector<FormCoefficients>& samples);

}  // namespace cfvar
