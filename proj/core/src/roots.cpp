#include "cfvar/roots.hpp"

#include "cfvar/error.hpp"

#include <cmath>
#include <functional>

namespace cfvar {

namespace {

int sgn(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Splits p(x) = A(x^2) + x B(x^2).
std::pair<Polynomial, Polynomial> even_odd(const Polynomial& p) {
  std::vector<Rational> a;
  std::vector<Rational> b;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k % 2 == 0)
      a.push_back(p.coeff(k));
    else
      b.push_back(p.coeff(k));
  }
  return {Polynomial(a), Polynomial(b)};
}

/// Smallest rational of the form n/2^k above sqrt(q), with k chosen so the
/// error is below 2^-bits.
Rational sqrt_upper(const Rational& q, int bits) {
  BigInt scale = BigInt(1) << bits;
  // floor(sqrt(q * scale^2)) + 1
  Rational t = q * Rational(scale) * Rational(scale);
  BigInt n = numerator(t) / denominator(t);
  BigInt r = boost::multiprecision::sqrt(n);
  return Rational(r + 1, scale);
}

Rational sqrt_lower(const Rational& q, int bits) {
  BigInt scale = BigInt(1) << bits;
  Rational t = q * Rational(scale) * Rational(scale);
  BigInt n = numerator(t) / denominator(t);
  BigInt r = boost::multiprecision::sqrt(n);
  if (r > 0) r -= 1;
  return Rational(r, scale);
}

/// A rational strictly between a < b.
Rational rational_between(const ExactPoint& a, const ExactPoint& b) {
  if (b.infinite) throw InvalidArgumentError("no midpoint with an infinite endpoint");
  for (int bits = 8; bits < 4096; bits *= 2) {
    const Rational lo = a.is_sqrt ? sqrt_upper(a.q, bits) : a.q;
    const Rational hi = b.is_sqrt ? sqrt_lower(b.q, bits) : b.q;
    const Rational mid = (lo + hi) / 2;
    if (compare(a, ExactPoint::rational(mid)) < 0 && compare(ExactPoint::rational(mid), b) < 0) return mid;
  }
  throw InvalidArgumentError("could not separate endpoints");
}

/// Cauchy bound: all roots satisfy |x| < bound.
Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  const Rational lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = p.coeff(k) / lead;
    if (r < 0) r = -r;
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace

double ExactPoint::approx() const {
  if (infinite) return INFINITY;
  return is_sqrt ? std::sqrt(to_double(q)) : to_double(q);
}

std::string ExactPoint::to_string() const {
  if (infinite) return "inf";
  return is_sqrt ? "sqrt(" + cfvar::to_string(q) + ")" : cfvar::to_string(q);
}

std::string OpenInterval::to_string() const { return "(" + lo.to_string() + ", " + hi.to_string() + ")"; }

int sign_at(const Polynomial& p, const ExactPoint& x) {
  if (p.is_zero()) return 0;
  if (x.infinite) return sgn(p.leading());
  if (!x.is_sqrt) return sgn(p.eval(x.q));
  // p(sqrt q) = A(q) + sqrt(q) B(q)
  auto [A, B] = even_odd(p);
  const Rational a = A.eval(x.q);
  const Rational b = B.eval(x.q);
  const int sa = sgn(a);
  const int sb = x.q == 0 ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with q b^2
  const Rational d = a * a - x.q * b * b;
  return sgn(d) * sa;
}

int compare(const ExactPoint& a, const ExactPoint& b) {
  if (a.infinite || b.infinite) return (a.infinite ? 1 : 0) - (b.infinite ? 1 : 0);
  if (!a.is_sqrt && !b.is_sqrt) return sgn(a.q - b.q);
  if (a.is_sqrt && b.is_sqrt) return sgn(a.q - b.q);
  // one sqrt, one rational
  const bool flip = b.is_sqrt;
  const Rational s = flip ? b.q : a.q;  // sqrt(s)
  const Rational r = flip ? a.q : b.q;
  int c;
  if (r < 0)
    c = 1;
  else
    c = sgn(s - r * r);
  return flip ? -c : c;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Polynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    Polynomial r = -(seq[seq.size() - 2].divmod(seq.back()).second);
    if (r.is_zero()) break;
    seq.push_back(r);
  }
  return seq;
}

namespace {

int variations(const std::vector<Polynomial>& seq, const ExactPoint& x) {
  int v = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sturm_count(const std::vector<Polynomial>& seq, const ExactPoint& a, const ExactPoint& b) {
  return variations(seq, a) - variations(seq, b);
}

RootIsolation isolate_roots(const Polynomial& p_in, const OpenInterval& interval, double tol) {
  RootIsolation out;
  if (p_in.is_zero()) {
    out.identically_zero = true;
    return out;
  }
  Polynomial p = p_in;
  // divide out roots on finite endpoints
  for (const ExactPoint* e : {&interval.lo, &interval.hi}) {
    if (e->infinite) continue;
    const Polynomial f = e->is_sqrt && e->q != 0 ? Polynomial(std::vector<Rational>{-e->q, 0, 1})
                                                 : Polynomial(std::vector<Rational>{e->is_sqrt ? Rational(0) : -e->q, 1});
    while (p.degree() > 0 && sign_at(p, *e) == 0) {
      p = p.exact_div(f);
      ++out.removed_boundary_factors;
    }
  }
  const Polynomial s = square_free_part(p);
  if (s.degree() <= 0) return out;
  const auto seq = sturm_sequence(s);

  ExactPoint hi = interval.hi;
  if (hi.infinite) {
    const Rational cb = cauchy_bound(s);
    hi = compare(interval.lo, ExactPoint::rational(cb)) < 0 ? ExactPoint::rational(cb)
                                                              : ExactPoint::rational(interval.lo.approx() + 1);
  }
  // (lo, hi]: the upper endpoint is either beyond all roots or not a root
  std::function<void(ExactPoint, ExactPoint, int)> rec = [&](ExactPoint a, ExactPoint b, int count) {
    if (count <= 0) return;
    if (count == 1) {
      while (true) {
        const double w = b.approx() - a.approx();
        if (!a.is_sqrt && !b.is_sqrt && w <= tol) {
          out.roots.push_back({a.q, b.q, false});
          return;
        }
        const Rational mid = rational_between(a, b);
        const ExactPoint pm = ExactPoint::rational(mid);
        if (s.eval(mid) == 0) {
          out.roots.push_back({mid, mid, true});
          return;
        }
        if (sturm_count(seq, a, pm) == 1)
          b = pm;
        else
          a = pm;
      }
    }
    const ExactPoint pm = ExactPoint::rational(rational_between(a, b));
    const int left = sturm_count(seq, a, pm);
    rec(a, pm, left);
    rec(pm, b, count - left);
  };
  rec(interval.lo, hi, sturm_count(seq, interval.lo, hi));
  return out;
}

}  // namespace cfvar
