#include "cfvar/exact.hpp"

#include "cfvar/error.hpp"

#include <cctype>
#include <sstream>

namespace cfvar {

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = big_gcd(a, b);
  BigInt l = a / g * b;
  return l < 0 ? BigInt(-l) : l;
}

}  // namespace

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::x() { return Polynomial(std::vector<Rational>{0, 1}); }

Polynomial Polynomial::from_descending(const std::vector<BigInt>& desc) {
  std::vector<Rational> a(desc.rbegin(), desc.rend());
  return Polynomial(std::move(a));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  Polynomial r = *this;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InvalidArgumentError("negative polynomial power");
  Polynomial r = constant(1);
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * static_cast<int>(k);
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw InvalidArgumentError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = d.degree();
  const int qd = degree() - dd;
  if (qd < 0) return {Polynomial(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(qd + 1));
  const Rational lead = d.leading();
  for (int k = qd; k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + dd)] / lead;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw InvalidArgumentError("polynomial division is not exact");
  return q;
}

bool Polynomial::divides(const Polynomial& f) const {
  if (is_zero()) return f.is_zero();
  return f.divmod(*this).second.is_zero();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
  return r;
}

double Polynomial::eval(double x) const {
  double r = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * x + to_double(c_[k]);
  return r;
}

int Polynomial::zero_multiplicity() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(k)] == 0) ++k;
  return is_zero() ? 0 : k;
}

Polynomial Polynomial::strip_zero_root() const {
  const int k = zero_multiplicity();
  return Polynomial(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  BigInt L = 1;
  for (const auto& x : c_)
    if (x != 0) L = big_lcm(L, denominator(x));
  BigInt G = 0;
  for (const auto& x : c_) G = big_gcd(G, numerator(Rational(x * L)));
  Rational s = Rational(L) / Rational(G);
  if (leading() < 0) s = -s;
  return *this * s;
}

std::vector<BigInt> Polynomial::integer_coefficients_descending() const {
  std::vector<BigInt> out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (denominator(c_[k]) != 1) throw InvalidArgumentError("polynomial has non-integer coefficients");
    out.push_back(numerator(c_[k]));
  }
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational a = c_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    const bool neg = a < 0;
    if (neg) a = -a;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (a != 1 || k == 0) os << cfvar::to_string(a) << (k ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.leading());
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial l = (a * b).exact_div(gcd(a, b));
  return l * (Rational(1) / l.leading());
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  return p.exact_div(gcd(p, p.derivative()));
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) {
  normalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgumentError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  BigInt L = 1;
  for (const auto* p : {&num_, &den_})
    for (const auto& x : p->coefficients())
      if (x != 0) L = big_lcm(L, denominator(x));
  BigInt G = 0;
  for (const auto* p : {&num_, &den_})
    for (const auto& x : p->coefficients()) G = big_gcd(G, numerator(Rational(x * L)));
  Rational s = Rational(L) / Rational(G);
  if (den_.leading() < 0) s = -s;
  num_ = num_ * s;
  den_ = den_ * s;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }
RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}
RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}
RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw InvalidArgumentError("rational function division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(int e) const {
  RationalFunction r = constant(1);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d == 0) throw InvalidArgumentError("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

double RationalFunction::eval(double x) const { return num_.eval(x) / den_.eval(x); }

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.degree() == 0 && den_.leading() == 1) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// ----------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  MultiPoly p(nvars);
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m[static_cast<std::size_t>(index)] = 1;
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::from_univariate(int nvars, int index, const Polynomial& q) {
  MultiPoly p(nvars);
  for (int k = 0; k <= q.degree(); ++k) {
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(index)] = k;
    p.add_term(m, q.coeff(k));
  }
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Rational MultiPoly::coeff(const Monomial& mono) const {
  auto it = t_.find(mono);
  return it == t_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(int var) const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [m, c] : t_) d = std::max(d, m[static_cast<std::size_t>(var)]);
  return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw InvalidArgumentError("multivariate polynomials over different variable sets");
  MultiPoly r(nvars_);
  for (const auto& [a, ca] : t_)
    for (const auto& [b, cb] : o.t_) {
      Monomial m(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) m[k] = a[k] + b[k];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : t_) r.add_term(m, c * s);
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly r = constant(nvars_, 1);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

MultiPoly MultiPoly::substitute(int var, const Rational& value) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : t_) {
    Monomial mm = m;
    const int e = mm[static_cast<std::size_t>(var)];
    mm[static_cast<std::size_t>(var)] = 0;
    Rational f = 1;
    for (int k = 0; k < e; ++k) f *= value;
    r.add_term(mm, c * f);
  }
  return r;
}

Polynomial MultiPoly::to_univariate(int var) const {
  std::vector<Rational> a(static_cast<std::size_t>(std::max(0, degree_in(var) + 1)));
  for (const auto& [m, c] : t_) {
    for (int k = 0; k < nvars_; ++k)
      if (k != var && m[static_cast<std::size_t>(k)] != 0)
        throw InvalidArgumentError("polynomial still depends on another variable");
    a[static_cast<std::size_t>(m[static_cast<std::size_t>(var)])] += c;
  }
  return Polynomial(std::move(a));
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt L = 1;
  for (const auto& [m, c] : t_) L = big_lcm(L, denominator(c));
  BigInt G = 0;
  for (const auto& [m, c] : t_) G = big_gcd(G, numerator(Rational(c * L)));
  Rational s = Rational(L) / Rational(G);
  if (t_.rbegin()->second < 0) s = -s;
  return *this * s;
}

MultiPoly MultiPoly::strip_variable_power(int var, int* power) const {
  int k = -1;
  for (const auto& [m, c] : t_) {
    const int e = m[static_cast<std::size_t>(var)];
    k = k < 0 ? e : std::min(k, e);
  }
  if (k < 0) k = 0;
  if (power) *power = k;
  MultiPoly r(nvars_);
  for (const auto& [m, c] : t_) {
    Monomial mm = m;
    mm[static_cast<std::size_t>(var)] -= k;
    r.add_term(mm, c);
  }
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    Rational a = it->second;
    const bool neg = a < 0;
    if (neg) a = -a;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    bool any = false;
    std::ostringstream mono;
    for (int k = 0; k < nvars_; ++k) {
      const int e = it->first[static_cast<std::size_t>(k)];
      if (!e) continue;
      mono << (any ? "*" : "") << names[static_cast<std::size_t>(k)];
      if (e > 1) mono << "^" << e;
      any = true;
    }
    if (a != 1 || !any) os << cfvar::to_string(a) << (any ? "*" : "");
    os << mono.str();
    first = false;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  int nv() const { return static_cast<int>(vars_.size()); }
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgumentError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  MultiPoly expr() {
    MultiPoly r(nv());
    bool neg = eat('-');
    if (!neg) eat('+');
    MultiPoly t = term();
    r = neg ? -t : t;
    while (true) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        break;
    }
    return r;
  }
  MultiPoly term() {
    MultiPoly r = factor();
    while (true) {
      skip();
      if (eat('*')) {
        r = r * factor();
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])))) {
        r = r * factor();  // implicit multiplication
      } else {
        break;
      }
    }
    return r;
  }
  MultiPoly factor() {
    MultiPoly b = atom();
    if (eat('^')) {
      skip();
      const std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("expected exponent");
      b = b.pow(std::stoi(s_.substr(st, pos_ - st)));
    }
    return b;
  }
  MultiPoly atom() {
    skip();
    if (eat('(')) {
      MultiPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::constant(nv(), Rational(BigInt(s_.substr(st, pos_ - st))));
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t st = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(st, pos_ - st);
      for (int k = 0; k < nv(); ++k)
        if (vars_[static_cast<std::size_t>(k)] == name) return MultiPoly::variable(nv(), k);
      fail("unknown variable '" + name + "'");
    }
    fail("expected operand");
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

Polynomial lagrange_interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  if (nodes.size() != values.size() || nodes.empty()) throw InvalidArgumentError("bad interpolation data");
  Polynomial out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Polynomial basis = Polynomial::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial(std::vector<Rational>{-nodes[j], 1});
      denom *= nodes[i] - nodes[j];
    }
    out = out + basis * (values[i] / denom);
  }
  return out;
}

}  // namespace cfvar
