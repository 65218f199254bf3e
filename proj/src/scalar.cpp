#include "qadj/scalar.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qadj {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::size_t hash_value(const Rational& r) {
  std::size_t h = mpz_get_ui(r.value().get_num_mpz_t());
  h ^= static_cast<std::size_t>(mpz_get_ui(r.value().get_den_mpz_t())) * 0x9e3779b97f4a7c15ULL;
  return h ^ static_cast<std::size_t>(r.sign() + 1);
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c.value());
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree) {
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, mpq_class(0));
  p.c_.back() = c.value();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

bool Poly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

int Poly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return 0;
}

mpq_class Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::scaled(const mpq_class& s) const {
  if (sgn(s) == 0) return Poly();
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly Poly::shifted(int k) const {
  if (k == 0 || is_zero()) return *this;
  Poly r;
  if (k > 0) {
    r.c_.assign(static_cast<std::size_t>(k), mpq_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  } else {
    if (order() < -k) throw InternalError("Poly::shifted below order");
    r.c_.assign(c_.begin() + (-k), c_.end());
  }
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw DivisionByZero();
  quot = Poly();
  rem = a;
  int db = b.degree();
  if (rem.degree() < db) return;
  quot.c_.assign(static_cast<std::size_t>(rem.degree() - db) + 1, mpq_class(0));
  mpq_class inv_lc = 1 / b.lc();
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    mpq_class f = rem.lc() * inv_lc;
    quot.c_[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= db; ++i) rem.c_[static_cast<std::size_t>(i + shift)] -= f * b.c_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  quot.trim();
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  if (b.is_constant()) {
    if (b.is_zero()) throw DivisionByZero();
    return a.scaled(1 / b.c_[0]);
  }
  Poly qt, r;
  divmod(a, b, qt, r);
  if (!r.is_zero()) throw InternalError("Poly::divexact with nonzero remainder");
  return qt;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / lc());
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic(), y = b.monic();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  // Common power of q first; it is frequent and keeps Euclid short.
  int s = std::min(x.order(), y.order());
  x = x.shifted(-x.order());
  y = y.shifted(-y.order());
  while (!y.is_zero()) {
    Poly qt, r;
    divmod(x, y, qt, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic().shifted(s);
}

Rational Poly::evaluate(const Rational& at) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at.value() + *it;
  return Rational(acc);
}

mpz_class Poly::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

mpz_class Poly::integer_content() const {
  mpz_class g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

std::string Poly::to_string(const mpq_class& scale) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    mpq_class c = c_[static_cast<std::size_t>(e)] * scale;
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 'q';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

// ----------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

RatFunc RatFunc::q_pow(int k) {
  if (k >= 0) return RatFunc(Poly::monomial(Rational(1), k), Poly(Rational(1)));
  return RatFunc(Poly(Rational(1)), Poly::monomial(Rational(1), -k));
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (den_.is_monomial()) {
    int k = den_.degree();
    int s = std::min(num_.order(), k);
    mpq_class inv = 1 / den_.lc();
    num_ = num_.shifted(-s);
    if (inv != 1) num_ = num_.scaled(inv);
    den_ = Poly::monomial(Rational(1), k - s);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Poly::divexact(num_, g);
    den_ = Poly::divexact(den_, g);
  }
  if (den_.lc() != 1) {
    mpq_class inv = 1 / den_.lc();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_one()) return *this;
    normalize();
    return *this;
  }
  if (den_.is_monomial() && o.den_.is_monomial()) {
    int k1 = den_.degree(), k2 = o.den_.degree(), k = std::max(k1, k2);
    num_ = num_.shifted(k - k1) + o.num_.shifted(k - k2);
    den_ = Poly::monomial(Rational(1), k);
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_monomial() && o.den_.is_monomial()) {
    int k = den_.degree() + o.den_.degree();
    num_ = num_ * o.num_;
    den_ = Poly::monomial(Rational(1), k);
    if (k > 0) normalize();
    return *this;
  }
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly n = Poly::divexact(num_, g1) * Poly::divexact(o.num_, g2);
  Poly d = Poly::divexact(den_, g2) * Poly::divexact(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.lc() != 1) {
    mpq_class inv = 1 / den_.lc();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RatFunc r;
  mpq_class inv = 1 / num_.lc();
  r.num_ = den_.scaled(inv);
  r.den_ = num_.scaled(inv);
  return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc acc(1), base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

namespace {

bool single_atom(const Poly& p, const mpq_class& scale) {
  // An integer, or q^k with unit coefficient: safe to print without parentheses.
  if (p.is_constant()) return true;
  return p.is_monomial() && p.lc() * scale == 1;
}

}  // namespace

std::string RatFunc::to_string() const {
  mpz_class l = 1;
  mpz_lcm(l.get_mpz_t(), num_.denominator_lcm().get_mpz_t(), den_.denominator_lcm().get_mpz_t());
  mpq_class scale(l);
  mpz_class g = 0;
  mpz_gcd(g.get_mpz_t(), num_.scaled(scale).integer_content().get_mpz_t(),
          den_.scaled(scale).integer_content().get_mpz_t());
  if (g != 0) scale /= g;
  if (den_.is_constant() && den_.lc() * scale == 1) return num_.to_string(scale);
  std::string n = num_.to_string(scale);
  bool num_atom = num_.is_monomial() || num_.is_constant();
  std::string out = num_atom ? n : "(" + n + ")";
  out += "/";
  std::string d = den_.to_string(scale);
  out += single_atom(den_, scale) ? d : "(" + d + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

Rational specialize(const RatFunc& a, const Rational& q0) {
  Rational d = a.den().evaluate(q0);
  if (d.is_zero()) throw NotSpecializable(a.to_string() + " at q=" + q0.to_string());
  return a.num().evaluate(q0) / d;
}

}  // namespace qadj
