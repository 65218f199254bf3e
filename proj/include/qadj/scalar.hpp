#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qadj/errors.hpp"

namespace qadj {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& v) : v_(v) {}

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const;
  Rational pow(int k) const;
  std::string to_string() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Dense univariate polynomial in q with rational coefficients.
/// Trailing zero coefficients are never stored; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<mpq_class> coeffs);

  static Poly monomial(const Rational& c, int degree);
  static Poly q() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  /// True for c*q^k (a single nonzero coefficient).
  bool is_monomial() const;
  /// Lowest degree with a nonzero coefficient; 0 for the zero polynomial.
  int order() const;
  const mpq_class& lc() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const mpq_class& s) const;
  /// Multiply by q^k (k >= 0) or divide by q^{-k} (requires order() >= -k).
  Poly shifted(int k) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionByZero on a zero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
  /// Exact quotient; the remainder must vanish.
  static Poly divexact(const Poly& a, const Poly& b);
  /// Monic greatest common divisor (zero iff both inputs are zero).
  static Poly gcd(const Poly& a, const Poly& b);
  Poly monic() const;

  Rational evaluate(const Rational& at) const;
  /// Least common multiple of the coefficient denominators.
  mpz_class denominator_lcm() const;
  /// Gcd of the coefficient numerators (assumes integral coefficients).
  mpz_class integer_content() const;

  /// Renders with integer coefficients scaled by `scale`, e.g. "2*q^2-q+3".
  std::string to_string(const mpq_class& scale = 1) const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Element of the rational function field Q(q).
///
/// Canonical form: gcd(num, den) = 1 and den monic, so equality is
/// structural. Laurent elements (den = q^k) take a cheap reduction path.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(long v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT
  RatFunc(const Rational& v) : num_(v), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  static RatFunc q() { return RatFunc(Poly::q(), Poly(Rational(1))); }
  /// q^k for any integer k.
  static RatFunc q_pow(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_laurent() const { return den_.is_monomial(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;
  RatFunc pow(int k) const;

  /// Renders as an integer-coefficient fraction in q, e.g. "(q^2-1)/(2*q+2)".
  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

/// Exact evaluation at q = q0; throws NotSpecializable at a pole.
Rational specialize(const RatFunc& a, const Rational& q0);

std::size_t hash_value(const Rational& r);

}  // namespace qadj
