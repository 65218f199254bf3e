#pragma once

#include <Eigen/Core>

#include <string>

#include "qadj/scalar.hpp"

namespace qadj {

/// Per-field hooks used by the generic algebra and linear-algebra code.
/// Two fields are supported: RatFunc (q symbolic) and Rational (q specialized).
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr const char* name = "Q";
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static std::string str(const Rational& x) { return x.to_string(); }
  /// Denominator of x as a field element.
  static Rational denominator(const Rational& x) { return Rational(x.denominator()); }
  static Rational lcm(const Rational& a, const Rational& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    return Rational(l);
  }
  /// Gcd-style content of an integral entry; accumulate with content_combine.
  static Rational content_combine(const Rational& acc, const Rational& x) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), acc.numerator().get_mpz_t(), x.numerator().get_mpz_t());
    return Rational(g);
  }
  /// Unit part used to fix the sign/scale of a primitive row.
  static Rational unit_part(const Rational& x) { return x.sign() < 0 ? Rational(-1) : Rational(1); }
};

template <>
struct FieldTraits<RatFunc> {
  static constexpr const char* name = "Q(q)";
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
  static std::string str(const RatFunc& x) { return x.to_string(); }
  static RatFunc denominator(const RatFunc& x) { return RatFunc(x.den(), Poly(Rational(1))); }
  static RatFunc lcm(const RatFunc& a, const RatFunc& b) {
    const Poly& pa = a.num();
    const Poly& pb = b.num();
    Poly g = Poly::gcd(pa, pb);
    return RatFunc(Poly::divexact(pa, g) * pb, Poly(Rational(1)));
  }
  static RatFunc content_combine(const RatFunc& acc, const RatFunc& x) {
    if (acc.is_zero()) return RatFunc(x.num().monic(), Poly(Rational(1)));
    return RatFunc(Poly::gcd(acc.num(), x.num()), Poly(Rational(1)));
  }
  static RatFunc unit_part(const RatFunc& x) { return RatFunc(Rational(mpq_class(x.num().lc()))); }
};

}  // namespace qadj

namespace Eigen {

template <>
struct NumTraits<qadj::Rational> : GenericNumTraits<qadj::Rational> {
  using Real = qadj::Rational;
  using NonInteger = qadj::Rational;
  using Nested = qadj::Rational;
  using Literal = qadj::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
};

template <>
struct NumTraits<qadj::RatFunc> : GenericNumTraits<qadj::RatFunc> {
  using Real = qadj::RatFunc;
  using NonInteger = qadj::RatFunc;
  using Nested = qadj::RatFunc;
  using Literal = qadj::RatFunc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 128,
    MulCost = 256
  };
};

}  // namespace Eigen

namespace qadj {

template <class F>
using Matrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;

template <class F>
using RowVector = Eigen::Matrix<F, 1, Eigen::Dynamic>;

}  // namespace qadj
