#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qadj/scalar.hpp"

using qadj::Poly;
using qadj::RatFunc;
using qadj::Rational;

namespace {

RatFunc q() { return RatFunc::q(); }

// Random element with small integer coefficients and low degree.
RatFunc random_ratfunc(std::mt19937& rng, bool allow_zero_num = true) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3);
  auto poly = [&](bool nonzero) {
    for (;;) {
      std::vector<mpq_class> c(static_cast<std::size_t>(deg(rng) + 1));
      for (auto& x : c) x = coef(rng);
      Poly p(c);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return RatFunc(poly(!allow_zero_num), poly(true));
}

}  // namespace

TEST_CASE("inverse pair multiplies to one") {
  CHECK(q() * (RatFunc(1) / q()) == RatFunc(1));
  CHECK(q() * RatFunc::q_pow(-1) == RatFunc(1));
}

TEST_CASE("difference of squares") {
  CHECK((q() - 1) * (q() + 1) == q() * q() - 1);
}

TEST_CASE("reduction before addition") {
  RatFunc a = (q() * q() - 1) / (q() - 1);
  CHECK(a == q() + 1);
  CHECK(a.is_polynomial());
  CHECK(a + 1 == q() + 2);
}

TEST_CASE("canonical form has monic denominator") {
  RatFunc a(Poly(std::vector<mpq_class>{2}), Poly(std::vector<mpq_class>{4, 6}));
  CHECK(a.den().lc() == 1);
  CHECK(a == RatFunc(Rational(1, 3)) / (q() + Rational(2, 3)));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(q() / RatFunc(0), qadj::DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), qadj::DivisionByZero);
}

TEST_CASE("specialization") {
  CHECK(qadj::specialize(q() * q(), Rational(1)) == Rational(1));
  CHECK(qadj::specialize((q() * q() - 1) / (q() - 1), Rational(1)) == Rational(2));
  CHECK_THROWS_AS(qadj::specialize(RatFunc(1) / (q() - 1), Rational(1)), qadj::NotSpecializable);
  CHECK(qadj::specialize(RatFunc::q_pow(-3), Rational(2)) == Rational(1, 8));
}

TEST_CASE("rendering") {
  CHECK((q() * q() - 1).to_string() == "q^2-1");
  CHECK((RatFunc(1) / q()).to_string() == "1/q");
  CHECK(RatFunc(Rational(-3, 4)).to_string() == "-3/4");
  CHECK(RatFunc(0).to_string() == "0");
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(1234);
  for (int it = 0; it < 200; ++it) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == RatFunc(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
  }
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937 rng(99);
  const Rational pts[] = {Rational(1), Rational(2), Rational(-1, 3), Rational(5, 7)};
  int checked = 0;
  for (int it = 0; it < 200; ++it) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    for (const Rational& q0 : pts) {
      try {
        Rational sa = qadj::specialize(a, q0), sb = qadj::specialize(b, q0);
        CHECK(qadj::specialize(a * b, q0) == sa * sb);
        CHECK(qadj::specialize(a + b, q0) == sa + sb);
        ++checked;
      } catch (const qadj::NotSpecializable&) {
      }
    }
  }
  CHECK(checked > 400);
}

TEST_CASE("polynomial gcd and exact division") {
  Poly a = (Poly::q() - Poly(Rational(1))) * (Poly::q() + Poly(Rational(2)));
  Poly b = (Poly::q() - Poly(Rational(1))) * (Poly::q() * Poly::q() + Poly(Rational(1)));
  CHECK(Poly::gcd(a, b) == Poly::q() - Poly(Rational(1)));
  CHECK(Poly::divexact(a, Poly::q() + Poly(Rational(2))) == Poly::q() - Poly(Rational(1)));
}
