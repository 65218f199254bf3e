#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "classical_oracle.hpp"
#include "qadj/coorbit.hpp"

using qadj::Coaction;
using qadj::Leg;
using qadj::Matrix;
using qadj::Monomial;
using qadj::Point;
using qadj::PowerVariant;
using qadj::QuantumGroup;
using qadj::RatFunc;
using qadj::Rational;
using QG = QuantumGroup<RatFunc>;
using Mq = QG::Mq;
using Glq = QG::Glq;
using T = QG::T;

namespace {

RatFunc q() { return RatFunc::q(); }

Point<RatFunc> pt(std::initializer_list<std::initializer_list<RatFunc>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix<RatFunc> m(n, n);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const auto& v : r) m(i, j++) = v;
    ++i;
  }
  return qadj::validate_point(m, q());
}

Point<RatFunc> diag23() { return pt({{2, 0}, {0, 3}}); }
Point<RatFunc> nilpotent() { return pt({{0, 1}, {0, 0}}); }

oracle::Mat2 to_mat2(const Point<RatFunc>& xi) {
  oracle::Mat2 m;
  const Point<Rational> x1 = qadj::specialize(xi, Rational(1));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x1(i + 1, j + 1).value();
  return m;
}

}  // namespace

TEST_CASE("validate_point") {
  CHECK(diag23().n == 2);
  CHECK(nilpotent().n == 2);
  try {
    pt({{1, 1}, {0, 0}});
    FAIL("expected NotAPoint");
  } catch (const qadj::NotAPoint& e) {
    const std::string what = e.what();
    CHECK(what.find("not a C-point") != std::string::npos);
    CHECK(what.find("two nonzero entries in row 1") != std::string::npos);
  }
  CHECK_THROWS_AS(pt({{0, 1}, {1, 0}}), qadj::NotAPoint);
  CHECK_NOTHROW(pt({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
  // At q = 1 every matrix is a point.
  Matrix<Rational> any(2, 2);
  any << Rational(1), Rational(1), Rational(1), Rational(0);
  CHECK_NOTHROW(qadj::validate_point(any, Rational(1)));
}

TEST_CASE("evaluate") {
  QG G(2, q());
  const RatFunc x1 = RatFunc(5), x2 = RatFunc(-7);
  const auto xi = qadj::diagonal_point<RatFunc>({x1, x2});
  CHECK(qadj::evaluate(xi, G.mq().det()) == x1 * x2);
  CHECK(qadj::evaluate(xi, G.mq().one()) == RatFunc(1));
  CHECK(qadj::evaluate(nilpotent(), G.mq().tau(1)).is_zero());
  CHECK(qadj::evaluate(nilpotent(), G.mq().tau(2)).is_zero());
}

TEST_CASE("co-orbit of coinvariants and constants") {
  for (int n = 2; n <= 3; ++n) {
    QG G(n, q());
    std::vector<RatFunc> d;
    for (int i = 0; i < n; ++i) d.emplace_back(i + 2);
    const auto xi = qadj::diagonal_point(d);
    CHECK(G.equal(qadj::coorbit(G, xi, G.mq().one()), G.gl(G.mq().one())));
    for (int i = 1; i <= n; ++i) {
      const Mq tau = G.mq().tau(i), sigma = G.mq().sigma(i);
      CHECK(G.equal(qadj::coorbit(G, xi, tau), G.gl(G.mq().scalar(qadj::evaluate(xi, tau)))));
      CHECK(G.equal(qadj::coorbit(G, xi, sigma, Coaction::Alpha), G.gl(G.mq().scalar(qadj::evaluate(xi, sigma)))));
    }
  }
}

TEST_CASE("direct sum agrees with the coaction tensor") {
  QG G(2, q());
  for (const auto& xi : {diag23(), nilpotent(), pt({{0, 0}, {q(), 0}})})
    for (Coaction w : {Coaction::Beta, Coaction::Alpha})
      for (const Monomial& m : G.mq().monomial_basis(2)) {
        const Mq f = G.mq().monomial(m);
        CHECK(G.equal(qadj::coorbit(G, xi, f, w), qadj::coorbit_literal(G, xi, f, w)));
      }
  QG H(3, q());
  const auto xi3 = pt({{0, 1, 0}, {0, 0, 2}, {0, 0, 0}});
  for (const Monomial& m : H.mq().monomial_basis(1)) {
    const Mq f = H.mq().monomial(m);
    CHECK(H.equal(qadj::coorbit(H, xi3, f), qadj::coorbit_literal(H, xi3, f)));
  }
}

TEST_CASE("psi of x21") {
  QG G(2, q());
  const RatFunc x1 = RatFunc(2), x2 = RatFunc(3);
  const auto a = G.sl_gen(1, 1), c = G.sl_gen(2, 1);
  const auto got = qadj::psi_image(G, diag23(), G.mq().gen(2, 1));
  CHECK(got == G.sl_mul(c, a).scaled(-q() * (x1 - x2)));
  CHECK(qadj::psi_power_check(G, diag23(), 1, PowerVariant::BetaDiag));
  const auto ones = qadj::diagonal_point<RatFunc>({1, 1});
  CHECK(qadj::psi_image(G, ones, G.mq().gen(2, 1)).is_zero());
  CHECK(qadj::psi_power_check(G, ones, 1, PowerVariant::BetaDiag));
  // phi(x21) = -q (xi1 - q^-2 xi2) ac, worked by hand.
  CHECK(qadj::psi_image(G, diag23(), G.mq().gen(2, 1), Coaction::Alpha) ==
        G.sl_mul(a, c).scaled(-q() * (x1 - x2 / (q() * q()))));
  CHECK(qadj::psi_closed_form(G, nilpotent(), 2, PowerVariant::BetaNilpotent) == G.sl_pow(c, 4).scaled(q() * q()));
  CHECK(qadj::psi_power_check(G, nilpotent(), 2, PowerVariant::BetaNilpotent));
  CHECK_THROWS_AS(qadj::psi_closed_form(G, nilpotent(), 1, PowerVariant::BetaDiag), qadj::SizeMismatch);
  CHECK_THROWS_AS(qadj::psi_closed_form(G, diag23(), 1, PowerVariant::BetaNilpotent), qadj::SizeMismatch);
}

TEST_CASE("closed forms for small powers") {
  QG G(2, q());
  for (int n = 0; n <= 3; ++n) {
    CHECK(qadj::psi_power_check(G, diag23(), n, PowerVariant::BetaDiag));
    CHECK(qadj::psi_power_check(G, diag23(), n, PowerVariant::AlphaDiag));
    CHECK(qadj::psi_power_check(G, nilpotent(), n, PowerVariant::BetaNilpotent));
  }
}

TEST_CASE("kernel and ideal at small degree") {
  QG G(2, q());
  const auto xi = diag23();
  CHECK(qadj::kernel_basis(G, xi, Coaction::Beta, 0).dim() == 0);
  const auto k1 = qadj::kernel_basis(G, xi, Coaction::Beta, 1);
  REQUIRE(k1.dim() == 1);
  const Mq shifted = G.mq().tau(1) - G.mq().scalar(RatFunc(2) / q().pow(2) + RatFunc(3) / q().pow(4));
  CHECK(qadj::same_subspace(k1, qadj::span_of<RatFunc>(Leg::Mq, 2, 0, {shifted.terms})));
  const auto k2 = qadj::kernel_basis(G, xi, Coaction::Beta, 2);
  const auto z2 = qadj::ideal_truncation(G, xi, Coaction::Beta, 2);
  CHECK(k2.dim() == 6);
  CHECK(z2.space.dim() == 6);
  CHECK(z2.spanning == 6);
  CHECK(qadj::same_subspace(k2, z2.space));
  const auto zero = pt({{0, 0}, {0, 0}});
  CHECK(qadj::ideal_truncation(G, zero, Coaction::Beta, 1).space.dim() == 1);
  // Alpha side: left ideal of sigma_i - sigma_i(xi).
  const auto ka = qadj::kernel_basis(G, xi, Coaction::Alpha, 2);
  const auto za = qadj::ideal_truncation(G, xi, Coaction::Alpha, 2);
  CHECK(qadj::contains(ka, za.space));
  CHECK(ka.dim() == 6);
}

TEST_CASE("kernel contains the ideal") {
  QG G(2, q());
  for (const auto& xi : {diag23(), nilpotent(), pt({{q() * q(), 0}, {0, 1}}), pt({{1, 0}, {0, 1}}), pt({{0, 0}, {0, 0}})})
    for (int d = 0; d <= 2; ++d) {
      const auto k = qadj::kernel_basis(G, xi, Coaction::Beta, d);
      const auto z = qadj::ideal_truncation(G, xi, Coaction::Beta, d);
      CHECK(qadj::contains(k, z.space));
    }
  QG H(3, q());
  const auto xi3 = pt({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
  CHECK(qadj::contains(qadj::kernel_basis(H, xi3, Coaction::Beta, 1), qadj::ideal_truncation(H, xi3, Coaction::Beta, 1).space));
}

TEST_CASE("dimensions match the classical evaluation oracle") {
  QG G(2, q());
  for (const auto& xi : {diag23(), nilpotent()})
    for (int d = 0; d <= 2; ++d) {
      const auto expect = oracle::classical_image(to_mat2(xi), d);
      const auto img = qadj::image_data(G, xi, Coaction::Beta, d);
      CHECK(img.space.dim() == expect.image);
      CHECK(qadj::kernel_basis(G, xi, Coaction::Beta, d).dim() == expect.kernel());
      // Weight blocks: image character t1^w t2^-w with the oracle's block ranks.
      qadj::Character ch(2);
      for (const auto& [w, r] : expect.by_weight) ch.add({w, -w}, r);
      CHECK(img.character == ch);
    }
  CHECK(oracle::classical_image(to_mat2(diag23()), 2).image == 9);
}

TEST_CASE("image at degree zero and the resonant drop") {
  QG G(2, q());
  const auto i0 = qadj::image_data(G, diag23(), Coaction::Beta, 0);
  CHECK(i0.space.dim() == 1);
  CHECK(i0.character == qadj::Character::constant(2, 1));
  CHECK(qadj::image_data(G, diag23(), Coaction::Beta, 2).space.dim() == 9);
  const auto res = pt({{q() * q(), 0}, {0, 1}});
  CHECK(!qadj::psi_image(G, res, G.mq().gen(2, 1)).is_zero());
  CHECK(qadj::psi_image(G, res, G.mq().pow(G.mq().gen(2, 1), 2)).is_zero());
  // Generic degree-2 image is 9; at the resonant point it is 4.
  CHECK(qadj::image_data(G, res, Coaction::Beta, 2).space.dim() == 4);
}

TEST_CASE("images lie in the diagonal coinvariants") {
  QG G(2, q());
  for (const Monomial& m : G.mq().monomial_basis(2)) CHECK(G.is_diag_coinvariant(qadj::coorbit(G, diag23(), G.mq().monomial(m))));
  for (int d = 0; d <= 2; ++d) {
    const auto L = qadj::diag_coinv_truncation(G, d);
    CHECK(L.dim() == (d + 1) * (d + 1));
    CHECK(qadj::contains(L, qadj::image_data(G, diag23(), Coaction::Beta, d).space));
    for (Eigen::Index r = 0; r < L.vectors.rows(); ++r) CHECK(G.is_diag_coinvariant(Glq{Mq(2, qadj::element_of(L, r)), d}));
  }
  QG H(3, q());
  CHECK(qadj::diag_coinv_truncation(H, 1).dim() == 27);
}

TEST_CASE("co-orbit map is a comodule morphism") {
  QG G(2, q());
  for (const auto& xi : {diag23(), nilpotent()})
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        const Mq x = G.mq().gen(i, j);
        const T lhs = G.comultiply(qadj::coorbit(G, xi, x));
        const T b = G.coaction_beta(x);
        T rhs({Leg::Glq, Leg::Glq});
        rhs.detpow = {0, b.detpow[1]};
        for (const auto& [key, c] : b.terms) {
          const Glq u = qadj::coorbit(G, xi, G.mq().monomial(key[0], c));
          rhs = G.tensor_add(rhs, G.pure({Leg::Glq, Leg::Glq}, {u.detpow, b.detpow[1]}, {u.num.terms, G.mq().monomial(key[1]).terms}));
        }
        CHECK(G.tensor_equal(lhs, rhs));
      }
}

TEST_CASE("sphere span") {
  QG G(2, q());
  for (int n = 0; n <= 3; ++n) CHECK(qadj::sphere_span(G, n).dim() == (n + 1) * (n + 1));
  const auto s1 = qadj::sphere_span(G, 1);
  CHECK(qadj::character_of(s1) == qadj::chi_T(0) + qadj::chi_T(2));
}

TEST_CASE("nilpotent images stay in the even c,d subalgebra") {
  QG G(2, q());
  for (const Monomial& m : G.mq().monomial_basis(3))
    CHECK(qadj::in_even_cd_subalgebra(qadj::psi_image(G, nilpotent(), G.mq().monomial(m))));
  CHECK(!qadj::in_even_cd_subalgebra(G.sl_gen(2, 1)));
}

TEST_CASE("q = 1 pipeline") {
  QuantumGroup<Rational> G(2, Rational(1));
  const Point<Rational> xi = qadj::specialize(diag23(), Rational(1));
  for (int d = 0; d <= 2; ++d) {
    const auto expect = oracle::classical_image(to_mat2(diag23()), d);
    CHECK(qadj::image_data(G, xi, Coaction::Beta, d).space.dim() == expect.image);
  }
  CHECK(qadj::compare_at_q1(diag23(), 0));
  CHECK(qadj::compare_at_q1(diag23(), 1));
}
