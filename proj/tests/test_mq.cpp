#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qadj/mq.hpp"

using qadj::MqAlgebra;
using qadj::RatFunc;
using E = qadj::MqElement<RatFunc>;

namespace {

RatFunc q() { return RatFunc::q(); }

E random_element(MqAlgebra<RatFunc>& A, std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> idx(1, A.n()), len(0, max_deg), coef(-2, 2);
  E out = A.zero();
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<int, int>> w;
    const int l = len(rng);
    for (int s = 0; s < l; ++s) w.emplace_back(idx(rng), idx(rng));
    out += A.normal_form(w, RatFunc(coef(rng)) + q() * coef(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("rewriting examples at N=2") {
  MqAlgebra<RatFunc> A(2, q());
  auto x = [&](int i, int j) { return A.gen(i, j); };
  CHECK(A.mul(x(2, 1), x(1, 1)) == A.mul(x(1, 1), x(2, 1)).scaled(RatFunc::q_pow(-1)));
  CHECK(A.mul(x(2, 2), x(1, 1)) == A.mul(x(1, 1), x(2, 2)) - A.mul(x(1, 2), x(2, 1)).scaled(q() - RatFunc::q_pow(-1)));
  CHECK(A.normal_form({}) == A.one());
  E c = A.normal_form({{1, 2}, {2, 1}});
  CHECK(c.terms.size() == 1);
  CHECK(A.normal_form({{2, 1}, {1, 2}}) == c);
  CHECK(A.mul(x(1, 1), x(2, 2)).terms.size() == 1);
  CHECK(A.mul(x(1, 2), x(1, 1)) == A.mul(x(1, 1), x(1, 2)).scaled(RatFunc::q_pow(-1)));
}

TEST_CASE("defining relations hold in normal form") {
  for (int n = 2; n <= 3; ++n) {
    MqAlgebra<RatFunc> A(n, q());
    auto x = [&](int i, int j) { return A.gen(i, j); };
    const RatFunc qd = q() - RatFunc::q_pow(-1);
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j)
          for (int l = j + 1; l <= n; ++l) {
            CHECK(A.mul(x(i, j), x(i, l)) == A.mul(x(i, l), x(i, j)).scaled(q()));
            CHECK(A.mul(x(i, j), x(k, j)) == A.mul(x(k, j), x(i, j)).scaled(q()));
            CHECK(A.mul(x(i, l), x(k, j)) == A.mul(x(k, j), x(i, l)));
            CHECK(A.mul(x(i, j), x(k, l)) - A.mul(x(k, l), x(i, j)) == A.mul(x(i, l), x(k, j)).scaled(qd));
          }
  }
}

TEST_CASE("quantum minors") {
  MqAlgebra<RatFunc> A2(2, q());
  CHECK(A2.det() == A2.normal_form({{1, 1}, {2, 2}}) - A2.normal_form({{1, 2}, {2, 1}}, q()));
  CHECK(A2.quantum_minor({1}, {1}) == A2.gen(1, 1));
  MqAlgebra<RatFunc> A3(3, q());
  CHECK(A3.quantum_minor({1, 2}, {1, 3}) == A3.normal_form({{1, 1}, {2, 3}}) - A3.normal_form({{1, 3}, {2, 1}}, q()));
  CHECK(A3.quantum_minor({1}, {1}) == A3.gen(1, 1));
  CHECK_THROWS_AS(A3.quantum_minor({1, 2}, {1}), qadj::SizeMismatch);
}

TEST_CASE("sigma and tau") {
  MqAlgebra<RatFunc> A(2, q());
  CHECK(A.sigma(1) == A.gen(1, 1) + A.gen(2, 2));
  CHECK(A.tau(1) == A.gen(1, 1).scaled(RatFunc::q_pow(-2)) + A.gen(2, 2).scaled(RatFunc::q_pow(-4)));
  CHECK(A.tau(2) == A.det().scaled(RatFunc::q_pow(-6)));
  CHECK_THROWS_AS(A.tau(3), qadj::SizeMismatch);
  MqAlgebra<RatFunc> A3(3, q());
  CHECK(A3.sigma(1) == A3.gen(1, 1) + A3.gen(2, 2) + A3.gen(3, 3));
}

TEST_CASE("monomial basis") {
  MqAlgebra<RatFunc> A(2, q());
  auto b1 = A.monomial_basis(1);
  REQUIRE(b1.size() == 5);
  CHECK(A.monomial_string(b1[0]) == "1");
  CHECK(A.monomial_string(b1[1]) == "x11");
  CHECK(A.monomial_string(b1[2]) == "x12");
  CHECK(A.monomial_string(b1[3]) == "x21");
  CHECK(A.monomial_string(b1[4]) == "x22");
  CHECK(A.monomial_basis(2).size() == 15);
  MqAlgebra<RatFunc> A3(3, q());
  CHECK(A3.monomial_basis(1).size() == 10);
  CHECK(A3.monomial_basis(3).size() == 220);
  CHECK(A.monomial_basis(0).size() == 1);
}

TEST_CASE("multidegree") {
  MqAlgebra<RatFunc> A(2, q());
  auto d = A.multidegree(A.mul(A.gen(1, 1), A.gen(2, 1)));
  CHECK(d.rowdeg == std::vector<int>{1, 1});
  CHECK(d.coldeg == std::vector<int>{2, 0});
  auto dd = A.multidegree(A.det());
  CHECK(dd.rowdeg == std::vector<int>{1, 1});
  CHECK(dd.coldeg == std::vector<int>{1, 1});
  CHECK_THROWS_AS(A.multidegree(A.gen(1, 1) + A.gen(2, 2)), qadj::NotMultihomogeneous);
}

TEST_CASE("rendering") {
  MqAlgebra<RatFunc> A(2, q());
  CHECK(A.to_string(A.det()) == "x11*x22 - q*x12*x21");
  CHECK(A.to_string(A.zero()) == "0");
  CHECK(A.to_string(A.tau(1)) == "(1/q^2)*x11 + (1/q^4)*x22");
}

TEST_CASE("confluence: association order does not matter") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 3; ++n) {
    MqAlgebra<RatFunc> A(n, q());
    std::uniform_int_distribution<int> idx(1, n), len(0, 6);
    for (int it = 0; it < 30; ++it) {
      std::vector<std::pair<int, int>> w;
      const int l = len(rng);
      for (int s = 0; s < l; ++s) w.emplace_back(idx(rng), idx(rng));
      E left = A.normal_form(w);
      std::uniform_int_distribution<int> cut(0, l);
      const int c = cut(rng);
      std::vector<std::pair<int, int>> w1(w.begin(), w.begin() + c), w2(w.begin() + c, w.end());
      E right = A.mul(A.normal_form(w1), A.normal_form(w2));
      // Right-to-left association.
      E rl = A.one();
      for (auto it2 = w.rbegin(); it2 != w.rend(); ++it2) rl = A.mul(A.gen(it2->first, it2->second), rl);
      CHECK(left == right);
      CHECK(left == rl);
    }
  }
}

TEST_CASE("associativity on random elements") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 3; ++n) {
    MqAlgebra<RatFunc> A(n, q());
    for (int it = 0; it < 8; ++it) {
      E a = random_element(A, rng, 2, 2), b = random_element(A, rng, 2, 2), c = random_element(A, rng, 2, 2);
      CHECK(A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c)));
      CHECK(A.mul(a, b + c) == A.mul(a, b) + A.mul(a, c));
    }
  }
}

TEST_CASE("det is central and the coinvariant families commute") {
  for (int n = 2; n <= 3; ++n) {
    MqAlgebra<RatFunc> A(n, q());
    const E det = A.det();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(A.mul(det, A.gen(i, j)) == A.mul(A.gen(i, j), det));
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k) {
        CHECK(A.mul(A.sigma(i), A.sigma(k)) == A.mul(A.sigma(k), A.sigma(i)));
        CHECK(A.mul(A.tau(i), A.tau(k)) == A.mul(A.tau(k), A.tau(i)));
      }
  }
}

TEST_CASE("multidegree is additive") {
  MqAlgebra<RatFunc> A(3, q());
  auto basis = A.monomial_basis(2);
  for (std::size_t s = 1; s < basis.size(); s += 7)
    for (std::size_t t = 2; t < basis.size(); t += 11) {
      auto da = A.multidegree(A.monomial(basis[s])), db = A.multidegree(A.monomial(basis[t]));
      auto dp = A.multidegree(A.mul(A.monomial(basis[s]), A.monomial(basis[t])));
      for (int i = 0; i < 3; ++i) {
        CHECK(dp.rowdeg[static_cast<std::size_t>(i)] == da.rowdeg[static_cast<std::size_t>(i)] + db.rowdeg[static_cast<std::size_t>(i)]);
        CHECK(dp.coldeg[static_cast<std::size_t>(i)] == da.coldeg[static_cast<std::size_t>(i)] + db.coldeg[static_cast<std::size_t>(i)]);
      }
    }
}

TEST_CASE("commutative specialization") {
  MqAlgebra<qadj::Rational> A(2, qadj::Rational(1));
  CHECK(A.mul(A.gen(2, 2), A.gen(1, 1)) == A.mul(A.gen(1, 1), A.gen(2, 2)));
  CHECK(A.mul(A.gen(2, 1), A.gen(1, 2)) == A.mul(A.gen(1, 2), A.gen(2, 1)));
}
