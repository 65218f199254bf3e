#include "qadj/parse.hpp"

#include <cctype>
#include <limits>

#include "qadj/errors.hpp"

namespace qadj {

namespace {

// Recursive descent over one string. V is the value type; the policy P
// supplies atoms (names), constants and the operations V does not have.
template <class V, class P>
class Parser {
 public:
  Parser(const std::string& s, P& policy) : s_(s), p_(policy) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + why);
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

  V expr() {
    V v = term();
    for (;;) {
      if (eat('+')) v = p_.add(v, term());
      else if (eat('-')) v = p_.sub(v, term());
      else return v;
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      if (eat('*')) v = p_.mul(v, unary());
      else if (eat('/')) v = p_.div(v, unary());
      else return v;
    }
  }

  V unary() {
    if (eat('-')) return p_.neg(unary());
    if (eat('+')) return unary();
    return power();
  }

  V power() {
    V v = atom();
    if (!eat('^')) return v;
    skip();
    bool negative = false;
    if (eat('-')) negative = true;
    skip();
    const long e = integer();
    return p_.pow(v, negative ? -static_cast<int>(e) : static_cast<int>(e));
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 9) fail("exponent or index too large");
    return std::stol(digits);
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return p_.number(s_.substr(start, pos_ - start));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      try {
        return p_.name(name);
      } catch (const ParseError& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  P& p_;
  std::size_t pos_ = 0;
};

struct ScalarPolicy {
  bool allow_q = true;

  RatFunc number(const std::string& digits) { return RatFunc(Rational(mpq_class(mpz_class(digits)))); }
  RatFunc name(const std::string& n) {
    if (n == "q" && allow_q) return RatFunc::q();
    throw ParseError("unknown name '" + n + "'");
  }
  RatFunc add(const RatFunc& a, const RatFunc& b) { return a + b; }
  RatFunc sub(const RatFunc& a, const RatFunc& b) { return a - b; }
  RatFunc mul(const RatFunc& a, const RatFunc& b) { return a * b; }
  RatFunc div(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero();
    return a / b;
  }
  RatFunc neg(const RatFunc& a) { return -a; }
  RatFunc pow(const RatFunc& a, int e) {
    if (e < 0 && a.is_zero()) throw DivisionByZero();
    return a.pow(e);
  }
};

struct MqPolicy {
  MqAlgebra<RatFunc>& A;
  using E = MqElement<RatFunc>;

  E number(const std::string& digits) { return A.scalar(ScalarPolicy{}.number(digits)); }
  E name(const std::string& n) {
    const int N = A.n();
    auto index = [&](const std::string& prefix) -> int {
      if (n.size() != prefix.size() + 1 || n.compare(0, prefix.size(), prefix) != 0) return 0;
      const char d = n.back();
      return std::isdigit(static_cast<unsigned char>(d)) ? d - '0' : 0;
    };
    if (n == "q") return A.scalar(RatFunc::q());
    if (n == "det") return A.det();
    if (n.size() == 3 && n[0] == 'x' && std::isdigit(static_cast<unsigned char>(n[1])) &&
        std::isdigit(static_cast<unsigned char>(n[2]))) {
      const int i = n[1] - '0', j = n[2] - '0';
      if (i < 1 || i > N || j < 1 || j > N) throw ParseError("generator " + n + " out of range for N = " + std::to_string(N));
      return A.gen(i, j);
    }
    if (int k = index("sigma"); k >= 1 && k <= N) return A.sigma(k);
    if (int k = index("tau"); k >= 1 && k <= N) return A.tau(k);
    throw ParseError("unknown name '" + n + "'");
  }
  E add(const E& a, const E& b) { return a + b; }
  E sub(const E& a, const E& b) { return a - b; }
  E mul(const E& a, const E& b) { return A.mul(a, b); }
  E div(const E& a, const E& b) {
    const RatFunc c = scalar_of(b, "division");
    if (c.is_zero()) throw DivisionByZero();
    return a.scaled(c.inverse());
  }
  E neg(const E& a) { return -a; }
  E pow(const E& a, int e) {
    if (e >= 0) return A.pow(a, e);
    const RatFunc c = scalar_of(a, "negative power");
    if (c.is_zero()) throw DivisionByZero();
    return A.scalar(c.pow(e));
  }

  RatFunc scalar_of(const E& a, const std::string& what) {
    if (a.is_zero()) return RatFunc(0);
    if (a.terms.size() != 1 || !a.terms.begin()->first.is_one()) throw ParseError(what + " needs a scalar");
    return a.terms.begin()->second;
  }
};

}  // namespace

RatFunc parse_scalar(const std::string& text) {
  ScalarPolicy p;
  return Parser<RatFunc, ScalarPolicy>(text, p).parse();
}

Rational parse_rational(const std::string& text) {
  ScalarPolicy p{false};
  const RatFunc v = Parser<RatFunc, ScalarPolicy>(text, p).parse();
  return specialize(v, Rational(0));
}

MqElement<RatFunc> parse_mq(MqAlgebra<RatFunc>& A, const std::string& text) {
  MqPolicy p{A};
  return Parser<MqElement<RatFunc>, MqPolicy>(text, p).parse();
}

MqElement<Rational> specialize(const MqElement<RatFunc>& f, const Rational& q0) {
  MqElement<Rational> out(f.n);
  for (const auto& [m, c] : f.terms) accumulate(out.terms, m, specialize(c, q0));
  return out;
}

}  // namespace qadj
