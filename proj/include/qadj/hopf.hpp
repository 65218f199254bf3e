#pragma once

#include <array>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qadj/mq.hpp"

namespace qadj {

/// numerator * det_q^(-detpow) in O(GL_q).
template <class F>
struct GlqElement {
  MqElement<F> num;
  int detpow = 0;

  bool is_zero() const { return num.is_zero(); }
};

/// Laurent polynomial in t_1..t_N (O(D)) or in z (O(K), one variable).
/// Variable i is stored at exponent slot i.
template <class F>
struct Laurent {
  int nvars = 1;
  Terms<F> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.nvars == b.nvars && a.terms == b.terms; }
};

/// Element of O(SL_q) for N = 2 in the basis {a^i b^j c^k} u {b^l c^m d^n},
/// stored as exponent vectors over (a, b, c, d) = (x11, x12, x21, x22).
template <class F>
struct SlElement {
  Terms<F> terms;

  bool is_zero() const { return terms.empty(); }
  SlElement& operator+=(const SlElement& o) {
    for (const auto& [m, c] : o.terms) accumulate(terms, m, c);
    return *this;
  }
  SlElement& operator-=(const SlElement& o) {
    for (const auto& [m, c] : o.terms) accumulate(terms, m, F(-c));
    return *this;
  }
  friend SlElement operator+(SlElement a, const SlElement& b) { return a += b; }
  friend SlElement operator-(SlElement a, const SlElement& b) { return a -= b; }
  SlElement scaled(const F& s) const {
    SlElement r;
    if (!FieldTraits<F>::is_zero(s))
      for (const auto& [m, c] : terms) r.terms.emplace_hint(r.terms.end(), m, c * s);
    return r;
  }
  friend bool operator==(const SlElement& a, const SlElement& b) { return a.terms == b.terms; }
};

enum class Leg { Mq, Glq, Slq, D, K };

const char* leg_name(Leg l);

using LegKey = std::array<Monomial, 3>;

struct LegKeyOrder {
  bool operator()(const LegKey& a, const LegKey& b) const {
    MonomialOrder o;
    for (std::size_t i = 0; i < 3; ++i) {
      if (o(a[i], b[i])) return true;
      if (o(b[i], a[i])) return false;
    }
    return false;
  }
};

/// Finite sum of pure tensors with 2 or 3 legs. Each leg carries its
/// algebra tag; Glq legs share one det_q power per leg across all terms.
template <class F>
struct Tensor {
  std::vector<Leg> legs;
  std::vector<int> detpow;
  std::map<LegKey, F, LegKeyOrder> terms;

  Tensor() = default;
  explicit Tensor(std::vector<Leg> l) : legs(std::move(l)), detpow(legs.size(), 0) {}

  std::size_t arity() const { return legs.size(); }
  bool is_zero() const { return terms.empty(); }
  void add_term(const LegKey& k, const F& c) {
    if (FieldTraits<F>::is_zero(c)) return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (FieldTraits<F>::is_zero(it->second)) terms.erase(it);
    }
  }
};

enum class Coaction { Alpha, Beta };

/// O(GL_q) and, for N = 2, O(SL_q), with the Hopf structure and the
/// adjoint coactions. Wraps an MqAlgebra and adds memo tables of its own;
/// like MqAlgebra it is single-threaded.
template <class F>
class QuantumGroup {
 public:
  using Mq = MqElement<F>;
  using Glq = GlqElement<F>;
  using Sl = SlElement<F>;
  using Diag = Laurent<F>;
  using T = Tensor<F>;

  QuantumGroup(int n, F q);

  MqAlgebra<F>& mq() { return mq_; }
  int n() const { return mq_.n(); }
  const F& q() const { return mq_.q(); }

  // O(GL_q) arithmetic.
  Glq gl(const Mq& a) const { return Glq{a, 0}; }
  Glq det_inverse() const { return Glq{mq_.one(), 1}; }
  const Mq& det_power(int k);
  /// Same element written with det_q^(-d), d >= a.detpow.
  Glq raise(const Glq& a, int d);
  Glq mul(const Glq& a, const Glq& b);
  Glq add(const Glq& a, const Glq& b);
  Glq sub(const Glq& a, const Glq& b);
  Glq scaled(const Glq& a, const F& s) const { return Glq{a.num.scaled(s), a.detpow}; }
  /// Cross-multiplication test a.num det^{b.k} == b.num det^{a.k}.
  bool equal(const Glq& a, const Glq& b);

  // Hopf structure.
  T comultiply(const Glq& x);
  T comultiply(const Mq& x);
  Glq antipode(const Glq& x);
  F counit(const Glq& x);
  F counit(const Mq& x);
  /// Numerator of S(x_ik): (-q)^{i-k} [comp(k) | comp(i)].
  const Mq& antipode_numerator(int i, int k);

  T coaction(const Mq& f, Coaction which);
  T coaction_beta(const Mq& f) { return coaction(f, Coaction::Beta); }
  T coaction_alpha(const Mq& f) { return coaction(f, Coaction::Alpha); }
  bool is_coinvariant(const Mq& f, Coaction which);

  // Projections and the diagonal coaction.
  Diag project_diag(const Glq& x);
  Sl project_sl(const Glq& x);
  Sl project_sl(const Mq& x) { return project_sl(gl(x)); }
  Diag project_k(const Sl& x) const;
  T lambda_D(const Glq& x);
  bool is_diag_coinvariant(const Glq& x);

  // O(SL_q), N = 2.
  Sl sl_mul(const Sl& a, const Sl& b);
  Sl sl_pow(const Sl& a, int k);
  Sl sl_gen(int i, int j) const;
  Sl sl_one() const;
  /// Right K-weight of a reduced SL monomial: a, c count +1 and b, d count -1.
  static int sl_weight(const Monomial& m) { return m[0] - m[1] + m[2] - m[3]; }

  // Tensors.
  /// Brings every Glq leg of both tensors to a common det_q power.
  void align(T& a, T& b);
  T tensor_add(T a, T b);
  T tensor_scaled(const T& a, const F& s) const;
  T tensor_mul(const T& a, const T& b);
  bool tensor_equal(T a, T b);
  /// x (x) 1 style pure tensor from per-leg elements given as term maps.
  T pure(const std::vector<Leg>& legs, const std::vector<int>& detpow, const std::vector<Terms<F>>& factors);
  /// Applies Delta to leg `leg` (an Mq or Glq leg), producing one more leg.
  T comultiply_leg(const T& t, std::size_t leg);
  /// Applies a coaction to leg 0 (an Mq leg) of a tensor.
  T coaction_leg0(const T& t, Coaction which);
  /// Multiplies legs `leg` and `leg+1` together (both Mq/Glq).
  T multiply_legs(const T& t, std::size_t leg);

  std::string to_string(const Glq& x);
  std::string to_string(const Sl& x);
  std::string to_string(const Diag& x) const;
  std::string to_string(const T& t);
  std::string leg_monomial_string(Leg l, const Monomial& m) const;

 private:
  const Terms<F>& sl_reduce_monomial(const Monomial& m);
  Sl sl_reduce(const Mq& x);
  const std::vector<std::pair<LegKey, F>>& comultiply_monomial(const Monomial& m);
  const Mq& antipode_monomial(const Monomial& m);
  Terms<F> leg_product(Leg l, const Monomial& a, const Monomial& b);
  void raise_leg(T& t, std::size_t leg, int d);
  void require_sl() const;

  MqAlgebra<F> mq_;
  std::deque<Mq> det_powers_;
  std::map<std::pair<int, int>, Mq> antipode_gen_;
  std::unordered_map<Monomial, Mq, MonomialHash> antipode_mono_;
  std::unordered_map<Monomial, std::vector<std::pair<LegKey, F>>, MonomialHash> delta_memo_;
  std::unordered_map<Monomial, Terms<F>, MonomialHash> sl_memo_;
};

extern template class QuantumGroup<Rational>;
extern template class QuantumGroup<RatFunc>;

}  // namespace qadj
