#include "qadj/hopf.hpp"

#include <algorithm>
#include <numeric>

namespace qadj {

const char* leg_name(Leg l) {
  switch (l) {
    case Leg::Mq: return "O(M_q)";
    case Leg::Glq: return "O(GL_q)";
    case Leg::Slq: return "O(SL_q)";
    case Leg::D: return "O(D)";
    case Leg::K: return "O(K)";
  }
  return "?";
}

namespace {

bool is_gl_like(Leg l) { return l == Leg::Mq || l == Leg::Glq; }

std::vector<int> complement(int n, int skip) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

}  // namespace

template <class F>
QuantumGroup<F>::QuantumGroup(int n, F q) : mq_(n, std::move(q)) {
  det_powers_.push_back(mq_.one());
}

template <class F>
void QuantumGroup<F>::require_sl() const {
  if (n() != 2) throw SizeMismatch("O(SL_q) is implemented for N = 2 only");
}

template <class F>
const MqElement<F>& QuantumGroup<F>::det_power(int k) {
  if (k < 0) throw InternalError("negative det power");
  while (static_cast<int>(det_powers_.size()) <= k) det_powers_.push_back(mq_.mul(det_powers_.back(), mq_.det()));
  return det_powers_[static_cast<std::size_t>(k)];
}

template <class F>
GlqElement<F> QuantumGroup<F>::raise(const Glq& a, int d) {
  if (d < a.detpow) throw InternalError("cannot lower a det power");
  if (d == a.detpow) return a;
  return Glq{mq_.mul(a.num, det_power(d - a.detpow)), d};
}

template <class F>
GlqElement<F> QuantumGroup<F>::mul(const Glq& a, const Glq& b) {
  return Glq{mq_.mul(a.num, b.num), a.detpow + b.detpow};
}

template <class F>
GlqElement<F> QuantumGroup<F>::add(const Glq& a, const Glq& b) {
  const int d = std::max(a.detpow, b.detpow);
  Glq r = raise(a, d);
  r.num += raise(b, d).num;
  return r;
}

template <class F>
GlqElement<F> QuantumGroup<F>::sub(const Glq& a, const Glq& b) {
  return add(a, scaled(b, F(-1)));
}

template <class F>
bool QuantumGroup<F>::equal(const Glq& a, const Glq& b) {
  if (a.detpow == b.detpow) return a.num == b.num;
  return mq_.mul(a.num, det_power(b.detpow)) == mq_.mul(b.num, det_power(a.detpow));
}

// ---------------------------------------------------------------------------
// Comultiplication, counit, antipode.

template <class F>
const std::vector<std::pair<LegKey, F>>& QuantumGroup<F>::comultiply_monomial(const Monomial& m) {
  if (auto it = delta_memo_.find(m); it != delta_memo_.end()) return it->second;
  std::map<LegKey, F, LegKeyOrder> acc;
  if (m.is_one()) {
    acc.emplace(LegKey{}, F(1));
  } else {
    const int g = m.last_var();
    Monomial rest = m;
    rest.add(g, -1);
    const int nn = n();
    const int i = gen_row(g, nn), j = gen_col(g, nn);
    const auto& prev = comultiply_monomial(rest);
    for (const auto& [key, c] : prev) {
      for (int k = 1; k <= nn; ++k) {
        const Terms<F>& left = mq_.mul_mono_gen(key[0], gen_index(i, k, nn));
        const Terms<F>& right = mq_.mul_mono_gen(key[1], gen_index(k, j, nn));
        for (const auto& [u, cu] : left)
          for (const auto& [v, cv] : right) {
            const F coef = c * cu * cv;
            if (FieldTraits<F>::is_zero(coef)) continue;
            auto [it, inserted] = acc.try_emplace(LegKey{u, v, Monomial()}, coef);
            if (!inserted) {
              it->second += coef;
              if (FieldTraits<F>::is_zero(it->second)) acc.erase(it);
            }
          }
      }
    }
  }
  std::vector<std::pair<LegKey, F>> out(acc.begin(), acc.end());
  return delta_memo_.emplace(m, std::move(out)).first->second;
}

template <class F>
Tensor<F> QuantumGroup<F>::comultiply(const Mq& x) {
  mq_.check_size(x);
  T t({Leg::Mq, Leg::Mq});
  for (const auto& [m, c] : x.terms)
    for (const auto& [key, cd] : comultiply_monomial(m)) t.add_term(key, F(c * cd));
  return t;
}

template <class F>
Tensor<F> QuantumGroup<F>::comultiply(const Glq& x) {
  T t = comultiply(x.num);
  t.legs = {Leg::Glq, Leg::Glq};
  t.detpow = {x.detpow, x.detpow};
  return t;
}

template <class F>
F QuantumGroup<F>::counit(const Mq& x) {
  mq_.check_size(x);
  F sum(0);
  const int nn = n();
  for (const auto& [m, c] : x.terms) {
    bool diagonal = true;
    for (int k = 0; k < nn * nn && diagonal; ++k)
      if (m[k] != 0 && gen_row(k, nn) != gen_col(k, nn)) diagonal = false;
    if (diagonal) sum += c;
  }
  return sum;
}

template <class F>
F QuantumGroup<F>::counit(const Glq& x) {
  return counit(x.num);
}

template <class F>
const MqElement<F>& QuantumGroup<F>::antipode_numerator(int i, int k) {
  auto key = std::make_pair(i, k);
  if (auto it = antipode_gen_.find(key); it != antipode_gen_.end()) return it->second;
  const Mq& minor = mq_.quantum_minor(complement(n(), k), complement(n(), i));
  return antipode_gen_.emplace(key, minor.scaled(signed_q_pow(q(), i - k))).first->second;
}

// S(m' x_g) = S(x_g) S(m'), and det_q^-1 is central, so the numerator of
// S(m) is antipode_numerator(g) times the numerator of S(m').
template <class F>
const MqElement<F>& QuantumGroup<F>::antipode_monomial(const Monomial& m) {
  if (auto it = antipode_mono_.find(m); it != antipode_mono_.end()) return it->second;
  Mq out = mq_.one();
  if (!m.is_one()) {
    const int g = m.last_var();
    Monomial rest = m;
    rest.add(g, -1);
    const Mq& tail = antipode_monomial(rest);
    out = mq_.mul(antipode_numerator(gen_row(g, n()), gen_col(g, n())), tail);
  }
  return antipode_mono_.emplace(m, std::move(out)).first->second;
}

template <class F>
GlqElement<F> QuantumGroup<F>::antipode(const Glq& x) {
  mq_.check_size(x.num);
  const int d = x.num.degree() < 0 ? 0 : x.num.degree();
  Mq num = mq_.zero();
  for (const auto& [m, c] : x.num.terms) {
    Mq part = antipode_monomial(m).scaled(c);
    if (m.degree() < d) part = mq_.mul(part, det_power(d - m.degree()));
    num += part;
  }
  // S(det_q^-k) = det_q^k.
  if (x.detpow > 0) num = mq_.mul(num, det_power(x.detpow));
  return Glq{num, d};
}

// ---------------------------------------------------------------------------
// Adjoint coactions. For a monomial with letters x_{i_t j_t}, summing the
// middle and last indices of the second iterated coproduct gives
//   beta(w)  = sum_k (1 (x) S(x_{i_n k_n})...S(x_{i_1 k_1})) Delta(x_{k_1 j_1}...x_{k_n j_n})
//   alpha(w) = sum_k Delta(x_{k_1 j_1}...x_{k_n j_n}) (1 (x) S(x_{i_n k_n})...S(x_{i_1 k_1})).

template <class F>
Tensor<F> QuantumGroup<F>::coaction(const Mq& f, Coaction which) {
  mq_.check_size(f);
  const int nn = n();
  const int dmax = std::max(0, f.degree());
  T out({Leg::Mq, Leg::Glq});
  out.detpow = {0, dmax};

  for (const auto& [w, cw] : f.terms) {
    const std::vector<int> lt = letters(w);
    const int len = static_cast<int>(lt.size());
    const Mq& pad = det_power(dmax - len);
    std::vector<int> ks(static_cast<std::size_t>(len), 1);
    for (;;) {
      Mq p = mq_.one();
      std::vector<std::pair<int, int>> word;
      for (int t = 0; t < len; ++t) {
        const int g = lt[static_cast<std::size_t>(t)];
        const int k = ks[static_cast<std::size_t>(t)];
        p = mq_.mul(antipode_numerator(gen_row(g, nn), k), p);
        word.emplace_back(k, gen_col(g, nn));
      }
      if (dmax > len) p = mq_.mul(p, pad);
      const Mq inner = mq_.normal_form(word, cw);
      for (const auto& [m, cm] : inner.terms) {
        for (const auto& [key, cd] : comultiply_monomial(m)) {
          const Mq v = mq_.monomial(key[1], F(cm * cd));
          const Mq prod = which == Coaction::Beta ? mq_.mul(p, v) : mq_.mul(v, p);
          for (const auto& [pm, pc] : prod.terms) out.add_term(LegKey{key[0], pm, Monomial()}, pc);
        }
      }
      int t = 0;
      while (t < len && ks[static_cast<std::size_t>(t)] == nn) ks[static_cast<std::size_t>(t++)] = 1;
      if (t == len) break;
      ++ks[static_cast<std::size_t>(t)];
    }
  }
  return out;
}

template <class F>
bool QuantumGroup<F>::is_coinvariant(const Mq& f, Coaction which) {
  T lhs = coaction(f, which);
  T rhs = pure({Leg::Mq, Leg::Glq}, {0, 0}, {f.terms, mq_.one().terms});
  return tensor_equal(std::move(lhs), std::move(rhs));
}

// ---------------------------------------------------------------------------
// Projections.

template <class F>
Laurent<F> QuantumGroup<F>::project_diag(const Glq& x) {
  const int nn = n();
  Diag out{nn, {}};
  for (const auto& [m, c] : x.num.terms) {
    Monomial t;
    bool diagonal = true;
    for (int k = 0; k < nn * nn && diagonal; ++k) {
      if (m[k] == 0) continue;
      if (gen_row(k, nn) != gen_col(k, nn)) diagonal = false;
      else t.add(gen_row(k, nn) - 1, m[k]);
    }
    if (!diagonal) continue;
    for (int i = 0; i < nn; ++i) t.add(i, -x.detpow);
    accumulate(out.terms, t, c);
  }
  return out;
}

// a^i b^j c^k d^n with i, n > 0: a b^j c^k = q^{j+k} b^j c^k a and
// a d = det_q + q b c = 1 + q b c.
template <class F>
const Terms<F>& QuantumGroup<F>::sl_reduce_monomial(const Monomial& m) {
  if (auto it = sl_memo_.find(m); it != sl_memo_.end()) return it->second;
  Terms<F> out;
  if (m[0] == 0 || m[3] == 0) {
    out.emplace(m, F(1));
  } else {
    Monomial m1 = m;
    m1.add(0, -1);
    m1.add(3, -1);
    Monomial m2 = m1;
    m2.add(1, 1);
    m2.add(2, 1);
    const F s = mq_.q_pow(m[1] + m[2]);
    const Terms<F> t1 = sl_reduce_monomial(m1);
    const Terms<F> t2 = sl_reduce_monomial(m2);
    for (const auto& [u, c] : t1) accumulate(out, u, F(s * c));
    const F sq = s * q();
    for (const auto& [u, c] : t2) accumulate(out, u, F(sq * c));
  }
  return sl_memo_.emplace(m, std::move(out)).first->second;
}

template <class F>
SlElement<F> QuantumGroup<F>::sl_reduce(const Mq& x) {
  require_sl();
  Sl out;
  for (const auto& [m, c] : x.terms)
    for (const auto& [u, cu] : sl_reduce_monomial(m)) accumulate(out.terms, u, F(c * cu));
  return out;
}

template <class F>
SlElement<F> QuantumGroup<F>::project_sl(const Glq& x) {
  mq_.check_size(x.num);
  return sl_reduce(x.num);
}

template <class F>
Laurent<F> QuantumGroup<F>::project_k(const Sl& x) const {
  require_sl();
  Diag out{1, {}};
  for (const auto& [m, c] : x.terms) {
    if (m[1] != 0 || m[2] != 0) continue;
    accumulate(out.terms, Monomial::var(0, m[0] - m[3]), c);
  }
  return out;
}

template <class F>
SlElement<F> QuantumGroup<F>::sl_mul(const Sl& a, const Sl& b) {
  require_sl();
  Sl out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      const F c = ca * cb;
      for (const auto& [m, cm] : mq_.mul_monomials(ma, mb))
        for (const auto& [u, cu] : sl_reduce_monomial(m)) accumulate(out.terms, u, F(c * cm * cu));
    }
  return out;
}

template <class F>
SlElement<F> QuantumGroup<F>::sl_pow(const Sl& a, int k) {
  Sl r = sl_one();
  for (int i = 0; i < k; ++i) r = sl_mul(r, a);
  return r;
}

template <class F>
SlElement<F> QuantumGroup<F>::sl_gen(int i, int j) const {
  require_sl();
  Sl r;
  r.terms.emplace(Monomial::var(gen_index(i, j, 2)), F(1));
  return r;
}

template <class F>
SlElement<F> QuantumGroup<F>::sl_one() const {
  Sl r;
  r.terms.emplace(Monomial(), F(1));
  return r;
}

// lambda_D is the algebra map with lambda_D(x_ij) = sum_k pi_D(x_ik) (x) x_kj
// = t_i (x) x_ij, extended multiplicatively letter by letter.
template <class F>
Tensor<F> QuantumGroup<F>::lambda_D(const Glq& x) {
  const int nn = n();
  T out({Leg::D, Leg::Glq});
  out.detpow = {0, x.detpow};
  for (const auto& [m, c] : x.num.terms) {
    Terms<F> cur;
    cur.emplace(Monomial(), F(1));
    Monomial t;
    Terms<F> next;
    for (int g : letters(m)) {
      t.add(gen_row(g, nn) - 1, 1);
      next.clear();
      for (const auto& [u, cu] : cur)
        for (const auto& [v, cv] : mq_.mul_mono_gen(u, g)) accumulate(next, v, F(cu * cv));
      std::swap(cur, next);
    }
    for (int i = 0; i < nn; ++i) t.add(i, -x.detpow);
    for (const auto& [v, cv] : cur) out.add_term(LegKey{t, v, Monomial()}, F(c * cv));
  }
  return out;
}

template <class F>
bool QuantumGroup<F>::is_diag_coinvariant(const Glq& x) {
  T rhs({Leg::D, Leg::Glq});
  rhs.detpow = {0, x.detpow};
  for (const auto& [m, c] : x.num.terms) rhs.add_term(LegKey{Monomial(), m, Monomial()}, c);
  return tensor_equal(lambda_D(x), std::move(rhs));
}

// ---------------------------------------------------------------------------
// Tensors.

template <class F>
void QuantumGroup<F>::raise_leg(T& t, std::size_t leg, int d) {
  const int k = t.detpow[leg];
  if (d == k) return;
  if (d < k) throw InternalError("cannot lower a det power");
  if (t.legs[leg] != Leg::Glq) throw InternalError("det power on a non-GL leg");
  const Mq& pad = det_power(d - k);
  std::map<LegKey, F, LegKeyOrder> out;
  T r(t.legs);
  r.detpow = t.detpow;
  r.detpow[leg] = d;
  for (const auto& [key, c] : t.terms)
    for (const auto& [pm, pc] : pad.terms)
      for (const auto& [m, cm] : mq_.mul_monomials(key[leg], pm)) {
        LegKey nk = key;
        nk[leg] = m;
        r.add_term(nk, F(c * pc * cm));
      }
  t = std::move(r);
}

template <class F>
void QuantumGroup<F>::align(T& a, T& b) {
  if (a.legs != b.legs) throw SizeMismatch("tensor legs differ");
  for (std::size_t l = 0; l < a.arity(); ++l) {
    const int d = std::max(a.detpow[l], b.detpow[l]);
    raise_leg(a, l, d);
    raise_leg(b, l, d);
  }
}

template <class F>
Tensor<F> QuantumGroup<F>::tensor_add(T a, T b) {
  align(a, b);
  for (const auto& [k, c] : b.terms) a.add_term(k, c);
  return a;
}

template <class F>
Tensor<F> QuantumGroup<F>::tensor_scaled(const T& a, const F& s) const {
  T r(a.legs);
  r.detpow = a.detpow;
  for (const auto& [k, c] : a.terms) r.add_term(k, F(c * s));
  return r;
}

template <class F>
bool QuantumGroup<F>::tensor_equal(T a, T b) {
  align(a, b);
  return a.terms == b.terms;
}

template <class F>
Terms<F> QuantumGroup<F>::leg_product(Leg l, const Monomial& a, const Monomial& b) {
  switch (l) {
    case Leg::Mq:
    case Leg::Glq:
      return mq_.mul_monomials(a, b);
    case Leg::Slq: {
      Terms<F> out;
      for (const auto& [m, cm] : mq_.mul_monomials(a, b))
        for (const auto& [u, cu] : sl_reduce_monomial(m)) accumulate(out, u, F(cm * cu));
      return out;
    }
    case Leg::D:
    case Leg::K: {
      Terms<F> out;
      out.emplace(a * b, F(1));
      return out;
    }
  }
  throw InternalError("unknown leg");
}

template <class F>
Tensor<F> QuantumGroup<F>::tensor_mul(const T& a, const T& b) {
  if (a.legs != b.legs) throw SizeMismatch("tensor legs differ");
  T out(a.legs);
  for (std::size_t l = 0; l < a.arity(); ++l) out.detpow[l] = a.detpow[l] + b.detpow[l];
  const std::size_t ar = a.arity();
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      std::vector<Terms<F>> parts;
      for (std::size_t l = 0; l < ar; ++l) parts.push_back(leg_product(a.legs[l], ka[l], kb[l]));
      const F c = ca * cb;
      for (const auto& [m0, c0] : parts[0])
        for (const auto& [m1, c1] : parts[1]) {
          if (ar == 2) {
            out.add_term(LegKey{m0, m1, Monomial()}, F(c * c0 * c1));
            continue;
          }
          for (const auto& [m2, c2] : parts[2]) out.add_term(LegKey{m0, m1, m2}, F(c * c0 * c1 * c2));
        }
    }
  return out;
}

template <class F>
Tensor<F> QuantumGroup<F>::pure(const std::vector<Leg>& legs, const std::vector<int>& detpow,
                                const std::vector<Terms<F>>& factors) {
  if (legs.size() != factors.size() || legs.size() != detpow.size() || legs.size() < 2 || legs.size() > 3)
    throw SizeMismatch("pure tensor needs 2 or 3 legs");
  T out(legs);
  out.detpow = detpow;
  for (const auto& [m0, c0] : factors[0])
    for (const auto& [m1, c1] : factors[1]) {
      if (legs.size() == 2) {
        out.add_term(LegKey{m0, m1, Monomial()}, F(c0 * c1));
        continue;
      }
      for (const auto& [m2, c2] : factors[2]) out.add_term(LegKey{m0, m1, m2}, F(c0 * c1 * c2));
    }
  return out;
}

template <class F>
Tensor<F> QuantumGroup<F>::comultiply_leg(const T& t, std::size_t leg) {
  if (t.arity() != 2 || leg >= 2 || !is_gl_like(t.legs[leg])) throw SizeMismatch("comultiply_leg needs a 2-leg tensor and an M_q/GL_q leg");
  std::vector<Leg> legs = t.legs;
  std::vector<int> dp = t.detpow;
  legs.insert(legs.begin() + static_cast<long>(leg) + 1, t.legs[leg]);
  dp.insert(dp.begin() + static_cast<long>(leg) + 1, t.detpow[leg]);
  T out(legs);
  out.detpow = dp;
  for (const auto& [key, c] : t.terms)
    for (const auto& [dk, cd] : comultiply_monomial(key[leg])) {
      LegKey nk;
      if (leg == 0) nk = {dk[0], dk[1], key[1]};
      else nk = {key[0], dk[0], dk[1]};
      out.add_term(nk, F(c * cd));
    }
  return out;
}

template <class F>
Tensor<F> QuantumGroup<F>::coaction_leg0(const T& t, Coaction which) {
  if (t.arity() != 2 || t.legs[0] != Leg::Mq) throw SizeMismatch("coaction_leg0 needs a 2-leg tensor with an M_q first leg");
  int dmax = 0;
  for (const auto& [key, c] : t.terms) dmax = std::max(dmax, key[0].degree());
  T out({Leg::Mq, Leg::Glq, t.legs[1]});
  out.detpow = {0, dmax, t.detpow[1]};
  for (const auto& [key, c] : t.terms) {
    T part = coaction(mq_.monomial(key[0], c), which);
    raise_leg(part, 1, dmax);
    for (const auto& [pk, pc] : part.terms) out.add_term(LegKey{pk[0], pk[1], key[1]}, pc);
  }
  return out;
}

template <class F>
Tensor<F> QuantumGroup<F>::multiply_legs(const T& t, std::size_t leg) {
  if (leg + 1 >= t.arity() || !is_gl_like(t.legs[leg]) || !is_gl_like(t.legs[leg + 1]))
    throw SizeMismatch("multiply_legs needs adjacent M_q/GL_q legs");
  std::vector<Leg> legs = t.legs;
  std::vector<int> dp = t.detpow;
  const bool gl = legs[leg] == Leg::Glq || legs[leg + 1] == Leg::Glq;
  legs[leg] = gl ? Leg::Glq : Leg::Mq;
  dp[leg] += dp[leg + 1];
  legs.erase(legs.begin() + static_cast<long>(leg) + 1);
  dp.erase(dp.begin() + static_cast<long>(leg) + 1);
  if (legs.size() < 2) throw SizeMismatch("multiply_legs would leave a single leg");
  T out(legs);
  out.detpow = dp;
  for (const auto& [key, c] : t.terms)
    for (const auto& [m, cm] : mq_.mul_monomials(key[leg], key[leg + 1])) {
      LegKey nk;
      std::size_t o = 0;
      for (std::size_t l = 0; l < t.arity(); ++l) {
        if (l == leg) nk[o++] = m;
        else if (l != leg + 1) nk[o++] = key[l];
      }
      out.add_term(nk, F(c * cm));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering.

template <class F>
std::string QuantumGroup<F>::leg_monomial_string(Leg l, const Monomial& m) const {
  switch (l) {
    case Leg::Mq:
    case Leg::Glq:
      return mq_.monomial_string(m);
    case Leg::Slq: {
      static const char* names[] = {"a", "b", "c", "d"};
      std::string s;
      for (int k = 0; k < 4; ++k) {
        if (m[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[k];
        if (m[k] != 1) s += "^" + std::to_string(m[k]);
      }
      return s.empty() ? "1" : s;
    }
    case Leg::D: {
      std::string s;
      for (int k = 0; k < n(); ++k) {
        if (m[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(k + 1);
        if (m[k] != 1) s += "^" + std::to_string(m[k]);
      }
      return s.empty() ? "1" : s;
    }
    case Leg::K:
      if (m[0] == 0) return "1";
      return m[0] == 1 ? "z" : "z^" + std::to_string(m[0]);
  }
  return "?";
}

template <class F>
std::string QuantumGroup<F>::to_string(const Glq& x) {
  std::string s = mq_.to_string(x.num);
  if (x.detpow == 0) return s;
  return "(" + s + ")*det^-" + std::to_string(x.detpow);
}

template <class F>
std::string QuantumGroup<F>::to_string(const Sl& x) {
  return render_terms<F>(x.terms, [this](const Monomial& m) { return leg_monomial_string(Leg::Slq, m); });
}

template <class F>
std::string QuantumGroup<F>::to_string(const Diag& x) const {
  const Leg l = x.nvars == 1 && n() != 1 ? Leg::K : Leg::D;
  return render_terms<F>(x.terms, [this, l](const Monomial& m) { return leg_monomial_string(l, m); });
}

template <class F>
std::string QuantumGroup<F>::to_string(const T& t) {
  if (t.terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : t.terms) {
    std::string legs;
    for (std::size_t l = 0; l < t.arity(); ++l) {
      if (l > 0) legs += " ⊗ ";
      std::string m = leg_monomial_string(t.legs[l], key[l]);
      if (t.detpow[l] > 0) m = (m == "1" ? "" : m + "*") + "det^-" + std::to_string(t.detpow[l]);
      legs += m;
    }
    Terms<F> one;
    one.emplace(Monomial::var(0), c);
    std::string term = render_terms<F>(one, [&legs](const Monomial&) { return "(" + legs + ")"; });
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

template class QuantumGroup<Rational>;
template class QuantumGroup<RatFunc>;

}  // namespace qadj
