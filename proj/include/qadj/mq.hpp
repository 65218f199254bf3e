#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qadj/field.hpp"
#include "qadj/monomial.hpp"

namespace qadj {

template <class F>
using Terms = std::map<Monomial, F, MonomialOrder>;

/// Adds c*m to t, erasing the entry if it cancels.
template <class F>
void accumulate(Terms<F>& t, const Monomial& m, const F& c) {
  if (FieldTraits<F>::is_zero(c)) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (FieldTraits<F>::is_zero(it->second)) t.erase(it);
  }
}

/// Element of O(M_q) in PBW normal form: a combination of ordered monomials
/// in x11 < x12 < ... < xNN with no zero coefficients stored.
template <class F>
struct MqElement {
  int n = 0;
  Terms<F> terms;

  MqElement() = default;
  explicit MqElement(int size) : n(size) {}
  MqElement(int size, Terms<F> t) : n(size), terms(std::move(t)) {}

  bool is_zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? -1 : terms.rbegin()->first.degree(); }

  MqElement& operator+=(const MqElement& o);
  MqElement& operator-=(const MqElement& o);
  friend MqElement operator+(MqElement a, const MqElement& b) { return a += b; }
  friend MqElement operator-(MqElement a, const MqElement& b) { return a -= b; }
  MqElement operator-() const { return scaled(F(-1)); }
  MqElement scaled(const F& s) const;

  /// Coefficient of the constant monomial.
  F constant_term() const;

  friend bool operator==(const MqElement& a, const MqElement& b) {
    return a.n == b.n && a.terms == b.terms;
  }
};

struct MultiDegree {
  std::vector<int> rowdeg;
  std::vector<int> coldeg;
  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
};

MultiDegree multidegree_of(const Monomial& m, int n);

/// The quantum matrix algebra O(M_q) of size N over the field F, with q a
/// fixed element of F. Holds memo tables for the rewriting, so it is not
/// safe to use one instance from several threads at once.
template <class F>
class MqAlgebra {
 public:
  using Element = MqElement<F>;

  MqAlgebra(int n, F q);

  int n() const { return n_; }
  const F& q() const { return q_; }
  F q_pow(int k) const;

  Element zero() const { return Element(n_); }
  Element one() const { return scalar(F(1)); }
  Element scalar(const F& c) const;
  /// Generator x_ij, 1-based.
  Element gen(int i, int j) const;
  Element monomial(const Monomial& m, const F& c = F(1)) const;

  /// Normal form of c * x_{w1} x_{w2} ... (generator indices as (i,j) pairs).
  Element normal_form(const std::vector<std::pair<int, int>>& word, const F& c = F(1));
  Element mul(const Element& a, const Element& b);
  Element pow(const Element& a, int k);
  /// Ordered product of monomials.
  const Terms<F>& mul_monomials(const Monomial& a, const Monomial& b);

  /// [I|J], rows and columns 1-based and increasing.
  const Element& quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols);
  const Element& det();
  Element sigma(int i);
  Element tau(int i);

  /// All ordered monomials of total degree <= d, by degree then lex.
  std::vector<Monomial> monomial_basis(int d) const;
  std::vector<Monomial> monomials_of_degree(int d) const;

  /// Common multidegree of all terms; throws NotMultihomogeneous.
  MultiDegree multidegree(const Element& a) const;

  std::string to_string(const Element& a) const;
  std::string monomial_string(const Monomial& m) const;

  void check_size(const Element& a) const;

  /// m * x_g in normal form (g a 0-based generator index).
  const Terms<F>& mul_mono_gen(Monomial m, int g);

 private:
  void mul_terms_gen(const Terms<F>& in, int g, Terms<F>& out);

  int n_;
  F q_, qinv_, qdiff_;

  struct Key {
    Monomial m;
    int g;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return MonomialHash{}(k.m) * 31 + static_cast<std::size_t>(k.g); }
  };
  struct PairHash {
    std::size_t operator()(const std::pair<Monomial, Monomial>& k) const {
      return MonomialHash{}(k.first) * 1000003ULL ^ MonomialHash{}(k.second);
    }
  };
  std::unordered_map<Key, Terms<F>, KeyHash> gen_memo_;
  std::unordered_map<std::pair<Monomial, Monomial>, Terms<F>, PairHash> mono_memo_;
  std::map<std::pair<unsigned, unsigned>, Element> minors_;
};

/// Renders a term map as "c*m + ..." with coefficients parenthesized when compound.
template <class F>
std::string render_terms(const Terms<F>& terms, const std::function<std::string(const Monomial&)>& mono);

/// Powers of -q and similar signs used by determinant-like sums.
template <class F>
F signed_q_pow(const F& q, int k);

extern template class MqAlgebra<Rational>;
extern template class MqAlgebra<RatFunc>;
extern template struct MqElement<Rational>;
extern template struct MqElement<RatFunc>;

}  // namespace qadj
