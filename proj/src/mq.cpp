#include "qadj/mq.hpp"

#include <algorithm>
#include <numeric>

namespace qadj {

template <class F>
MqElement<F>& MqElement<F>::operator+=(const MqElement& o) {
  if (n != o.n) throw SizeMismatch("add: matrix sizes differ");
  for (const auto& [m, c] : o.terms) accumulate(terms, m, c);
  return *this;
}

template <class F>
MqElement<F>& MqElement<F>::operator-=(const MqElement& o) {
  if (n != o.n) throw SizeMismatch("sub: matrix sizes differ");
  for (const auto& [m, c] : o.terms) accumulate(terms, m, F(-c));
  return *this;
}

template <class F>
MqElement<F> MqElement<F>::scaled(const F& s) const {
  MqElement r(n);
  if (FieldTraits<F>::is_zero(s)) return r;
  for (const auto& [m, c] : terms) r.terms.emplace_hint(r.terms.end(), m, c * s);
  return r;
}

template <class F>
F MqElement<F>::constant_term() const {
  auto it = terms.find(Monomial());
  return it == terms.end() ? F(0) : it->second;
}

MultiDegree multidegree_of(const Monomial& m, int n) {
  MultiDegree d{std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int k = 0; k < n * n; ++k) {
    if (m[k] == 0) continue;
    d.rowdeg[static_cast<std::size_t>(gen_row(k, n) - 1)] += m[k];
    d.coldeg[static_cast<std::size_t>(gen_col(k, n) - 1)] += m[k];
  }
  return d;
}

template <class F>
F signed_q_pow(const F& q, int k) {
  F r = q.pow(k);
  return (k % 2 != 0) ? F(-r) : r;
}

template <class F>
MqAlgebra<F>::MqAlgebra(int n, F q) : n_(n), q_(std::move(q)) {
  if (n < 1 || n > kMaxN) throw SizeMismatch("matrix size must be between 1 and " + std::to_string(kMaxN));
  if (FieldTraits<F>::is_zero(q_)) throw DivisionByZero();
  qinv_ = F(1) / q_;
  qdiff_ = q_ - qinv_;
}

template <class F>
F MqAlgebra<F>::q_pow(int k) const {
  return q_.pow(k);
}

template <class F>
MqElement<F> MqAlgebra<F>::scalar(const F& c) const {
  Element e(n_);
  if (!FieldTraits<F>::is_zero(c)) e.terms.emplace(Monomial(), c);
  return e;
}

template <class F>
MqElement<F> MqAlgebra<F>::gen(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw SizeMismatch("generator index out of range");
  return monomial(Monomial::var(gen_index(i, j, n_)));
}

template <class F>
MqElement<F> MqAlgebra<F>::monomial(const Monomial& m, const F& c) const {
  Element e(n_);
  if (!FieldTraits<F>::is_zero(c)) e.terms.emplace(m, c);
  return e;
}

template <class F>
void MqAlgebra<F>::check_size(const Element& a) const {
  if (a.n != n_) throw SizeMismatch("element size " + std::to_string(a.n) + " used in algebra of size " + std::to_string(n_));
}

// m * x_g in normal form. Write m = m' * x_h with x_h its largest letter.
// If g >= h the product is already ordered. Otherwise x_h x_g is rewritten
// by the defining relations into terms whose letters are all < x_h, so
// after multiplying m' by those letters x_h can be appended directly.
template <class F>
const Terms<F>& MqAlgebra<F>::mul_mono_gen(Monomial m, int g) {
  Key key{m, g};
  if (auto it = gen_memo_.find(key); it != gen_memo_.end()) return it->second;

  Terms<F> out;
  const int h = m.last_var();
  if (h <= g) {
    Monomial r = m;
    r.add(g, 1);
    out.emplace(r, F(1));
  } else {
    Monomial mp = m;
    mp.add(h, -1);
    const int i = gen_row(g, n_), j = gen_col(g, n_);
    const int k = gen_row(h, n_), l = gen_col(h, n_);
    F c1(1);
    bool cross = false;
    if (i == k || j == l) {
      c1 = qinv_;
    } else if (j < l) {
      cross = true;
    }
    const Terms<F>& t1 = mul_mono_gen(mp, g);
    for (const auto& [mono, c] : t1) {
      Monomial r = mono;
      r.add(h, 1);
      accumulate(out, r, F(c * c1));
    }
    if (cross) {
      // x_kl x_ij = x_ij x_kl - (q - q^-1) x_il x_kj
      const Terms<F>& t2 = mul_mono_gen(mp, gen_index(i, l, n_));
      const int kj = gen_index(k, j, n_);
      for (const auto& [mono, c] : t2) {
        const Terms<F>& t3 = mul_mono_gen(mono, kj);
        const F cc = c * qdiff_;
        for (const auto& [m3, c3] : t3) accumulate(out, m3, F(-(cc * c3)));
      }
    }
  }
  return gen_memo_.emplace(key, std::move(out)).first->second;
}

template <class F>
void MqAlgebra<F>::mul_terms_gen(const Terms<F>& in, int g, Terms<F>& out) {
  out.clear();
  for (const auto& [m, c] : in) {
    const Terms<F>& t = mul_mono_gen(m, g);
    for (const auto& [m2, c2] : t) accumulate(out, m2, F(c * c2));
  }
}

template <class F>
const Terms<F>& MqAlgebra<F>::mul_monomials(const Monomial& a, const Monomial& b) {
  auto key = std::make_pair(a, b);
  if (auto it = mono_memo_.find(key); it != mono_memo_.end()) return it->second;
  Terms<F> cur, next;
  cur.emplace(a, F(1));
  for (int g : letters(b)) {
    mul_terms_gen(cur, g, next);
    std::swap(cur, next);
  }
  return mono_memo_.emplace(key, std::move(cur)).first->second;
}

template <class F>
MqElement<F> MqAlgebra<F>::normal_form(const std::vector<std::pair<int, int>>& word, const F& c) {
  Terms<F> cur, next;
  if (!FieldTraits<F>::is_zero(c)) cur.emplace(Monomial(), c);
  for (auto [i, j] : word) {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw SizeMismatch("generator index out of range");
    mul_terms_gen(cur, gen_index(i, j, n_), next);
    std::swap(cur, next);
  }
  return Element(n_, std::move(cur));
}

template <class F>
MqElement<F> MqAlgebra<F>::mul(const Element& a, const Element& b) {
  check_size(a);
  check_size(b);
  Element r(n_);
  for (const auto& [mb, cb] : b.terms)
    for (const auto& [ma, ca] : a.terms) {
      const F c = ca * cb;
      for (const auto& [m, cm] : mul_monomials(ma, mb)) accumulate(r.terms, m, F(c * cm));
    }
  return r;
}

template <class F>
MqElement<F> MqAlgebra<F>::pow(const Element& a, int k) {
  Element r = one();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

template <class F>
const MqElement<F>& MqAlgebra<F>::quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw SizeMismatch("quantum minor needs equally many rows and columns");
  unsigned rm = 0, cm = 0;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (rows[t] < 1 || rows[t] > n_ || cols[t] < 1 || cols[t] > n_) throw SizeMismatch("minor index out of range");
    if (t > 0 && (rows[t] <= rows[t - 1] || cols[t] <= cols[t - 1]))
      throw SizeMismatch("minor indices must be strictly increasing");
    rm |= 1u << rows[t];
    cm |= 1u << cols[t];
  }
  auto key = std::make_pair(rm, cm);
  if (auto it = minors_.find(key); it != minors_.end()) return it->second;

  const int t = static_cast<int>(rows.size());
  std::vector<int> perm(static_cast<std::size_t>(t));
  std::iota(perm.begin(), perm.end(), 0);
  Element sum(n_);
  do {
    int inv = 0;
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inv;
    std::vector<std::pair<int, int>> word;
    for (int a = 0; a < t; ++a)
      word.emplace_back(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]);
    sum += normal_form(word, signed_q_pow(q_, inv));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return minors_.emplace(key, std::move(sum)).first->second;
}

template <class F>
const MqElement<F>& MqAlgebra<F>::det() {
  std::vector<int> all(static_cast<std::size_t>(n_));
  std::iota(all.begin(), all.end(), 1);
  return quantum_minor(all, all);
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

template <class F>
MqElement<F> MqAlgebra<F>::sigma(int i) {
  if (i < 1 || i > n_) throw SizeMismatch("sigma index out of range");
  Element s(n_);
  for (const auto& set : subsets_of_size(n_, i)) s += quantum_minor(set, set);
  return s;
}

template <class F>
MqElement<F> MqAlgebra<F>::tau(int i) {
  if (i < 1 || i > n_) throw SizeMismatch("tau index out of range");
  Element s(n_);
  for (const auto& set : subsets_of_size(n_, i)) {
    const int w = std::accumulate(set.begin(), set.end(), 0);
    s += quantum_minor(set, set).scaled(q_pow(-2 * w));
  }
  return s;
}

template <class F>
std::vector<Monomial> MqAlgebra<F>::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  const int vars = n_ * n_;
  Monomial cur;
  // Larger exponents on earlier variables come first.
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == vars - 1) {
      Monomial m = cur;
      m.add(k, left);
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.add(k, e);
      self(self, k + 1, left - e);
      cur.add(k, -e);
    }
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

template <class F>
std::vector<Monomial> MqAlgebra<F>::monomial_basis(int d) const {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

template <class F>
MultiDegree MqAlgebra<F>::multidegree(const Element& a) const {
  check_size(a);
  if (a.is_zero()) throw NotMultihomogeneous("zero element has no multidegree");
  MultiDegree d = multidegree_of(a.terms.begin()->first, n_);
  for (const auto& [m, c] : a.terms)
    if (!(multidegree_of(m, n_) == d)) throw NotMultihomogeneous("terms have different multidegrees");
  return d;
}

template <class F>
std::string MqAlgebra<F>::monomial_string(const Monomial& m) const {
  std::string s;
  for (int k = 0; k < n_ * n_; ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(gen_row(k, n_)) + std::to_string(gen_col(k, n_));
    if (m[k] != 1) s += "^" + std::to_string(m[k]);
  }
  return s.empty() ? "1" : s;
}

namespace {

bool is_atomic(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-' || s[i] == '/') return false;
  return true;
}

}  // namespace

/// Joins "coefficient*monomial" terms, coefficients in parentheses unless atomic.
template <class F>
std::string render_terms(const Terms<F>& terms, const std::function<std::string(const Monomial&)>& mono) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string cs = FieldTraits<F>::str(c);
    std::string ms = mono(m);
    std::string term;
    if (ms == "1") {
      term = is_atomic(cs) ? cs : "(" + cs + ")";
    } else if (cs == "1") {
      term = ms;
    } else if (cs == "-1") {
      term = "-" + ms;
    } else {
      term = (is_atomic(cs) ? cs : "(" + cs + ")") + "*" + ms;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

template <class F>
std::string MqAlgebra<F>::to_string(const Element& a) const {
  return render_terms<F>(a.terms, [this](const Monomial& m) { return monomial_string(m); });
}

template std::string render_terms<Rational>(const Terms<Rational>&, const std::function<std::string(const Monomial&)>&);
template std::string render_terms<RatFunc>(const Terms<RatFunc>&, const std::function<std::string(const Monomial&)>&);
template Rational signed_q_pow<Rational>(const Rational&, int);
template RatFunc signed_q_pow<RatFunc>(const RatFunc&, int);
template struct MqElement<Rational>;
template struct MqElement<RatFunc>;
template class MqAlgebra<Rational>;
template class MqAlgebra<RatFunc>;

}  // namespace qadj
