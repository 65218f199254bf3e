#include "qadj/coorbit.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qadj {

namespace {

template <class F>
using Support = std::vector<std::vector<std::pair<int, F>>>;

// Nonzero entries of xi, row by row (index 0 unused).
template <class F>
Support<F> support(const Point<F>& xi) {
  Support<F> s(static_cast<std::size_t>(xi.n + 1));
  for (int k = 1; k <= xi.n; ++k)
    for (int l = 1; l <= xi.n; ++l)
      if (!FieldTraits<F>::is_zero(xi(k, l))) s[static_cast<std::size_t>(k)].emplace_back(l, xi(k, l));
  return s;
}

// beta^xi(w) = sum_{k,l} prod_t xi_{k_t l_t} S(x_{i_n k_n})..S(x_{i_1 k_1}) x_{l_1 j_1}..x_{l_n j_n};
// alpha^xi puts the antipode factor on the right. Numerator over det_q^(-deg w).
template <class F>
void coorbit_monomial(QuantumGroup<F>& G, const Support<F>& sup, const std::vector<int>& lt, std::size_t t,
                      const F& coef, const MqElement<F>& p, std::vector<std::pair<int, int>>& word, Coaction which,
                      MqElement<F>& out) {
  auto& A = G.mq();
  const int n = G.n();
  if (t == lt.size()) {
    const MqElement<F> qw = A.normal_form(word, coef);
    out += which == Coaction::Beta ? A.mul(p, qw) : A.mul(qw, p);
    return;
  }
  const int g = lt[t];
  for (int k = 1; k <= n; ++k) {
    const auto& row = sup[static_cast<std::size_t>(k)];
    if (row.empty()) continue;
    const MqElement<F> pk = A.mul(G.antipode_numerator(gen_row(g, n), k), p);
    for (const auto& [l, v] : row) {
      word.emplace_back(l, gen_col(g, n));
      coorbit_monomial(G, sup, lt, t + 1, F(coef * v), pk, word, which, out);
      word.pop_back();
    }
  }
}

template <class F>
MqElement<F> coorbit_numerator(QuantumGroup<F>& G, const Support<F>& sup, const Monomial& w, Coaction which) {
  MqElement<F> out = G.mq().zero();
  std::vector<std::pair<int, int>> word;
  coorbit_monomial(G, sup, letters(w), 0, F(1), G.mq().one(), word, which, out);
  return out;
}

std::vector<int> domain_weight(const Monomial& m, int n) {
  MultiDegree d = multidegree_of(m, n);
  std::vector<int> w(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = d.coldeg[i] - d.rowdeg[i];
  return w;
}

template <class F>
Matrix<F> zero_matrix(Eigen::Index r, Eigen::Index c) {
  Matrix<F> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = F(0);
  return m;
}

// Images of every monomial of degree <= d over det_q^(-d), grouped by the
// weight of the source monomial. The map preserves that weight, so each
// block can be reduced on its own.
template <class F>
struct Blocks {
  std::vector<Monomial> domain;
  std::map<std::vector<int>, std::vector<std::size_t>> members;
  std::vector<MqElement<F>> images;
};

template <class F>
Blocks<F> image_blocks(QuantumGroup<F>& G, const Point<F>& xi, Coaction which, int d) {
  if (xi.n != G.n()) throw SizeMismatch("point and algebra sizes differ");
  if (d < 0) throw Error("degree bound must be nonnegative");
  Blocks<F> b;
  b.domain = G.mq().monomial_basis(d);
  const Support<F> sup = support(xi);
  for (std::size_t i = 0; i < b.domain.size(); ++i) {
    const Monomial& m = b.domain[i];
    MqElement<F> img = coorbit_numerator(G, sup, m, which);
    if (m.degree() < d) img = G.mq().mul(img, G.det_power(d - m.degree()));
    b.images.push_back(std::move(img));
    b.members[domain_weight(m, G.n())].push_back(i);
  }
  return b;
}

template <class F>
Matrix<F> stack_rows(const std::vector<Matrix<F>>& parts, Eigen::Index cols) {
  Eigen::Index rows = 0;
  for (const auto& p : parts) rows += p.rows();
  Matrix<F> out(rows, cols);
  Eigen::Index r = 0;
  for (const auto& p : parts)
    for (Eigen::Index i = 0; i < p.rows(); ++i) out.row(r++) = p.row(i);
  return out;
}

// Orders rows with disjoint pivots by pivot column, which is the RREF of
// their union when each block was already reduced on its own columns.
template <class F>
Matrix<F> sort_by_pivot(const Matrix<F>& m) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> order;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Eigen::Index j = 0;
    while (j < m.cols() && FieldTraits<F>::is_zero(m(i, j))) ++j;
    order.emplace_back(j, i);
  }
  std::sort(order.begin(), order.end());
  Matrix<F> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < order.size(); ++r) out.row(static_cast<Eigen::Index>(r)) = m.row(order[r].second);
  return out;
}

template <class F>
void require_n2(const QuantumGroup<F>& G) {
  if (G.n() != 2) throw SizeMismatch("O(SL_q) computations need N = 2");
}

}  // namespace

const char* variant_name(PowerVariant v) {
  switch (v) {
    case PowerVariant::BetaDiag: return "beta-diag";
    case PowerVariant::AlphaDiag: return "alpha-diag";
    case PowerVariant::BetaNilpotent: return "beta-nilpotent";
  }
  return "?";
}

template <class F>
GlqElement<F> coorbit(QuantumGroup<F>& G, const Point<F>& xi, const MqElement<F>& f, Coaction which) {
  G.mq().check_size(f);
  if (xi.n != G.n()) throw SizeMismatch("point and algebra sizes differ");
  const int d = std::max(0, f.degree());
  const Support<F> sup = support(xi);
  MqElement<F> num = G.mq().zero();
  for (const auto& [m, c] : f.terms) {
    MqElement<F> part = coorbit_numerator(G, sup, m, which).scaled(c);
    if (m.degree() < d) part = G.mq().mul(part, G.det_power(d - m.degree()));
    num += part;
  }
  return GlqElement<F>{num, d};
}

template <class F>
GlqElement<F> coorbit_literal(QuantumGroup<F>& G, const Point<F>& xi, const MqElement<F>& f, Coaction which) {
  if (xi.n != G.n()) throw SizeMismatch("point and algebra sizes differ");
  const Tensor<F> t = G.coaction(f, which);
  MqElement<F> num = G.mq().zero();
  for (const auto& [key, c] : t.terms) {
    const F v = evaluate(xi, G.mq().monomial(key[0], c));
    accumulate(num.terms, key[1], v);
  }
  return GlqElement<F>{num, t.detpow[1]};
}

template <class F>
SlElement<F> psi_image(QuantumGroup<F>& G, const Point<F>& xi, const MqElement<F>& f, Coaction which) {
  require_n2(G);
  return G.project_sl(coorbit(G, xi, f, which));
}

template <class F>
SlElement<F> psi_closed_form(QuantumGroup<F>& G, const Point<F>& xi, int n, PowerVariant v) {
  require_n2(G);
  if (xi.n != 2) throw SizeMismatch("closed forms need a 2x2 point");
  if (n < 0) throw Error("power must be nonnegative");
  const F& q = G.q();
  const auto a = G.sl_gen(1, 1), c = G.sl_gen(2, 1);
  switch (v) {
    case PowerVariant::BetaDiag:
    case PowerVariant::AlphaDiag: {
      if (!xi.is_diagonal()) throw SizeMismatch(std::string(variant_name(v)) + " needs a diagonal point");
      F coef = signed_q_pow(q, n);
      const bool beta = v == PowerVariant::BetaDiag;
      for (int i = beta ? 0 : 1; i <= (beta ? n - 1 : n); ++i) coef *= xi(1, 1) - G.mq().q_pow(beta ? 2 * i : -2 * i) * xi(2, 2);
      const auto cn = G.sl_pow(c, n), an = G.sl_pow(a, n);
      return (beta ? G.sl_mul(cn, an) : G.sl_mul(an, cn)).scaled(coef);
    }
    case PowerVariant::BetaNilpotent: {
      if (!FieldTraits<F>::is_zero(xi(1, 1)) || !FieldTraits<F>::is_zero(xi(2, 1)) ||
          !FieldTraits<F>::is_zero(xi(2, 2)))
        throw SizeMismatch("beta-nilpotent needs a point [[0,s],[0,0]]");
      F coef = (n % 2 == 0 ? F(1) : F(-1)) * G.mq().q_pow(n) * xi(1, 2).pow(n);
      return G.sl_pow(c, 2 * n).scaled(coef);
    }
  }
  throw InternalError("unknown variant");
}

template <class F>
bool psi_power_check(QuantumGroup<F>& G, const Point<F>& xi, int n, PowerVariant v) {
  const SlElement<F> expected = psi_closed_form(G, xi, n, v);
  const Coaction which = v == PowerVariant::AlphaDiag ? Coaction::Alpha : Coaction::Beta;
  return psi_image(G, xi, G.mq().pow(G.mq().gen(2, 1), n), which) == expected;
}

template <class F>
TruncatedSubspace<F> kernel_basis(QuantumGroup<F>& G, const Point<F>& xi, Coaction which, int d) {
  const Blocks<F> b = image_blocks(G, xi, which, d);
  const auto cols = static_cast<Eigen::Index>(b.domain.size());
  std::vector<Matrix<F>> parts;
  for (const auto& [w, idx] : b.members) {
    std::set<Monomial, MonomialOrder> all;
    for (std::size_t i : idx)
      for (const auto& [m, c] : b.images[i].terms) all.insert(m);
    const std::vector<Monomial> img_basis(all.begin(), all.end());
    // Column r of the transpose is the image of domain monomial idx[r].
    Matrix<F> mt = zero_matrix<F>(static_cast<Eigen::Index>(img_basis.size()), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const RowVector<F> v = coordinates(b.images[idx[r]].terms, img_basis);
      for (Eigen::Index j = 0; j < v.cols(); ++j) mt(j, static_cast<Eigen::Index>(r)) = v(j);
    }
    Matrix<F> ker = img_basis.empty() ? Matrix<F>::Identity(static_cast<Eigen::Index>(idx.size()),
                                                             static_cast<Eigen::Index>(idx.size()))
                                      : kernel(mt);
    Matrix<F> full = zero_matrix<F>(ker.rows(), cols);
    for (Eigen::Index i = 0; i < ker.rows(); ++i)
      for (std::size_t r = 0; r < idx.size(); ++r) full(i, static_cast<Eigen::Index>(idx[r])) = ker(i, static_cast<Eigen::Index>(r));
    parts.push_back(std::move(full));
  }
  TruncatedSubspace<F> s;
  s.ambient = Leg::Mq;
  s.n = G.n();
  s.detpow = 0;
  s.basis = b.domain;
  // Domain indices inside a block are increasing, so the block kernels keep
  // their RREF shape when spread out; only the row order needs fixing.
  s.vectors = sort_by_pivot(stack_rows(parts, cols));
  return s;
}

template <class F>
IdealTruncation<F> ideal_truncation(QuantumGroup<F>& G, const Point<F>& xi, Coaction which, int d) {
  if (xi.n != G.n()) throw SizeMismatch("point and algebra sizes differ");
  auto& A = G.mq();
  std::vector<Terms<F>> elems;
  for (int i = 1; i <= G.n() && i <= d; ++i) {
    const MqElement<F> inv = which == Coaction::Beta ? A.tau(i) : A.sigma(i);
    const MqElement<F> shifted = inv - A.scalar(evaluate(xi, inv));
    for (const Monomial& m : A.monomial_basis(d - i)) {
      const MqElement<F> mm = A.monomial(m);
      elems.push_back((which == Coaction::Beta ? A.mul(shifted, mm) : A.mul(mm, shifted)).terms);
    }
  }
  IdealTruncation<F> out;
  out.spanning = static_cast<int>(elems.size());
  out.space = span_of(Leg::Mq, G.n(), 0, elems, A.monomial_basis(std::max(d, 0)));
  return out;
}

template <class F>
ImageData<F> image_data(QuantumGroup<F>& G, const Point<F>& xi, Coaction which, int d) {
  const Blocks<F> b = image_blocks(G, xi, which, d);
  std::set<Monomial, MonomialOrder> all;
  for (const auto& img : b.images)
    for (const auto& [m, c] : img.terms) all.insert(m);
  ImageData<F> out;
  out.space.ambient = Leg::Glq;
  out.space.n = G.n();
  out.space.detpow = d;
  out.space.basis.assign(all.begin(), all.end());
  const auto cols = static_cast<Eigen::Index>(out.space.basis.size());
  std::vector<Matrix<F>> parts;
  for (const auto& [w, idx] : b.members) {
    Matrix<F> rows(static_cast<Eigen::Index>(idx.size()), cols);
    for (std::size_t r = 0; r < idx.size(); ++r)
      rows.row(static_cast<Eigen::Index>(r)) = coordinates(b.images[idx[r]].terms, out.space.basis);
    parts.push_back(row_space(rows));
  }
  // Blocks have disjoint column supports (the weight fixes the column degree).
  out.space.vectors = sort_by_pivot(stack_rows(parts, cols));
  out.character = character_of(out.space);
  return out;
}

template <class F>
TruncatedSubspace<F> diag_coinv_truncation(QuantumGroup<F>& G, int d) {
  if (d < 0) throw Error("degree bound must be nonnegative");
  const int n = G.n();
  // Every row is an exponent vector of length n summing to d.
  std::vector<std::vector<int>> rows;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto gen = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      rows.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  gen(gen, 0, d);
  std::vector<Monomial> monos;
  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  for (;;) {
    Monomial m;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.add(gen_index(i + 1, j + 1, n), rows[choice[static_cast<std::size_t>(i)]][static_cast<std::size_t>(j)]);
    monos.push_back(m);
    int i = 0;
    while (i < n && choice[static_cast<std::size_t>(i)] + 1 == rows.size()) choice[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++choice[static_cast<std::size_t>(i)];
  }
  std::vector<Terms<F>> elems;
  for (const auto& m : monos) elems.push_back(G.mq().monomial(m).terms);
  return span_of(Leg::Glq, n, d, elems);
}

template <class F>
std::vector<SlElement<F>> sphere_generators(QuantumGroup<F>& G) {
  require_n2(G);
  const auto a = G.sl_gen(1, 1), b = G.sl_gen(1, 2), c = G.sl_gen(2, 1), d = G.sl_gen(2, 2);
  const F qq = G.q() + F(1) / G.q();
  return {G.sl_mul(a, c), G.sl_one() + G.sl_mul(b, c).scaled(qq), G.sl_mul(d, b)};
}

template <class F>
TruncatedSubspace<F> span_of_products(QuantumGroup<F>& G, const std::vector<SlElement<F>>& gens, int n) {
  require_n2(G);
  if (n < 0) throw Error("length bound must be nonnegative");
  std::vector<Terms<F>> elems{G.sl_one().terms};
  TruncatedSubspace<F> s = span_of(Leg::Slq, 2, 0, elems);
  std::vector<SlElement<F>> layer{G.sl_one()};
  for (int k = 1; k <= n; ++k) {
    std::vector<SlElement<F>> next;
    for (const auto& u : layer)
      for (const auto& g : gens) next.push_back(G.sl_mul(u, g));
    for (const auto& e : next) elems.push_back(e.terms);
    s = span_of(Leg::Slq, 2, 0, elems);
    // Keep the growing spanning set small: restart from the reduced basis.
    elems.clear();
    layer.clear();
    for (Eigen::Index r = 0; r < s.vectors.rows(); ++r) {
      SlElement<F> e{element_of(s, r)};
      elems.push_back(e.terms);
      layer.push_back(std::move(e));
    }
  }
  return s;
}

template <class F>
TruncatedSubspace<F> sphere_span(QuantumGroup<F>& G, int n) {
  return span_of_products(G, sphere_generators(G), n);
}

template <class F>
bool in_even_cd_subalgebra(const SlElement<F>& x) {
  for (const auto& [m, c] : x.terms)
    if (m[0] != 0 || m[1] != 0 || (m[2] + m[3]) % 2 != 0) return false;
  return true;
}

template <class F>
TruncatedSubspace<F> generated_comodule(QuantumGroup<F>& G, const MqElement<F>& f, int d) {
  const Tensor<F> t = G.coaction(f, Coaction::Beta);
  std::map<Monomial, Terms<F>, MonomialOrder> by_right;
  for (const auto& [key, c] : t.terms) accumulate(by_right[key[1]], key[0], c);
  std::vector<Terms<F>> elems;
  for (auto& [m, e] : by_right) elems.push_back(std::move(e));
  if (f.degree() > d) throw Error("element degree exceeds the truncation");
  return span_of(Leg::Mq, G.n(), 0, elems, G.mq().monomial_basis(d));
}

#define QADJ_INSTANTIATE_COORBIT(F)                                                                              \
  template GlqElement<F> coorbit<F>(QuantumGroup<F>&, const Point<F>&, const MqElement<F>&, Coaction);           \
  template GlqElement<F> coorbit_literal<F>(QuantumGroup<F>&, const Point<F>&, const MqElement<F>&, Coaction);   \
  template SlElement<F> psi_image<F>(QuantumGroup<F>&, const Point<F>&, const MqElement<F>&, Coaction);          \
  template SlElement<F> psi_closed_form<F>(QuantumGroup<F>&, const Point<F>&, int, PowerVariant);                \
  template bool psi_power_check<F>(QuantumGroup<F>&, const Point<F>&, int, PowerVariant);                        \
  template TruncatedSubspace<F> kernel_basis<F>(QuantumGroup<F>&, const Point<F>&, Coaction, int);               \
  template IdealTruncation<F> ideal_truncation<F>(QuantumGroup<F>&, const Point<F>&, Coaction, int);             \
  template ImageData<F> image_data<F>(QuantumGroup<F>&, const Point<F>&, Coaction, int);                         \
  template TruncatedSubspace<F> diag_coinv_truncation<F>(QuantumGroup<F>&, int);                                 \
  template std::vector<SlElement<F>> sphere_generators<F>(QuantumGroup<F>&);                                     \
  template TruncatedSubspace<F> span_of_products<F>(QuantumGroup<F>&, const std::vector<SlElement<F>>&, int);    \
  template TruncatedSubspace<F> sphere_span<F>(QuantumGroup<F>&, int);                                           \
  template bool in_even_cd_subalgebra<F>(const SlElement<F>&);                                                   \
  template TruncatedSubspace<F> generated_comodule<F>(QuantumGroup<F>&, const MqElement<F>&, int);

QADJ_INSTANTIATE_COORBIT(Rational)
QADJ_INSTANTIATE_COORBIT(RatFunc)

}  // namespace qadj
