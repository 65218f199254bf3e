#include "qadj/subspace.hpp"

#include <algorithm>
#include <set>

namespace qadj {

namespace {

std::size_t index_of(const std::vector<Monomial>& basis, const Monomial& m) {
  auto it = std::lower_bound(basis.begin(), basis.end(), m, MonomialOrder{});
  if (it == basis.end() || !(*it == m)) throw InternalError("monomial outside the ambient basis");
  return static_cast<std::size_t>(it - basis.begin());
}

template <class F>
Matrix<F> zeros(Eigen::Index r, Eigen::Index c) {
  Matrix<F> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = F(0);
  return m;
}

template <class F>
void rebase(TruncatedSubspace<F>& s, const std::vector<Monomial>& basis) {
  Matrix<F> v = zeros<F>(s.vectors.rows(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < s.basis.size(); ++j) {
    const auto nj = static_cast<Eigen::Index>(index_of(basis, s.basis[j]));
    for (Eigen::Index i = 0; i < s.vectors.rows(); ++i) v(i, nj) = s.vectors(i, static_cast<Eigen::Index>(j));
  }
  s.basis = basis;
  s.vectors = row_space(v);
}

}  // namespace

template <class F>
RowVector<F> coordinates(const Terms<F>& terms, const std::vector<Monomial>& basis) {
  RowVector<F> v(static_cast<Eigen::Index>(basis.size()));
  for (Eigen::Index j = 0; j < v.cols(); ++j) v(j) = F(0);
  for (const auto& [m, c] : terms) v(static_cast<Eigen::Index>(index_of(basis, m))) = c;
  return v;
}

template <class F>
TruncatedSubspace<F> span_of(Leg ambient, int n, int detpow, const std::vector<Terms<F>>& elements,
                             std::vector<Monomial> basis) {
  if (basis.empty()) {
    std::set<Monomial, MonomialOrder> all;
    for (const auto& e : elements)
      for (const auto& [m, c] : e) all.insert(m);
    basis.assign(all.begin(), all.end());
  } else if (!std::is_sorted(basis.begin(), basis.end(), MonomialOrder{})) {
    throw InternalError("ambient basis must be sorted");
  }
  Matrix<F> rows(static_cast<Eigen::Index>(elements.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = coordinates(elements[i], basis);
  TruncatedSubspace<F> s;
  s.ambient = ambient;
  s.n = n;
  s.detpow = detpow;
  s.basis = std::move(basis);
  s.vectors = elements.empty() ? Matrix<F>(0, static_cast<Eigen::Index>(s.basis.size())) : row_space(rows);
  return s;
}

template <class F>
Terms<F> element_of(const TruncatedSubspace<F>& s, Eigen::Index r) {
  Terms<F> t;
  for (std::size_t j = 0; j < s.basis.size(); ++j) accumulate(t, s.basis[j], s.vectors(r, static_cast<Eigen::Index>(j)));
  return t;
}

template <class F>
void common_ambient(TruncatedSubspace<F>& a, TruncatedSubspace<F>& b) {
  if (a.ambient != b.ambient || a.n != b.n || a.detpow != b.detpow)
    throw SizeMismatch("subspaces live in different ambient spaces");
  if (a.basis == b.basis) return;
  std::set<Monomial, MonomialOrder> all(a.basis.begin(), a.basis.end());
  all.insert(b.basis.begin(), b.basis.end());
  std::vector<Monomial> basis(all.begin(), all.end());
  rebase(a, basis);
  rebase(b, basis);
}

template <class F>
bool same_subspace(TruncatedSubspace<F> a, TruncatedSubspace<F> b) {
  if (a.dim() != b.dim()) return false;
  common_ambient(a, b);
  return subspace_equal(a.vectors, b.vectors);
}

template <class F>
bool contains(TruncatedSubspace<F> big, TruncatedSubspace<F> small) {
  if (small.dim() == 0) return true;
  common_ambient(big, small);
  return subspace_contains(big.vectors, small.vectors);
}

TruncatedSubspace<Rational> specialize(const TruncatedSubspace<RatFunc>& s, const Rational& q0) {
  TruncatedSubspace<Rational> r;
  r.ambient = s.ambient;
  r.n = s.n;
  r.detpow = s.detpow;
  r.basis = s.basis;
  r.vectors = row_space(specialize(s.vectors, q0));
  return r;
}

#define QADJ_INSTANTIATE_SUBSPACE(F)                                                                      \
  template RowVector<F> coordinates<F>(const Terms<F>&, const std::vector<Monomial>&);                   \
  template TruncatedSubspace<F> span_of<F>(Leg, int, int, const std::vector<Terms<F>>&, std::vector<Monomial>); \
  template Terms<F> element_of<F>(const TruncatedSubspace<F>&, Eigen::Index);                            \
  template void common_ambient<F>(TruncatedSubspace<F>&, TruncatedSubspace<F>&);                         \
  template bool same_subspace<F>(TruncatedSubspace<F>, TruncatedSubspace<F>);                            \
  template bool contains<F>(TruncatedSubspace<F>, TruncatedSubspace<F>);

QADJ_INSTANTIATE_SUBSPACE(Rational)
QADJ_INSTANTIATE_SUBSPACE(RatFunc)

}  // namespace qadj
