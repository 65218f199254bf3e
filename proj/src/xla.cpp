#include "qadj/xla.hpp"

#include <utility>

namespace qadj {

namespace {

template <class F>
using Row = std::vector<F>;

template <class F>
void make_primitive(Row<F>& row, std::size_t from) {
  using T = FieldTraits<F>;
  F content;
  std::size_t first = row.size();
  for (std::size_t j = from; j < row.size(); ++j) {
    if (T::is_zero(row[j])) continue;
    if (first == row.size()) first = j;
    content = T::content_combine(content, row[j]);
  }
  if (first == row.size()) return;
  F scale = content * T::unit_part(row[first] / content);
  if (scale == F(1)) return;
  for (std::size_t j = from; j < row.size(); ++j)
    if (!T::is_zero(row[j])) row[j] /= scale;
}

template <class F>
void clear_denominators(Row<F>& row) {
  using T = FieldTraits<F>;
  F l(1);
  bool any = false;
  for (const auto& x : row) {
    if (T::is_zero(x)) continue;
    F d = T::denominator(x);
    if (d == F(1)) continue;
    l = T::lcm(l, d);
    any = true;
  }
  if (any)
    for (auto& x : row)
      if (!T::is_zero(x)) x *= l;
  make_primitive(row, 0);
}

}  // namespace

template <class F>
Echelon<F> echelon(const Matrix<F>& m) {
  using T = FieldTraits<F>;
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  std::vector<Row<F>> a(rows, Row<F>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    clear_denominators(a[i]);
  }

  Echelon<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && T::is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    out.pivots.push_back(static_cast<int>(c));
    const F piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (T::is_zero(a[i][c])) continue;
      const F b = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        F v = piv * a[i][j];
        if (!T::is_zero(a[r][j])) v -= b * a[r][j];
        a[i][j] = std::move(v);
      }
      make_primitive(a[i], c);
    }
    ++r;
  }
  out.rank = static_cast<int>(r);

  // Back substitution to the unique reduced form.
  for (std::size_t i = r; i-- > 0;) {
    const auto pc = static_cast<std::size_t>(out.pivots[i]);
    const F inv = F(1) / a[i][pc];
    for (std::size_t j = pc; j < cols; ++j)
      if (!T::is_zero(a[i][j])) a[i][j] *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      if (T::is_zero(a[k][pc])) continue;
      const F f = a[k][pc];
      for (std::size_t j = pc; j < cols; ++j)
        if (!T::is_zero(a[i][j])) a[k][j] -= f * a[i][j];
    }
  }

  out.rref.resize(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.rref(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i][j];
  return out;
}

template <class F>
int rank(const Matrix<F>& m) {
  return echelon(m).rank;
}

template <class F>
Matrix<F> kernel(const Matrix<F>& m) {
  const Echelon<F> e = echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < cols; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);

  Matrix<F> k(static_cast<Eigen::Index>(free_cols.size()), cols);
  for (Eigen::Index r = 0; r < k.rows(); ++r) {
    for (Eigen::Index j = 0; j < cols; ++j) k(r, j) = F(0);
    const Eigen::Index f = free_cols[static_cast<std::size_t>(r)];
    k(r, f) = F(1);
    for (int i = 0; i < e.rank; ++i) {
      if (FieldTraits<F>::is_zero(e.rref(i, f))) continue;
      k(r, e.pivots[static_cast<std::size_t>(i)]) = -e.rref(i, f);
    }
  }
  return row_space(k);
}

template <class F>
Matrix<F> row_space(const Matrix<F>& m) {
  return echelon(m).rref;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw SizeMismatch("vstack: column counts differ");
  Matrix<F> s(a.rows() + b.rows(), a.cols());
  s.topRows(a.rows()) = a;
  s.bottomRows(b.rows()) = b;
  return s;
}

template <class F>
bool member(const RowVector<F>& v, const Matrix<F>& space) {
  if (space.rows() > 0 && v.cols() != space.cols()) throw SizeMismatch("member: dimension mismatch");
  Matrix<F> vm = v;
  if (space.rows() == 0) return rank(vm) == 0;
  return rank(vstack(space, vm)) == rank(space);
}

template <class F>
bool subspace_equal(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() > 0 && b.rows() > 0 && a.cols() != b.cols()) throw SizeMismatch("subspace_equal: dimension mismatch");
  const Matrix<F> ra = row_space(a), rb = row_space(b);
  if (ra.rows() != rb.rows()) return false;
  if (ra.rows() == 0) return true;
  return ra == rb;
}

template <class F>
bool subspace_contains(const Matrix<F>& big, const Matrix<F>& small) {
  if (small.rows() == 0) return true;
  if (big.rows() == 0) return rank(small) == 0;
  if (big.cols() != small.cols()) throw SizeMismatch("subspace_contains: dimension mismatch");
  return rank(vstack(big, small)) == rank(big);
}

template <class F>
Matrix<F> subspace_sum(const Matrix<F>& a, const Matrix<F>& b) {
  return row_space(vstack(a, b));
}

template <class F>
Matrix<F> subspace_intersection(const Matrix<F>& a, const Matrix<F>& b) {
  const Matrix<F> ra = row_space(a), rb = row_space(b);
  if (ra.rows() == 0 || rb.rows() == 0) return Matrix<F>(0, std::max(a.cols(), b.cols()));
  if (ra.cols() != rb.cols()) throw SizeMismatch("subspace_intersection: dimension mismatch");
  Matrix<F> stacked = vstack(ra, Matrix<F>(-rb));
  Matrix<F> left = kernel(Matrix<F>(stacked.transpose()));
  Matrix<F> coeffs = left.leftCols(ra.rows());
  Matrix<F> out(coeffs.rows(), ra.cols());
  for (Eigen::Index i = 0; i < coeffs.rows(); ++i)
    for (Eigen::Index j = 0; j < ra.cols(); ++j) {
      F acc(0);
      for (Eigen::Index k = 0; k < ra.rows(); ++k)
        if (!FieldTraits<F>::is_zero(coeffs(i, k)) && !FieldTraits<F>::is_zero(ra(k, j))) acc += coeffs(i, k) * ra(k, j);
      out(i, j) = acc;
    }
  return row_space(out);
}

Matrix<Rational> specialize(const Matrix<RatFunc>& m, const Rational& q0) {
  Matrix<Rational> s(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) s(i, j) = specialize(m(i, j), q0);
  return s;
}

#define QADJ_INSTANTIATE_XLA(F)                                                \
  template struct Echelon<F>;                                                  \
  template Echelon<F> echelon<F>(const Matrix<F>&);                            \
  template int rank<F>(const Matrix<F>&);                                      \
  template Matrix<F> kernel<F>(const Matrix<F>&);                              \
  template Matrix<F> row_space<F>(const Matrix<F>&);                           \
  template Matrix<F> vstack<F>(const Matrix<F>&, const Matrix<F>&);            \
  template bool member<F>(const RowVector<F>&, const Matrix<F>&);              \
  template bool subspace_equal<F>(const Matrix<F>&, const Matrix<F>&);         \
  template bool subspace_contains<F>(const Matrix<F>&, const Matrix<F>&);      \
  template Matrix<F> subspace_sum<F>(const Matrix<F>&, const Matrix<F>&);      \
  template Matrix<F> subspace_intersection<F>(const Matrix<F>&, const Matrix<F>&);

QADJ_INSTANTIATE_XLA(Rational)
QADJ_INSTANTIATE_XLA(RatFunc)

}  // namespace qadj
