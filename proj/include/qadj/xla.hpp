#pragma once

#include <vector>

#include "qadj/field.hpp"

namespace qadj {

/// Reduced row echelon form of a matrix over an exact field.
template <class F>
struct Echelon {
  Matrix<F> rref;           ///< rank x cols, pivots normalized to 1
  std::vector<int> pivots;  ///< leftmost nonzero column of each row
  int rank = 0;
};

/// Fraction-free forward elimination (rows cleared to polynomial/integral
/// entries, content stripped after every update) followed by exact back
/// substitution. Pivoting is deterministic: first row with a nonzero entry
/// in the leftmost remaining column.
template <class F>
Echelon<F> echelon(const Matrix<F>& m);

template <class F>
int rank(const Matrix<F>& m);

/// Basis of the right null space {v : m v = 0}, one vector per row, in RREF.
template <class F>
Matrix<F> kernel(const Matrix<F>& m);

/// Canonical basis (RREF rows) of the row space of m.
template <class F>
Matrix<F> row_space(const Matrix<F>& m);

/// Whether v lies in the row space of `space`.
template <class F>
bool member(const RowVector<F>& v, const Matrix<F>& space);

/// Equality of the row spaces of a and b.
template <class F>
bool subspace_equal(const Matrix<F>& a, const Matrix<F>& b);

/// Row space of a contained in row space of b.
template <class F>
bool subspace_contains(const Matrix<F>& big, const Matrix<F>& small);

template <class F>
Matrix<F> subspace_sum(const Matrix<F>& a, const Matrix<F>& b);

template <class F>
Matrix<F> subspace_intersection(const Matrix<F>& a, const Matrix<F>& b);

/// Stack the rows of a and b.
template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b);

/// Entrywise specialization q -> q0.
Matrix<Rational> specialize(const Matrix<RatFunc>& m, const Rational& q0);

extern template struct Echelon<Rational>;
extern template struct Echelon<RatFunc>;

}  // namespace qadj
