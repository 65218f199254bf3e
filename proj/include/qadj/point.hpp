#pragma once

#include "qadj/field.hpp"
#include "qadj/mq.hpp"
#include "qadj/xla.hpp"

namespace qadj {

/// A scalar matrix whose entries satisfy the defining relations of O(M_q)
/// when substituted for the generators.
template <class F>
struct Point {
  int n = 0;
  Matrix<F> entries;

  const F& operator()(int i, int j) const { return entries(i - 1, j - 1); }
  bool is_diagonal() const;
};

/// Checks the four relation families literally with the given q and returns
/// the point; throws NotAPoint naming the first violated relation.
template <class F>
Point<F> validate_point(const Matrix<F>& m, const F& q);

/// ev_xi(f): the algebra map x_ij -> xi_ij.
template <class F>
F evaluate(const Point<F>& xi, const MqElement<F>& f);

/// Entrywise q -> q0.
Point<Rational> specialize(const Point<RatFunc>& xi, const Rational& q0);

template <class F>
Point<F> diagonal_point(const std::vector<F>& d);

}  // namespace qadj
