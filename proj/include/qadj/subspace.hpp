#pragma once

#include <string>
#include <vector>

#include "qadj/hopf.hpp"
#include "qadj/xla.hpp"

namespace qadj {

/// A finite-dimensional subspace of O(M_q), O(GL_q) (fixed det_q power) or
/// O(SL_q), given by RREF rows over an explicit list of ambient monomials.
template <class F>
struct TruncatedSubspace {
  Leg ambient = Leg::Mq;
  int n = 2;
  int detpow = 0;
  std::vector<Monomial> basis;
  Matrix<F> vectors;

  int dim() const { return static_cast<int>(vectors.rows()); }
};

/// Coordinates of a term map against an ambient basis (which must cover it).
template <class F>
RowVector<F> coordinates(const Terms<F>& terms, const std::vector<Monomial>& basis);

/// Builds a subspace from spanning elements given as term maps. The ambient
/// basis is the sorted union of monomials appearing unless `basis` is given.
template <class F>
TruncatedSubspace<F> span_of(Leg ambient, int n, int detpow, const std::vector<Terms<F>>& elements,
                             std::vector<Monomial> basis = {});

/// Element represented by row r of a subspace.
template <class F>
Terms<F> element_of(const TruncatedSubspace<F>& s, Eigen::Index r);

/// Rewrites both subspaces over the union of their ambient bases.
template <class F>
void common_ambient(TruncatedSubspace<F>& a, TruncatedSubspace<F>& b);

template <class F>
bool same_subspace(TruncatedSubspace<F> a, TruncatedSubspace<F> b);

template <class F>
bool contains(TruncatedSubspace<F> big, TruncatedSubspace<F> small);

/// Specializes q -> q0 in every coordinate.
TruncatedSubspace<Rational> specialize(const TruncatedSubspace<RatFunc>& s, const Rational& q0);

}  // namespace qadj
