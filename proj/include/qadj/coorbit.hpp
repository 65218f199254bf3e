#pragma once

#include <vector>

#include "qadj/chars.hpp"
#include "qadj/hopf.hpp"
#include "qadj/point.hpp"
#include "qadj/subspace.hpp"

namespace qadj {

/// beta^xi = (ev_xi (x) id) o beta, or the same with alpha. Summed directly
/// over the nonzero entries of xi; the result carries det_q^(-deg f).
template <class F>
GlqElement<F> coorbit(QuantumGroup<F>& G, const Point<F>& xi, const MqElement<F>& f, Coaction which = Coaction::Beta);

/// Same map, built by expanding the full coaction tensor and evaluating its
/// first leg. Slow; kept as a cross-check.
template <class F>
GlqElement<F> coorbit_literal(QuantumGroup<F>& G, const Point<F>& xi, const MqElement<F>& f,
                              Coaction which = Coaction::Beta);

/// pi o coorbit in O(SL_q), N = 2. With beta this is psi^xi, with alpha phi^xi.
template <class F>
SlElement<F> psi_image(QuantumGroup<F>& G, const Point<F>& xi, const MqElement<F>& f, Coaction which = Coaction::Beta);

enum class PowerVariant { BetaDiag, AlphaDiag, BetaNilpotent };

const char* variant_name(PowerVariant v);

/// Expected value of psi_image(x21^n):
///   BetaDiag       (-q)^n prod_{i=0}^{n-1} (xi1 - q^{2i} xi2) c^n a^n
///   AlphaDiag      (-q)^n prod_{i=1}^{n}   (xi1 - q^{-2i} xi2) a^n c^n
///   BetaNilpotent  (-1)^n q^n xi12^n c^{2n}
/// Throws SizeMismatch if xi does not have the shape the variant needs.
template <class F>
SlElement<F> psi_closed_form(QuantumGroup<F>& G, const Point<F>& xi, int n, PowerVariant v);

template <class F>
bool psi_power_check(QuantumGroup<F>& G, const Point<F>& xi, int n, PowerVariant v);

/// Kernel of the co-orbit map on the span of all monomials of degree <= d,
/// over that monomial basis.
template <class F>
TruncatedSubspace<F> kernel_basis(QuantumGroup<F>& G, const Point<F>& xi, Coaction which, int d);

template <class F>
struct IdealTruncation {
  TruncatedSubspace<F> space;
  /// Number of spanning products before reduction.
  int spanning = 0;
};

/// Span of (tau_i - tau_i(xi)) m (beta) or m (sigma_i - sigma_i(xi)) (alpha)
/// over monomials m of degree <= d - i.
template <class F>
IdealTruncation<F> ideal_truncation(QuantumGroup<F>& G, const Point<F>& xi, Coaction which, int d);

template <class F>
struct ImageData {
  TruncatedSubspace<F> space;
  Character character;
};

/// Span of the images of all monomials of degree <= d, written over
/// det_q^(-d), with its t_1..t_N character.
template <class F>
ImageData<F> image_data(QuantumGroup<F>& G, const Point<F>& xi, Coaction which, int d);

/// Span of det_q^(-d) x^a over exponent matrices a with all row sums d.
template <class F>
TruncatedSubspace<F> diag_coinv_truncation(QuantumGroup<F>& G, int d);

/// ac, 1 + (q + 1/q) bc, db in O(SL_q).
template <class F>
std::vector<SlElement<F>> sphere_generators(QuantumGroup<F>& G);

/// Span of products of length <= n of the given O(SL_q) elements.
template <class F>
TruncatedSubspace<F> span_of_products(QuantumGroup<F>& G, const std::vector<SlElement<F>>& gens, int n);

template <class F>
TruncatedSubspace<F> sphere_span(QuantumGroup<F>& G, int n);

/// True when every term is a c^i d^j with i + j even, i.e. x lies in the
/// subalgebra generated by c^2, cd, d^2.
template <class F>
bool in_even_cd_subalgebra(const SlElement<F>& x);

/// Span of the first-leg components of beta(f): the right subcomodule
/// generated by f. Written over the monomials of degree deg f.
template <class F>
TruncatedSubspace<F> generated_comodule(QuantumGroup<F>& G, const MqElement<F>& f, int d);

}  // namespace qadj
