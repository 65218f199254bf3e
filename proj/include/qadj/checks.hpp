#pragma once

#include <string>
#include <vector>

#include "qadj/hopf.hpp"

namespace qadj {

/// One named yes/no result.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// (Delta (x) id) Delta = (id (x) Delta) Delta.
template <class F>
bool coassociative(QuantumGroup<F>& G, const GlqElement<F>& x);

/// (eps (x) id) Delta = id = (id (x) eps) Delta.
template <class F>
bool counital(QuantumGroup<F>& G, const GlqElement<F>& x);

/// m (S (x) id) Delta = eps 1 = m (id (x) S) Delta.
template <class F>
bool antipodal(QuantumGroup<F>& G, const GlqElement<F>& x);

/// The three axioms on every x_ij and on det_q^-1, plus det_q * x_ij = x_ij * det_q.
template <class F>
std::vector<Check> hopf_axioms(QuantumGroup<F>& G);

/// tau_i under beta and sigma_i under alpha are coinvariant, and each family
/// commutes pairwise.
template <class F>
std::vector<Check> coinvariant_checks(QuantumGroup<F>& G);

/// (id (x) Delta) c = (c (x) id) c for the coaction c on x.
template <class F>
bool comodule_law(QuantumGroup<F>& G, const MqElement<F>& x, Coaction which);

/// beta(f h) = beta(f) beta(h).
template <class F>
bool multiplicative(QuantumGroup<F>& G, const MqElement<F>& f, const MqElement<F>& h, Coaction which = Coaction::Beta);

}  // namespace qadj
