#include "qadj/checks.hpp"

namespace qadj {

namespace {

// Applies the counit to leg `leg` of a 2-leg tensor.
template <class F>
GlqElement<F> counit_leg(QuantumGroup<F>& G, const Tensor<F>& t, std::size_t leg) {
  GlqElement<F> out{G.mq().zero(), t.detpow[1 - leg]};
  for (const auto& [key, c] : t.terms) {
    GlqElement<F> e{G.mq().monomial(key[leg]), t.detpow[leg]};
    out.num += G.mq().monomial(key[1 - leg], F(c * G.counit(e)));
  }
  return out;
}

}  // namespace

template <class F>
bool coassociative(QuantumGroup<F>& G, const GlqElement<F>& x) {
  const Tensor<F> d = G.comultiply(x);
  return G.tensor_equal(G.comultiply_leg(d, 0), G.comultiply_leg(d, 1));
}

template <class F>
bool counital(QuantumGroup<F>& G, const GlqElement<F>& x) {
  const Tensor<F> d = G.comultiply(x);
  // eps(det_q^-k) = 1, so the counit of a leg is the counit of its numerator.
  return G.equal(counit_leg(G, d, 0), x) && G.equal(counit_leg(G, d, 1), x);
}

template <class F>
bool antipodal(QuantumGroup<F>& G, const GlqElement<F>& x) {
  const Tensor<F> d = G.comultiply(x);
  GlqElement<F> left{G.mq().zero(), 0}, right{G.mq().zero(), 0};
  for (const auto& [key, c] : d.terms) {
    const GlqElement<F> u{G.mq().monomial(key[0], c), d.detpow[0]};
    const GlqElement<F> v{G.mq().monomial(key[1]), d.detpow[1]};
    left = G.add(left, G.mul(G.antipode(u), v));
    right = G.add(right, G.mul(u, G.antipode(v)));
  }
  const GlqElement<F> unit = G.gl(G.mq().scalar(G.counit(x)));
  return G.equal(left, unit) && G.equal(right, unit);
}

template <class F>
std::vector<Check> hopf_axioms(QuantumGroup<F>& G) {
  std::vector<Check> out;
  const int n = G.n();
  std::vector<std::pair<std::string, GlqElement<F>>> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gens.emplace_back("x" + std::to_string(i) + std::to_string(j), G.gl(G.mq().gen(i, j)));
  gens.emplace_back("det^-1", G.det_inverse());
  bool coassoc = true, counit = true, antipode = true;
  std::string bad;
  for (const auto& [name, x] : gens) {
    const bool a = coassociative(G, x), b = counital(G, x), c = antipodal(G, x);
    if (!(a && b && c)) bad += (bad.empty() ? "" : ", ") + name;
    coassoc = coassoc && a;
    counit = counit && b;
    antipode = antipode && c;
  }
  out.push_back({"coassociativity N=" + std::to_string(n), coassoc, bad});
  out.push_back({"counit N=" + std::to_string(n), counit, bad});
  out.push_back({"antipode N=" + std::to_string(n), antipode, bad});
  bool central = true;
  const MqElement<F>& det = G.mq().det();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const MqElement<F> x = G.mq().gen(i, j);
      central = central && G.mq().mul(det, x) == G.mq().mul(x, det);
    }
  out.push_back({"det_q central N=" + std::to_string(n), central, ""});
  return out;
}

template <class F>
std::vector<Check> coinvariant_checks(QuantumGroup<F>& G) {
  std::vector<Check> out;
  auto& A = G.mq();
  const int n = G.n();
  std::vector<MqElement<F>> taus, sigmas;
  for (int i = 1; i <= n; ++i) {
    taus.push_back(A.tau(i));
    sigmas.push_back(A.sigma(i));
  }
  for (int i = 1; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    out.push_back({"beta(tau" + std::to_string(i) + ") = tau" + std::to_string(i) + " (x) 1",
                   G.is_coinvariant(taus[k], Coaction::Beta), ""});
    out.push_back({"alpha(sigma" + std::to_string(i) + ") = sigma" + std::to_string(i) + " (x) 1",
                   G.is_coinvariant(sigmas[k], Coaction::Alpha), ""});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
      out.push_back({"tau" + std::to_string(i) + " tau" + std::to_string(j) + " commute",
                     A.mul(taus[a], taus[b]) == A.mul(taus[b], taus[a]), ""});
      out.push_back({"sigma" + std::to_string(i) + " sigma" + std::to_string(j) + " commute",
                     A.mul(sigmas[a], sigmas[b]) == A.mul(sigmas[b], sigmas[a]), ""});
    }
  return out;
}

template <class F>
bool comodule_law(QuantumGroup<F>& G, const MqElement<F>& x, Coaction which) {
  const Tensor<F> c = G.coaction(x, which);
  return G.tensor_equal(G.comultiply_leg(c, 1), G.coaction_leg0(c, which));
}

template <class F>
bool multiplicative(QuantumGroup<F>& G, const MqElement<F>& f, const MqElement<F>& h, Coaction which) {
  return G.tensor_equal(G.coaction(G.mq().mul(f, h), which), G.tensor_mul(G.coaction(f, which), G.coaction(h, which)));
}

#define QADJ_INSTANTIATE_CHECKS(F)                                                           \
  template bool coassociative<F>(QuantumGroup<F>&, const GlqElement<F>&);                    \
  template bool counital<F>(QuantumGroup<F>&, const GlqElement<F>&);                         \
  template bool antipodal<F>(QuantumGroup<F>&, const GlqElement<F>&);                        \
  template std::vector<Check> hopf_axioms<F>(QuantumGroup<F>&);                              \
  template std::vector<Check> coinvariant_checks<F>(QuantumGroup<F>&);                       \
  template bool comodule_law<F>(QuantumGroup<F>&, const MqElement<F>&, Coaction);            \
  template bool multiplicative<F>(QuantumGroup<F>&, const MqElement<F>&, const MqElement<F>&, Coaction);

QADJ_INSTANTIATE_CHECKS(Rational)
QADJ_INSTANTIATE_CHECKS(RatFunc)

}  // namespace qadj
