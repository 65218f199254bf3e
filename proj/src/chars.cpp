#include "qadj/chars.hpp"

#include <algorithm>

#include "qadj/coorbit.hpp"

namespace qadj {

Character Character::monomial(const std::vector<int>& exps, long c) {
  Character r(static_cast<int>(exps.size()));
  r.add(exps, c);
  return r;
}

Character Character::constant(int vars, long c) {
  return monomial(std::vector<int>(static_cast<std::size_t>(vars), 0), c);
}

void Character::add(const std::vector<int>& exps, long c) {
  if (static_cast<int>(exps.size()) != nvars) throw SizeMismatch("character variable count differs");
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

Character& Character::operator+=(const Character& o) {
  if (o.nvars != nvars) throw SizeMismatch("character variable count differs");
  for (const auto& [e, c] : o.coeffs) add(e, c);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  if (o.nvars != nvars) throw SizeMismatch("character variable count differs");
  for (const auto& [e, c] : o.coeffs) add(e, -c);
  return *this;
}

Character operator*(const Character& a, const Character& b) {
  if (a.nvars != b.nvars) throw SizeMismatch("character variable count differs");
  Character r(a.nvars);
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

long Character::at_one() const {
  long s = 0;
  for (const auto& [e, c] : coeffs) s += c;
  return s;
}

std::string Character::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += nvars == 1 ? std::string("z") : "t" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const long a = c < 0 ? -c : c;
    std::string term = mono.empty() ? std::to_string(a) : (a == 1 ? mono : std::to_string(a) + "*" + mono);
    if (out.empty()) out = c < 0 ? "-" + term : term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

Character chi_T(int m) {
  if (m < 0) throw Error("chi_T needs a nonnegative argument");
  Character r(1);
  for (int e = m; e >= -m; e -= 2) r.add({e}, 1);
  return r;
}

Character to_z(const Character& t) {
  if (t.nvars != 2) throw SizeMismatch("z-picture needs N = 2");
  Character r(1);
  for (const auto& [e, c] : t.coeffs) r.add({e[0] - e[1]}, c);
  return r;
}

std::map<int, long> decompose_sl2(const Character& c) {
  if (c.nvars != 1) throw SizeMismatch("decompose_sl2 needs a character in z");
  std::map<int, long> out;
  Character rest = c;
  while (!rest.is_zero()) {
    const auto& [e, k] = *rest.coeffs.rbegin();
    const int top = e[0];
    const long mult = k;
    if (top < 0 || mult < 0) throw Error("not a nonnegative combination of irreducible characters");
    out[top] += mult;
    Character peel = chi_T(top);
    for (auto& [pe, pc] : peel.coeffs) pc *= mult;
    rest -= peel;
  }
  return out;
}

Character from_decomposition(const std::map<int, long>& mult) {
  Character r(1);
  for (const auto& [m, k] : mult) {
    Character t = chi_T(m);
    for (auto& [e, c] : t.coeffs) c *= k;
    r += t;
  }
  return r;
}

Character character_Cr(int r) {
  Character out(1);
  if (r < 0) return out;
  for (int i = 0; i <= r - 1; ++i)
    for (int j = 0; i + j <= r - 1; ++j)
      for (int k = 0; i + j + k <= r - 1; ++k) out.add({2 * (k - j)}, 1);
  for (int l = 0; l <= r; ++l)
    for (int m = 0; l + m <= r; ++m)
      for (int n = 0; l + m + n <= r; ++n) out.add({2 * (m - l)}, 1);
  return out;
}

bool difference_identity(int r) {
  Character rhs(1);
  for (int s = 0; s <= r; ++s) rhs += chi_T(2 * s);
  return character_Cr(r) - character_Cr(r - 1) == rhs;
}

std::vector<int> grading_weight(Leg ambient, int n, int detpow, const Monomial& m) {
  switch (ambient) {
    case Leg::Mq: {
      MultiDegree d = multidegree_of(m, n);
      std::vector<int> w(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = d.coldeg[i] - d.rowdeg[i];
      return w;
    }
    case Leg::Glq: {
      MultiDegree d = multidegree_of(m, n);
      std::vector<int> w(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = d.coldeg[i] - detpow;
      return w;
    }
    case Leg::Slq:
      return {QuantumGroup<Rational>::sl_weight(m)};
    case Leg::D:
      return std::vector<int>(m.exponents().begin(), m.exponents().begin() + n);
    case Leg::K:
      return {m[0]};
  }
  throw InternalError("unknown ambient");
}

template <class F>
Character character_of(const TruncatedSubspace<F>& s) {
  const int vars = (s.ambient == Leg::Slq || s.ambient == Leg::K) ? 1 : s.n;
  Character out(vars);
  for (Eigen::Index r = 0; r < s.vectors.rows(); ++r) {
    bool seen = false;
    std::vector<int> w;
    for (std::size_t j = 0; j < s.basis.size(); ++j) {
      if (FieldTraits<F>::is_zero(s.vectors(r, static_cast<Eigen::Index>(j)))) continue;
      std::vector<int> wj = grading_weight(s.ambient, s.n, s.detpow, s.basis[j]);
      if (!seen) {
        w = wj;
        seen = true;
      } else if (wj != w) {
        throw NotMultihomogeneous("basis vector " + std::to_string(r) + " mixes weights");
      }
    }
    if (seen) out.add(w, 1);
  }
  return out;
}

bool compare_at_q1(const Point<RatFunc>& xi, int d, Coaction which) {
  QuantumGroup<RatFunc> G(xi.n, RatFunc::q());
  QuantumGroup<Rational> G1(xi.n, Rational(1));
  const Point<Rational> xi1 = specialize(xi, Rational(1));
  return image_data(G, xi, which, d).character == image_data(G1, xi1, which, d).character;
}

template Character character_of<Rational>(const TruncatedSubspace<Rational>&);
template Character character_of<RatFunc>(const TruncatedSubspace<RatFunc>&);

}  // namespace qadj
