#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace qadj {

/// Largest supported matrix size. Generators of an N x N quantum matrix are
/// stored densely, so N*N slots are needed.
inline constexpr int kMaxN = 4;
inline constexpr int kMaxVars = kMaxN * kMaxN;

/// Exponent vector over at most kMaxVars variables.
///
/// Used for ordered O(M_q) monomials (generator k = (i-1)*N + (j-1)),
/// for Laurent monomials in t_1..t_N or z (signed exponents), and for
/// reduced O(SL_q) monomials a^i b^j c^k d^n.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  static Monomial var(int k, int power = 1) {
    Monomial m;
    m.add(k, power);
    return m;
  }

  int operator[](int k) const { return e_[static_cast<std::size_t>(k)]; }
  int degree() const { return deg_; }
  bool is_one() const {
    for (auto x : e_)
      if (x != 0) return false;
    return true;
  }

  void add(int k, int by) {
    e_[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(e_[static_cast<std::size_t>(k)] + by);
    deg_ += by;
  }

  /// Highest variable with nonzero exponent, or -1.
  int last_var() const {
    for (int k = kMaxVars - 1; k >= 0; --k)
      if (e_[static_cast<std::size_t>(k)] != 0) return k;
    return -1;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int k = 0; k < kMaxVars; ++k) r.add(k, o[k]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  const std::array<std::int16_t, kMaxVars>& exponents() const { return e_; }

 private:
  std::array<std::int16_t, kMaxVars> e_;
  int deg_ = 0;
};

/// Degree first, then lexicographically larger exponent vectors first, so
/// for N = 2 the degree-one monomials list as x11, x12, x21, x22.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() > b.exponents();
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : m.exponents()) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

inline int gen_index(int i, int j, int n) { return (i - 1) * n + (j - 1); }
inline int gen_row(int k, int n) { return k / n + 1; }
inline int gen_col(int k, int n) { return k % n + 1; }

/// Generators of m in increasing order, repeated by multiplicity.
inline std::vector<int> letters(const Monomial& m) {
  std::vector<int> w;
  for (int k = 0; k < kMaxVars; ++k)
    for (int r = 0; r < m[k]; ++r) w.push_back(k);
  return w;
}

}  // namespace qadj
