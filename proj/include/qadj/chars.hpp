#pragma once

#include <map>
#include <string>
#include <vector>

#include "qadj/point.hpp"
#include "qadj/subspace.hpp"

namespace qadj {

/// Laurent polynomial with integer coefficients in t_1..t_N, or in a single
/// variable z when nvars == 1.
struct Character {
  int nvars = 1;
  std::map<std::vector<int>, long> coeffs;

  Character() = default;
  explicit Character(int vars) : nvars(vars) {}
  static Character monomial(const std::vector<int>& exps, long c = 1);
  static Character constant(int vars, long c);
  /// c * z^e.
  static Character z(int e, long c = 1) { return monomial({e}, c); }

  bool is_zero() const { return coeffs.empty(); }
  void add(const std::vector<int>& exps, long c);
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character&, const Character&) = default;

  /// Value at t = 1 (total dimension).
  long at_one() const;
  /// Descending exponents, e.g. "z^2 + 1 + z^-2" or "t1*t2^-1 + 2".
  std::string to_string() const;
};

/// z^m + z^(m-2) + ... + z^-m for m = 2l >= 0.
Character chi_T(int m);

/// t1 -> z, t2 -> z^-1 (N = 2 only).
Character to_z(const Character& t);

/// Multiplicities of chi_T(m) in c, peeled greedily from the top exponent.
std::map<int, long> decompose_sl2(const Character& c);
Character from_decomposition(const std::map<int, long>& mult);

/// sum_{i+j+k<=r-1} z^{2(k-j)} + sum_{l+m+n<=r} z^{2(m-l)}; zero for r < 0.
Character character_Cr(int r);
/// character_Cr(r) - character_Cr(r-1) == sum_{s<=r} chi_T(2s).
bool difference_identity(int r);

/// Grading character of a truncated subspace: coldeg - rowdeg on O(M_q),
/// coldeg - detpow on O(GL_q), the K-weight on O(SL_q). Every RREF row must
/// be homogeneous; otherwise NotMultihomogeneous is thrown.
template <class F>
Character character_of(const TruncatedSubspace<F>& s);

/// The weight used by character_of for one ambient monomial.
std::vector<int> grading_weight(Leg ambient, int n, int detpow, const Monomial& m);

/// Character of the truncated co-orbit image with q symbolic against the
/// same computation run over Q with q = 1 and xi specialized at q = 1.
bool compare_at_q1(const Point<RatFunc>& xi, int d, Coaction which = Coaction::Beta);

}  // namespace qadj
