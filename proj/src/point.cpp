#include "qadj/point.hpp"

#include <string>

namespace qadj {

namespace {

std::string x(int i, int j) { return "x" + std::to_string(i) + std::to_string(j); }

}  // namespace

template <class F>
bool Point<F>::is_diagonal() const {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && !FieldTraits<F>::is_zero((*this)(i, j))) return false;
  return true;
}

template <class F>
Point<F> validate_point(const Matrix<F>& m, const F& q) {
  if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > kMaxN) throw SizeMismatch("point must be a square matrix of size 1.." + std::to_string(kMaxN));
  Point<F> p{static_cast<int>(m.rows()), m};
  const int n = p.n;
  const F qinv = F(1) / q;
  auto fail = [](const std::string& rel, const std::string& why) { throw NotAPoint("relation " + rel + " fails: " + why); };
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l) {
          if (!FieldTraits<F>::is_zero(p(i, j) * p(i, l) - q * p(i, l) * p(i, j)))
            fail(x(i, j) + "*" + x(i, l) + " = q*" + x(i, l) + "*" + x(i, j), "two nonzero entries in row " + std::to_string(i));
          if (!FieldTraits<F>::is_zero(p(k, j) * p(k, l) - q * p(k, l) * p(k, j)))
            fail(x(k, j) + "*" + x(k, l) + " = q*" + x(k, l) + "*" + x(k, j), "two nonzero entries in row " + std::to_string(k));
          if (!FieldTraits<F>::is_zero(p(i, j) * p(k, j) - q * p(k, j) * p(i, j)))
            fail(x(i, j) + "*" + x(k, j) + " = q*" + x(k, j) + "*" + x(i, j), "two nonzero entries in column " + std::to_string(j));
          if (!FieldTraits<F>::is_zero(p(i, l) * p(k, l) - q * p(k, l) * p(i, l)))
            fail(x(i, l) + "*" + x(k, l) + " = q*" + x(k, l) + "*" + x(i, l), "two nonzero entries in column " + std::to_string(l));
          if (!FieldTraits<F>::is_zero(p(i, j) * p(k, l) - p(k, l) * p(i, j) - (q - qinv) * p(i, l) * p(k, j)))
            fail(x(i, j) + "*" + x(k, l) + " - " + x(k, l) + "*" + x(i, j) + " = (q-1/q)*" + x(i, l) + "*" + x(k, j),
                 "entries at (" + std::to_string(i) + "," + std::to_string(l) + ") and (" + std::to_string(k) + "," +
                     std::to_string(j) + ") are both nonzero");
        }
  return p;
}

template <class F>
F evaluate(const Point<F>& xi, const MqElement<F>& f) {
  if (f.n != xi.n) throw SizeMismatch("point and element sizes differ");
  F sum(0);
  for (const auto& [m, c] : f.terms) {
    F v = c;
    for (int k = 0; k < xi.n * xi.n && !FieldTraits<F>::is_zero(v); ++k)
      if (m[k] != 0) v *= xi(gen_row(k, xi.n), gen_col(k, xi.n)).pow(m[k]);
    sum += v;
  }
  return sum;
}

Point<Rational> specialize(const Point<RatFunc>& xi, const Rational& q0) {
  return Point<Rational>{xi.n, specialize(xi.entries, q0)};
}

template <class F>
Point<F> diagonal_point(const std::vector<F>& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  Matrix<F> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = i == j ? d[static_cast<std::size_t>(i)] : F(0);
  return Point<F>{static_cast<int>(n), m};
}

template struct Point<Rational>;
template struct Point<RatFunc>;
template Point<Rational> validate_point<Rational>(const Matrix<Rational>&, const Rational&);
template Point<RatFunc> validate_point<RatFunc>(const Matrix<RatFunc>&, const RatFunc&);
template Rational evaluate<Rational>(const Point<Rational>&, const MqElement<Rational>&);
template RatFunc evaluate<RatFunc>(const Point<RatFunc>&, const MqElement<RatFunc>&);
template Point<Rational> diagonal_point<Rational>(const std::vector<Rational>&);
template Point<RatFunc> diagonal_point<RatFunc>(const std::vector<RatFunc>&);

}  // namespace qadj
