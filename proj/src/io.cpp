#include "qadj/io.hpp"

#include <fstream>
#include <sstream>

#include "qadj/parse.hpp"

namespace qadj {

Json conventions_json() {
  Json c;
  c["generator_order"] = "x11 < x12 < ... < x1N < x21 < ... < xNN (row-major); monomials are ordered products";
  c["relations"] = "x_ij x_il = q x_il x_ij, x_ij x_kj = q x_kj x_ij, x_il x_kj = x_kj x_il, "
                   "x_ij x_kl - x_kl x_ij = (q - 1/q) x_il x_kj for i < k, j < l";
  c["det_q"] = "sum over permutations s of (-q)^length(s) x_{1 s(1)} ... x_{N s(N)}";
  c["sigma_i"] = "sum of principal i x i quantum minors [I|I]";
  c["tau_i"] = "sum over |I| = i of q^(-2 w(I)) [I|I], w(I) = sum of the indices in I";
  c["glq_elements"] = "numerator * det_q^(-det_power)";
  c["sl2_basis"] = "a^i b^j c^k and b^l c^m d^n with (a, b, c, d) = (x11, x12, x21, x22)";
  c["sphere_generators"] = "ac, 1 + (q + 1/q) bc, db (rescaled, no square roots)";
  c["characters"] = "t_j counts column j minus det_power on O(GL_q); on O(SL_2) z counts a, c as +1 and b, d as -1; "
                    "N = 2 z-picture uses t1 -> z, t2 -> 1/z";
  c["coaction_beta"] = "h -> h_2 (x) S(h_1) h_3";
  c["coaction_alpha"] = "h -> h_2 (x) h_3 S(h_1)";
  return c;
}

Point<RatFunc> point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) throw ParseError("point JSON needs an \"entries\" array");
  const Json& e = j.at("entries");
  if (!e.is_array() || e.empty()) throw ParseError("\"entries\" must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(e.size());
  if (j.contains("n") && j.at("n").get<long>() != n) throw SizeMismatch("\"n\" does not match the number of rows");
  Matrix<RatFunc> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = e.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw SizeMismatch("point must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      const Json& v = row.at(static_cast<std::size_t>(k));
      if (v.is_string()) m(i, k) = parse_scalar(v.get<std::string>());
      else if (v.is_number_integer()) m(i, k) = RatFunc(v.get<long>());
      else throw ParseError("point entries must be strings or integers");
    }
  }
  return validate_point(m, RatFunc::q());
}

Point<RatFunc> load_point(const std::string& arg) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || arg[first] != '{') {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open point file '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("point is not valid JSON: ") + e.what());
  }
  return point_from_json(j);
}

Json point_json(const Point<RatFunc>& xi) {
  Json rows = Json::array();
  for (int i = 1; i <= xi.n; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= xi.n; ++j) row.push_back(xi(i, j).to_string());
    rows.push_back(row);
  }
  return Json{{"n", xi.n}, {"entries", rows}};
}

Json character_json(const Character& c) {
  Json terms = Json::array();
  for (auto it = c.coeffs.rbegin(); it != c.coeffs.rend(); ++it) terms.push_back(Json::array({it->first, it->second}));
  return Json{{"text", c.to_string()}, {"terms", terms}};
}

template <class F>
Json subspace_json(QuantumGroup<F>& G, const TruncatedSubspace<F>& s) {
  Json basis = Json::array();
  for (const auto& m : s.basis) basis.push_back(G.leg_monomial_string(s.ambient, m));
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < s.vectors.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < s.vectors.cols(); ++c) row.push_back(s.vectors(r, c).to_string());
    rows.push_back(row);
  }
  return Json{{"ambient", leg_name(s.ambient)}, {"n", s.n},          {"det_power", s.detpow},
              {"dimension", s.dim()},            {"basis", basis}, {"vectors", rows}};
}

template Json subspace_json<Rational>(QuantumGroup<Rational>&, const TruncatedSubspace<Rational>&);
template Json subspace_json<RatFunc>(QuantumGroup<RatFunc>&, const TruncatedSubspace<RatFunc>&);

}  // namespace qadj
