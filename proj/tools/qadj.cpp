// Command-line front end: every command prints one JSON report.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qadj/checks.hpp"
#include "qadj/coorbit.hpp"
#include "qadj/io.hpp"
#include "qadj/parse.hpp"

using namespace qadj;

namespace {

struct RunConfig {
  int n = 2;
  int degree = 2;
  std::string point;
  std::string coaction = "beta";
  bool q1 = false;
  bool basis = false;
  std::string out;
  std::optional<int> max_degree;
  int max_n = 3;
  std::string expr;
  std::string of = "image";
};

int default_max_degree(int n) {
  switch (n) {
    case 1: return 8;
    case 2: return 4;
    case 3: return 2;
    default: return 1;
  }
}

void check_ceiling(const RunConfig& cfg, int n, int d) {
  if (n > cfg.max_n) throw Error("N = " + std::to_string(n) + " exceeds --max-n " + std::to_string(cfg.max_n));
  const int cap = cfg.max_degree.value_or(default_max_degree(n));
  if (d > cap) throw Error("degree " + std::to_string(d) + " exceeds the ceiling " + std::to_string(cap) + " for N = " + std::to_string(n) + " (raise with --max-degree)");
  if (d < 0) throw Error("degree must be nonnegative");
}

Coaction coaction_of(const std::string& s) { return s == "alpha" ? Coaction::Alpha : Coaction::Beta; }

Json header(const std::string& command) {
  Json j;
  j["command"] = command;
  j["conventions"] = conventions_json();
  return j;
}

Json checks_json(const std::vector<Check>& cs, bool& ok) {
  Json arr = Json::array();
  for (const auto& c : cs) {
    Json item{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    arr.push_back(item);
    ok = ok && c.pass;
  }
  return arr;
}

Json decomposition_json(const Character& z) {
  try {
    Json d = Json::object();
    for (const auto& [m, k] : decompose_sl2(z)) d[std::to_string(m)] = k;
    return d;
  } catch (const Error&) {
    return nullptr;
  }
}

// --- kernel -------------------------------------------------------------

template <class F>
Json kernel_report(QuantumGroup<F>& G, const Point<F>& xi, Coaction which, int d, bool basis) {
  const auto k = kernel_basis(G, xi, which, d);
  const auto z = ideal_truncation(G, xi, which, d);
  Json r;
  r["kernel_dimension"] = k.dim();
  r["ideal_dimension"] = z.space.dim();
  r["ideal_spanning_products"] = z.spanning;
  r["ideal_in_kernel"] = contains(k, z.space);
  r["equal"] = same_subspace(k, z.space);
  if (basis) {
    r["kernel"] = subspace_json(G, k);
    r["ideal"] = subspace_json(G, z.space);
  }
  return r;
}

// --- image --------------------------------------------------------------

template <class F>
Json image_report(QuantumGroup<F>& G, const Point<F>& xi, Coaction which, int d, bool basis) {
  const auto img = image_data(G, xi, which, d);
  Json r;
  r["dimension"] = img.space.dim();
  r["character"] = character_json(img.character);
  if (G.n() == 2) {
    const Character z = to_z(img.character);
    r["character_z"] = character_json(z);
    r["decomposition"] = decomposition_json(z);
  }
  if (xi.is_diagonal()) {
    bool each = true;
    for (const Monomial& m : G.mq().monomial_basis(d)) each = each && G.is_diag_coinvariant(coorbit(G, xi, G.mq().monomial(m), which));
    r["images_diag_coinvariant"] = each;
    r["in_diag_coinvariant_truncation"] = contains(diag_coinv_truncation(G, d), img.space);
  } else {
    r["images_diag_coinvariant"] = nullptr;
  }
  if (G.n() == 2) {
    std::vector<Terms<F>> sl;
    for (Eigen::Index i = 0; i < img.space.vectors.rows(); ++i)
      sl.push_back(G.project_sl(GlqElement<F>{MqElement<F>(2, element_of(img.space, i)), d}).terms);
    const auto proj = span_of(Leg::Slq, 2, 0, sl);
    const auto sphere = sphere_span(G, d);
    r["sl_image_dimension"] = proj.dim();
    r["sphere_span_dimension"] = sphere.dim();
    r["contains_sphere_span"] = contains(proj, sphere);
    Json eq = nullptr;
    for (int k = 0; k <= d; ++k)
      if (same_subspace(proj, sphere_span(G, k))) {
        eq = k;
        break;
      }
    r["equals_sphere_span_of_length"] = eq;
  }
  if (basis) r["image"] = subspace_json(G, img.space);
  return r;
}

// --- eval ---------------------------------------------------------------

template <class F>
Json eval_report(QuantumGroup<F>& G, const Point<F>& xi, Coaction which, const MqElement<F>& f) {
  const auto v = coorbit(G, xi, f, which);
  Json r;
  r["input"] = G.mq().to_string(f);
  r["value_at_point"] = evaluate(xi, f).to_string();
  r["coorbit"] = G.to_string(v);
  r["det_power"] = v.detpow;
  if (G.n() == 2) r["sl"] = G.to_string(G.project_sl(v));
  return r;
}

// --- identities ---------------------------------------------------------

Json identities(const RunConfig& cfg, bool& ok) {
  const RatFunc q = RatFunc::q();
  Json items = Json::array();
  auto add = [&](const std::string& name, bool pass) {
    items.push_back(Json{{"name", name}, {"pass", pass}});
    ok = ok && pass;
  };
  QuantumGroup<RatFunc> G(2, q);
  const auto generic = diagonal_point<RatFunc>({2, 3});
  Matrix<RatFunc> nm(2, 2);
  nm << RatFunc(0), RatFunc(1), RatFunc(0), RatFunc(0);
  const auto nil = validate_point(nm, q);
  for (int n = 0; n <= 4; ++n) {
    add("psi beta-diag diag(2,3) n=" + std::to_string(n), psi_power_check(G, generic, n, PowerVariant::BetaDiag));
    add("phi alpha-diag diag(2,3) n=" + std::to_string(n), psi_power_check(G, generic, n, PowerVariant::AlphaDiag));
    add("psi beta-nilpotent n=" + std::to_string(n), psi_power_check(G, nil, n, PowerVariant::BetaNilpotent));
  }
  for (const auto& [label, s] : {std::pair<std::string, RatFunc>{"1", 1}, {"q^2", q * q}, {"q^4", q.pow(4)}})
    for (int n = 0; n <= 4; ++n)
      add("psi beta-diag diag(" + label + ",1) n=" + std::to_string(n),
          psi_power_check(G, diagonal_point<RatFunc>({s, 1}), n, PowerVariant::BetaDiag));
  for (int r = 0; r <= 5; ++r) add("difference identity r=" + std::to_string(r), difference_identity(r));
  for (int r = 0; r <= 4; ++r) {
    const auto s = sphere_span(G, r);
    Character expect(1);
    for (int l = 0; l <= r; ++l) expect += chi_T(2 * l);
    add("sphere span r=" + std::to_string(r) + " dimension (r+1)^2", s.dim() == (r + 1) * (r + 1));
    add("sphere span r=" + std::to_string(r) + " character", character_of(s) == expect);
  }
  for (int n = 2; n <= std::min(3, cfg.max_n); ++n) {
    QuantumGroup<RatFunc> H(n, q);
    for (const auto& c : hopf_axioms(H)) add(c.name, c.pass);
  }
  for (int d = 0; d <= 3; ++d) add("Hilbert series at q=1 diag(2,3) d=" + std::to_string(d), compare_at_q1(generic, d));
  return items;
}

// --- character ----------------------------------------------------------

Json character_report(const RunConfig& cfg) {
  Json r;
  r["of"] = cfg.of;
  Character c;
  if (cfg.of == "chi") c = chi_T(cfg.degree);
  else if (cfg.of == "cr") c = character_Cr(cfg.degree);
  else if (cfg.of == "sphere") {
    QuantumGroup<RatFunc> G(2, RatFunc::q());
    c = character_of(sphere_span(G, cfg.degree));
  } else if (cfg.of == "diag-coinv") {
    QuantumGroup<RatFunc> G(cfg.n, RatFunc::q());
    c = character_of(diag_coinv_truncation(G, cfg.degree));
  } else if (cfg.of == "image") {
    const auto xi = load_point(cfg.point);
    check_ceiling(cfg, xi.n, cfg.degree);
    QuantumGroup<RatFunc> G(xi.n, RatFunc::q());
    c = image_data(G, xi, coaction_of(cfg.coaction), cfg.degree).character;
    if (xi.n == 2) r["character_z"] = character_json(to_z(c));
  } else {
    throw Error("unknown --of " + cfg.of);
  }
  r["character"] = character_json(c);
  r["value_at_1"] = c.at_one();
  if (c.nvars == 1) r["decomposition"] = decomposition_json(c);
  return r;
}

void emit(const RunConfig& cfg, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error("cannot write " + cfg.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum matrix co-orbit engine"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* c) {
    c->add_option("--out", cfg.out, "Write the report here instead of stdout");
    c->add_option("--max-degree", cfg.max_degree, "Degree ceiling (default 4 for N=2, 2 for N=3)");
    c->add_option("--max-n", cfg.max_n, "Size ceiling")->capture_default_str();
  };
  auto point_opts = [&](CLI::App* c) {
    c->add_option("--point", cfg.point, "Point as inline JSON or a file")->required();
    c->add_option("--coaction", cfg.coaction, "alpha or beta")->check(CLI::IsMember({"alpha", "beta"}))->capture_default_str();
    c->add_flag("--q1", cfg.q1, "Run with q = 1");
  };

  auto* verify = app.add_subcommand("verify-coinvariants", "Coinvariance and commutation of sigma_i, tau_i");
  verify->add_option("--n", cfg.n, "Matrix size")->capture_default_str();
  common(verify);

  auto* kern = app.add_subcommand("kernel", "Truncated kernel against the coinvariant ideal");
  point_opts(kern);
  kern->add_option("--degree", cfg.degree, "Degree bound")->capture_default_str();
  kern->add_flag("--basis", cfg.basis, "Include the subspaces");
  common(kern);

  auto* image = app.add_subcommand("image", "Truncated co-orbit image");
  point_opts(image);
  image->add_option("--degree", cfg.degree, "Degree bound")->capture_default_str();
  image->add_flag("--basis", cfg.basis, "Include the subspace");
  common(image);

  auto* ids = app.add_subcommand("identities", "Closed forms, character identities, Hopf axioms, q=1 comparison");
  common(ids);

  auto* ev = app.add_subcommand("eval", "Apply the co-orbit map to an expression");
  point_opts(ev);
  ev->add_option("--expr", cfg.expr, "Element of O(M_q), e.g. \"x21^2 - q*x11*x22\"")->required();
  common(ev);

  auto* chr = app.add_subcommand("character", "Characters of named spaces");
  chr->add_option("--of", cfg.of, "image | sphere | diag-coinv | cr | chi")
      ->check(CLI::IsMember({"image", "sphere", "diag-coinv", "cr", "chi"}))
      ->capture_default_str();
  chr->add_option("--degree", cfg.degree, "Degree bound, length, r, or 2l")->capture_default_str();
  chr->add_option("--n", cfg.n, "Matrix size for diag-coinv")->capture_default_str();
  chr->add_option("--point", cfg.point, "Point for --of image");
  chr->add_option("--coaction", cfg.coaction, "alpha or beta")->check(CLI::IsMember({"alpha", "beta"}));
  common(chr);

  CLI11_PARSE(app, argc, argv);

  try {
    bool ok = true;
    Json j;
    if (verify->parsed()) {
      check_ceiling(cfg, cfg.n, 0);
      if (cfg.n < 1 || cfg.n > kMaxN) throw SizeMismatch("N must be between 1 and " + std::to_string(kMaxN));
      j = header("verify-coinvariants");
      j["n"] = cfg.n;
      QuantumGroup<RatFunc> G(cfg.n, RatFunc::q());
      j["checks"] = checks_json(coinvariant_checks(G), ok);
    } else if (kern->parsed() || image->parsed() || ev->parsed()) {
      const auto xi = load_point(cfg.point);
      const Coaction which = coaction_of(cfg.coaction);
      const std::string name = kern->parsed() ? "kernel" : image->parsed() ? "image" : "eval";
      check_ceiling(cfg, xi.n, ev->parsed() ? 0 : cfg.degree);
      j = header(name);
      j["point"] = point_json(xi);
      j["coaction"] = cfg.coaction;
      j["q"] = cfg.q1 ? "1" : "symbolic";
      if (!ev->parsed()) j["degree"] = cfg.degree;
      if (cfg.q1) {
        QuantumGroup<Rational> G(xi.n, Rational(1));
        const Point<Rational> x1 = specialize(xi, Rational(1));
        if (kern->parsed()) j["result"] = kernel_report(G, x1, which, cfg.degree, cfg.basis);
        else if (image->parsed()) j["result"] = image_report(G, x1, which, cfg.degree, cfg.basis);
        else {
          MqAlgebra<RatFunc> A(xi.n, RatFunc::q());
          const auto f = specialize(parse_mq(A, cfg.expr), Rational(1));
          check_ceiling(cfg, xi.n, std::max(0, f.degree()));
          j["result"] = eval_report(G, x1, which, f);
        }
      } else {
        QuantumGroup<RatFunc> G(xi.n, RatFunc::q());
        if (kern->parsed()) j["result"] = kernel_report(G, xi, which, cfg.degree, cfg.basis);
        else if (image->parsed()) j["result"] = image_report(G, xi, which, cfg.degree, cfg.basis);
        else {
          const auto f = parse_mq(G.mq(), cfg.expr);
          check_ceiling(cfg, xi.n, std::max(0, f.degree()));
          j["result"] = eval_report(G, xi, which, f);
        }
      }
    } else if (ids->parsed()) {
      j = header("identities");
      j["items"] = identities(cfg, ok);
    } else if (chr->parsed()) {
      j = header("character");
      j["result"] = character_report(cfg);
    }
    j["ok"] = ok;
    emit(cfg, j);
    return ok ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
