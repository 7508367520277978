// adnil: exact verification calculus for ad-nilpotent Lie sets, divided
// powers, quadratic Jordan algebras and Zassenhaus filtrations over F_p.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adnil/divpoly.hpp"
#include "adnil/fixtures.hpp"
#include "adnil/formats.hpp"
#include "adnil/ja.hpp"
#include "adnil/jordan.hpp"
#include "adnil/polymap.hpp"
#include "adnil/sandwich.hpp"
#include "adnil/suites.hpp"
#include "adnil/zassenhaus.hpp"

using nlohmann::ordered_json;
using namespace adnil;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;   // a mathematical violation was found
constexpr int kExitError = 2;  // bad input or resource limit

struct Output {
  bool structured = false;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ordered_json doc;

  void init(const std::string& command, const std::vector<std::string>& inputs) {
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["status"] = "pass";
    doc["witnesses"] = ordered_json::array();
  }
  void witness(const std::string& w) {
    doc["witnesses"].push_back(w);
    doc["status"] = "fail";
  }
  void note(const std::string& key, const ordered_json& v) { doc[key] = v; }
  int finish(std::ostream& os) {
    if (timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      doc["timing_ms"] = ms;
    } else {
      doc["timing_ms"] = nullptr;
    }
    if (structured) {
      os << doc.dump(2) << "\n";
    } else {
      os << doc["command"].get<std::string>() << ": " << doc["status"].get<std::string>() << "\n";
      for (auto& w : doc["witnesses"]) os << "  witness: " << w.get<std::string>() << "\n";
      for (auto& [k, v] : doc.items())
        if (k != "command" && k != "status" && k != "witnesses" && k != "inputs" &&
            k != "timing_ms")
          os << "  " << k << ": " << v.dump() << "\n";
    }
    return doc["status"] == "pass" ? kExitPass : kExitFail;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FpVec parse_element(const LieAlgebra& L, const std::string& spec) {
  // either a basis name or comma-separated coordinates
  int idx = L.name_index(spec);
  if (idx >= 0) return L.basis_vec((std::size_t)idx);
  Fp f(L.modulus());
  FpVec v = L.zero();
  std::stringstream ss(spec);
  std::string tok;
  std::size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= L.dim()) throw ParseError("element has too many coordinates");
    v[i++] = f.reduce(std::stoll(tok));
  }
  if (i != L.dim()) throw ParseError("element has too few coordinates");
  return v;
}

// ---- suite pieces reused by the acceptance tests ----

int run_validate(const std::string& path, Output& out) {
  out.init("validate", {path});
  LieAlgebra L = parse_lie_file(read_file(path));
  auto rep = L.validate();
  for (const auto& v : rep.violations)
    out.witness(v.kind + " at basis triple (" + std::to_string(v.i + 1) + "," +
                std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) + ")");
  out.note("dim", L.dim());
  return out.finish(std::cout);
}

int run_series(const std::string& path, Output& out) {
  out.init("series", {path});
  LieAlgebra L = parse_lie_file(read_file(path));
  SeriesResult s = lower_central_series(L);
  out.note("dims", s.dims);
  if (s.nilpotency_degree)
    out.note("nilpotency_degree", *s.nilpotency_degree);
  else
    out.note("nilpotency_degree", nullptr);
  return out.finish(std::cout);
}

int run_lieset(const std::string& path, const std::vector<std::string>& gens, int bound,
               Output& out) {
  out.init("lieset", {path});
  LieAlgebra L = parse_lie_file(read_file(path));
  std::vector<FpVec> gv;
  for (const auto& g : gens) gv.push_back(parse_element(L, g));
  auto entries = lie_set(L, gv, bound);
  ordered_json arr = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json j;
    j["word"] = e.word;
    j["length"] = e.length;
    j["coords"] = e.value;
    arr.push_back(j);
  }
  out.note("elements", arr);
  out.note("count", entries.size());
  return out.finish(std::cout);
}

int run_identity_check(const std::string& path, const std::string& expr, Output& out) {
  out.init("identity check", {path, expr});
  LieAlgebra L = parse_lie_file(read_file(path));
  LiePolynomial f = parse_identity(expr, L.modulus());
  auto w = check_multilinear_identity(L, f);
  if (w) {
    std::string names;
    for (std::size_t i : w->tuple) names += (names.empty() ? "" : ",") + L.name(i);
    out.witness("nonzero at (" + names + ")");
  }
  return out.finish(std::cout);
}

int run_kostrikin_file(const std::string& path, const std::string& elem, int n, Output& out) {
  out.init("kostrikin", {path, elem});
  LieAlgebra L = parse_lie_file(read_file(path));
  FpVec a = parse_element(L, elem);
  auto entries = kostrikin_descent(L, a, n);
  int max_index = 0;
  for (const auto& e : entries) max_index = std::max(max_index, e.ad_index);
  out.note("n", n);
  out.note("max_output_ad_index", max_index);
  if (max_index > n - 1) out.witness("output index exceeds n-1");
  return out.finish(std::cout);
}

int run_kostrikin_suite(Output& out);
int run_upower_identities(int trials, Output& out);
int run_linearized_descent(Output& out);
int run_jacobson(uint32_t p, Output& out);
int run_jordan_models(Output& out);
int run_jordan_verify(const std::string& path, Output& out);
int run_fgg(const std::string& path, const std::string& elem, Output& out);
int run_jordan_sym(const std::string& path, int n, Output& out);
int run_ja(Output& out);
int run_azd_suite(Output& out);
int run_zassenhaus(const std::string& path, uint32_t p_override, Output& out);
int run_lin_suite(Output& out);

}  // namespace



namespace {

int run_kostrikin_suite(Output& out) {
  out.init("kostrikin suite", {});
  int count = 0;
  for (auto& inst : adnil::suites::kostrikin_instances()) {
    auto entries = kostrikin_descent(inst.L, inst.a, inst.n);
    int max_index = 0;
    for (const auto& e : entries) max_index = std::max(max_index, e.ad_index);
    if (max_index > inst.n - 1) out.witness(inst.name + ": index bound violated");
    ++count;
  }
  out.note("instances", count);
  return out.finish(std::cout);
}

int run_upower_identities(int trials, Output& out) {
  out.init("divided identities", {});
  auto stats = adnil::suites::upower_identity_suite(trials, 20240811);
  out.note("families", stats.families);
  if (stats.failures) out.witness(stats.first_failure);
  return out.finish(std::cout);
}

int run_linearized_descent(Output& out) {
  out.init("divided descent", {});
  auto res = adnil::suites::linearized_descent_suite();
  out.note("m2_instances", res.m2_instances);
  out.note("m4_instances", res.m4_instances);
  if (!res.ok) out.witness(res.first_failure);
  return out.finish(std::cout);
}


DPNodePtr tree_to_dp(const BTreePtr& t) {
  if (t->leaf >= 0) return DPNode::make_var(t->leaf);
  return DPNode::make_bracket({tree_to_dp(t->l), tree_to_dp(t->r)});
}

int run_probe(const std::string& path, const std::string& expr, int imax, Output& out) {
  out.init("divided probe", {path, expr});
  LieAlgebra L = parse_lie_file(read_file(path));
  if (!L.graded()) throw ParseError("regularity probe needs a graded algebra (grade header)");
  LiePolynomial f = parse_identity(expr, L.modulus());
  if (f.terms.size() != 1)
    throw ParseError("probe expressions must be a single bracket monomial");
  int budget = std::max(2 * f.degree(), 4);
  DividedPolynomial w(L, budget, f.nvars, tree_to_dp(f.terms[0].tree));
  auto rows = regularity_probe(w, imax);
  ordered_json table = ordered_json::array();
  bool regular = true;
  for (auto& r : rows) {
    ordered_json j;
    j["i"] = r.i;
    j["identically_zero"] = r.identically_zero;
    table.push_back(j);
    if (r.identically_zero) regular = false;
  }
  out.note("table", table);
  out.note("regular_up_to_imax", regular);
  return out.finish(std::cout);
}

int run_jacobson(uint32_t p, Output& out) {
  out.init("divided jacobson", {std::to_string(p)});
  if (!jacobson_symmetrization_identity(p)) out.witness("identity fails at p=" + std::to_string(p));
  return out.finish(std::cout);
}

int run_jordan_verify(const std::string& path, Output& out) {
  out.init("jordan verify", {path});
  QuadraticJordanAlgebra J = parse_jordan_file(read_file(path));
  auto rep = verify_quadratic_jordan(J);
  for (const auto& f : rep.failures) out.witness(f.axiom + ": " + f.monomial + "; " + f.concrete);
  out.note("dim", J.dim());
  return out.finish(std::cout);
}

int run_jordan_models(Output& out) {
  out.init("jordan models", {});
  auto check = [&](const std::string& name, const QuadraticJordanAlgebra& J) {
    auto rep = verify_quadratic_jordan(J);
    if (!rep.ok)
      out.witness(name + ": " + rep.failures[0].axiom + " " + rep.failures[0].monomial);
  };
  for (uint32_t p : {2u, 3u, 5u})
    check("M2(F" + std::to_string(p) + ")^+", plus_algebra(AssocAlgebra::matrix_algebra(p, 2)));
  check("H(M2(F5),t)",
        hermitian_algebra(AssocAlgebra::matrix_algebra(5, 2), transpose_involution(5, 2)));
  {
    FpVec qdiag{1, 1, 1};
    std::vector<FpVec> qpol(3, FpVec(3, 0));
    FpVec basepoint{1, 0, 0};
    check("J(q,1)/F3", quadratic_form_algebra(3, 3, qdiag, qpol, basepoint));
  }
  // seeded corruption must fail
  {
    QuadraticJordanAlgebra bad = plus_algebra(AssocAlgebra::matrix_algebra(5, 2));
    FpMatrix m = bad.Q_basis(0);
    m.at(3, 0) = (m.at(3, 0) + 1) % 5;
    bad.set_Q(0, m);
    auto rep = verify_quadratic_jordan(bad);
    if (rep.ok) out.witness("corrupted Q passed the verifier");
    out.note("corruption_detected", !rep.ok);
  }
  return out.finish(std::cout);
}

int run_fgg(const std::string& path, const std::string& elem, Output& out) {
  out.init("jordan fgg", {path, elem});
  LieAlgebra L = parse_lie_file(read_file(path));
  FpVec s = parse_element(L, elem);
  FggResult res = fgg_quotient(L, s);
  out.note("K_dim", res.K.dim());
  out.note("quotient_dim", res.J.dim());
  if (!res.K_is_ideal) out.witness("K is not an ideal of (L,o)");
  if (!res.j1_ok) out.witness("J1 fails");
  if (!res.j2_ok) out.witness("J2 fails");
  return out.finish(std::cout);
}

int run_jordan_sym(const std::string& path, int n, Output& out) {
  out.init("jordan sym", {path, std::to_string(n)});
  QuadraticJordanAlgebra J = parse_jordan_file(read_file(path));
  auto w = sym_identity(J, n);
  if (w) {
    std::string t;
    for (auto i : w->tuple) t += (t.empty() ? "" : ",") + std::to_string(i + 1);
    out.witness("Sym_" + std::to_string(n) + " nonzero at (" + t + ")");
  }
  return out.finish(std::cout);
}

int run_ja(Output& out) {
  out.init("jordan ja", {});
  LieAlgebra L = fixtures::strictly_upper_lie(5, 4);
  int budget = 3;
  EnvelopeElement a(L, budget);
  a.add_component(1, L.basis_vec((std::size_t)L.name_index("e12")));
  a.add_component(2, L.basis_vec((std::size_t)L.name_index("e34")));
  JaData data(L, budget, 1, a);
  JaConstruction ja = ja_construct(data);
  out.note("quotient_dim", ja.J.dim());
  if (ja.J.dim() == 0) out.witness("J_a is zero");
  if (!ja.well_defined) out.witness("operations not well-defined modulo K_a");
  if (!ja.axiom_report.ok)
    out.witness("axiom " + ja.axiom_report.failures[0].axiom + " fails on J_a");
  EnvelopeElement b =
      EnvelopeElement::single(L, budget, 4, L.basis_vec((std::size_t)L.name_index("e23")));
  auto sw = sandwich_from_azd(data, ja, b);
  if (sw.value.is_zero()) out.witness("azd sandwich output is zero");
  if (!sw.sandwich_direct) out.witness("azd sandwich output fails sandwich_check");
  if (!sw.sandwich_via_u2) out.witness("azd sandwich output fails the U_2 route");
  return out.finish(std::cout);
}

int run_azd_suite(Output& out) {
  out.init("jordan azd", {});
  // bundled nil quadratic Jordan algebra with x^3 = 0: strictly upper 3x3
  {
    QuadraticJordanAlgebra J = plus_algebra(AssocAlgebra::strictly_upper(5, 3));
    for (std::size_t i = 0; i < J.dim(); ++i) {
      auto res = azd_powers(J, J.basis_vec(i), 3);
      if (res.high_powers.size() != 2) out.witness("missing high powers");
      if (!res.strong_hypothesis || !res.low_power)
        out.witness("strong hypothesis fails on n3^+");
    }
  }
  // the 10-dim free nil-3 algebra: nonzero pushforward
  {
    QuadraticJordanAlgebra J = plus_algebra(fixtures::nil3_free2(5));
    FpVec a = J.basis_vec(0), b = J.basis_vec(1);
    FpVec c = azd_pushforward(J, a, b);
    if (vec_is_zero(c)) out.witness("pushforward b Q(a) is zero");
    if (!azd_check(J, c)) out.witness("pushforward is not an azd");
  }
  return out.finish(std::cout);
}

int run_zassenhaus(const std::string& path, uint32_t p_override, Output& out) {
  out.init("zassenhaus", {path});
  GroupFile gf = parse_group_file(read_file(path));
  uint32_t p = p_override ? p_override : gf.p;
  FiniteGroup G = enumerate_group(gf.gens, gf.names);
  if (G.associativity_witness()) out.witness("multiplication table is not associative");
  out.note("order", G.order());
  if (!G.is_p_group(p))
    out.note("warning", "group order is not a power of p; filtration may not reach 1");
  FiltrationResult F = augmentation_filtration(G, p);
  auto checks = filtration_checks(G, F, p);
  if (!checks.subgroups_ok) out.witness("G_i fails to be a normal chain");
  if (!checks.commutator_grading_ok) out.witness("[G_i,G_j] escapes G_{i+j}");
  if (!checks.elementary_abelian_ok) out.witness("a quotient is not elementary abelian");
  std::vector<std::size_t> sg_sizes;
  for (auto& s : F.subgroups) sg_sizes.push_back(s.size());
  out.note("subgroup_sizes", sg_sizes);
  out.note("reaches_identity", F.reaches_identity);
  if (F.reaches_identity) {
    LpAlgebra lp = build_Lp(G, p);
    out.note("grades", lp.grade_dims);
    auto rep = lp.L.validate();
    if (!rep.ok) out.witness("L_p(G) fails Jacobi/grading validation");
    if (!homogeneous_ad_nilpotent(lp)) out.witness("a homogeneous element is not ad-nilpotent");
  } else {
    out.note("grades", nullptr);
    out.note("residually_p_at_this_level", false);
  }
  return out.finish(std::cout);
}

int run_lin_suite(Output& out) {
  out.init("identity linsuite", {});
  auto res = adnil::suites::linearization_suite(50, 424242);
  out.note("maps_checked", res.maps_checked);
  out.note("maps_agreeing", res.maps_agreeing);
  if (res.maps_agreeing != res.maps_checked)
    out.witness("a random map disagrees with the direct expansion");
  if (!res.value_span_ok) out.witness("value_span(f) != value_span(f~) on the fixture");
  return out.finish(std::cout);
}


}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adnil: exact Lie/Jordan/Zassenhaus verification over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--structured", out.structured, "emit a JSON report");
  app.add_flag("--timing", out.timing, "include timing in the report");

  std::string path, elem, expr;
  int bound = 3, n = 4, trials = 100, sym_n = 3;
  uint32_t p_opt = 0;
  std::vector<std::string> gens;

  auto* v = app.add_subcommand("validate", "validate a .lie file");
  v->add_option("file", path)->required();

  auto* se = app.add_subcommand("series", "lower central series of a .lie algebra");
  se->add_option("file", path)->required();

  auto* ls = app.add_subcommand("lieset", "Lie set closure of generators");
  ls->add_option("file", path)->required();
  ls->add_option("--gens", gens, "generators (names or coordinate lists)")->required();
  ls->add_option("--bound", bound, "commutator length bound");

  auto* ko = app.add_subcommand("kostrikin", "Kostrikin descent");
  ko->add_option("file", path);
  ko->add_option("--elem", elem, "element a");
  ko->add_option("--n", n, "ad-nilpotency degree");
  bool ko_suite = false;
  ko->add_flag("--suite", ko_suite, "run the bundled instance suite");

  auto* dv = app.add_subcommand("divided", "divided-power operator suites");
  dv->require_subcommand(1);
  auto* dv9 = dv->add_subcommand("identities", "randomized divided-power identity suite");
  dv9->add_option("--trials", trials);
  auto* dv34 = dv->add_subcommand("descent", "linearized Kostrikin descent instances");
  (void)dv34;
  auto* dvj = dv->add_subcommand("jacobson", "free-associative symmetrization identity");
  dvj->add_option("--p", p_opt)->required();
  int imax = 3;
  auto* dvp = dv->add_subcommand("probe", "regularity probe of a bracket monomial");
  dvp->add_option("file", path)->required();
  dvp->add_option("--expr", expr)->required();
  dvp->add_option("--imax", imax);

  auto* jo = app.add_subcommand("jordan", "quadratic Jordan operations");
  jo->require_subcommand(1);
  auto* jver = jo->add_subcommand("verify", "verify M1-M6 for a .jord file");
  jver->add_option("file", path)->required();
  auto* jmod = jo->add_subcommand("models", "bundled model suite plus seeded corruption");
  (void)jmod;
  auto* jfgg = jo->add_subcommand("fgg", "Lie-to-Jordan quotient (L,o)/K");
  jfgg->add_option("file", path)->required();
  jfgg->add_option("--s", elem, "element s with ad(s)^3 = 0")->required();
  auto* jsym = jo->add_subcommand("sym", "Sym_n identity check");
  jsym->add_option("file", path)->required();
  jsym->add_option("--n", sym_n)->required();
  auto* jja = jo->add_subcommand("ja", "bundled J_a construction and the azd sandwich");
  (void)jja;
  auto* jazd = jo->add_subcommand("azd", "bundled nil-power and pushforward suite");
  (void)jazd;

  auto* za = app.add_subcommand("zassenhaus", "Zassenhaus filtration and L_p(G)");
  za->add_option("file", path)->required();
  za->add_option("-p,--p", p_opt, "prime (overrides the file header)");

  auto* id = app.add_subcommand("identity", "identity checking and linearization");
  id->require_subcommand(1);
  auto* idc = id->add_subcommand("check", "multilinear identity check on a .lie algebra");
  idc->add_option("file", path)->required();
  idc->add_option("--expr", expr, "identity expression")->required();
  auto* idl = id->add_subcommand("linsuite", "linearization agreement suite");
  (void)idl;

  for (auto* sc : app.get_subcommands({})) {
    sc->fallthrough();
    for (auto* s2 : sc->get_subcommands({})) s2->fallthrough();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (v->parsed()) return run_validate(path, out);
    if (se->parsed()) return run_series(path, out);
    if (ls->parsed()) return run_lieset(path, gens, bound, out);
    if (ko->parsed()) {
      if (ko_suite) return run_kostrikin_suite(out);
      if (path.empty() || elem.empty()) {
        std::cerr << "kostrikin: need a file and --elem (or --suite)\n";
        return kExitError;
      }
      return run_kostrikin_file(path, elem, n, out);
    }
    if (dv9->parsed()) return run_upower_identities(trials, out);
    if (dv34->parsed()) return run_linearized_descent(out);
    if (dvj->parsed()) return run_jacobson(p_opt, out);
    if (dvp->parsed()) return run_probe(path, expr, imax, out);
    if (jver->parsed()) return run_jordan_verify(path, out);
    if (jmod->parsed()) return run_jordan_models(out);
    if (jfgg->parsed()) return run_fgg(path, elem, out);
    if (jsym->parsed()) return run_jordan_sym(path, sym_n, out);
    if (jja->parsed()) return run_ja(out);
    if (jazd->parsed()) return run_azd_suite(out);
    if (za->parsed()) return run_zassenhaus(path, p_opt, out);
    if (idc->parsed()) return run_identity_check(path, expr, out);
    if (idl->parsed()) return run_lin_suite(out);
  } catch (const std::exception& e) {
    if (out.structured) {
      if (!out.doc.contains("command")) out.init("error", {});
      out.doc["status"] = "error";
      out.doc["witnesses"].push_back(e.what());
      out.finish(std::cout);
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kExitError;
  }
  std::cerr << "unknown verb\n";
  return kExitError;
}
