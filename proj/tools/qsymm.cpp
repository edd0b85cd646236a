#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "qsymm/aw_ops.hpp"
#include "qsymm/expr.hpp"
#include "qsymm/mk_poly.hpp"
#include "qsymm/quantum_rep.hpp"
#include "qsymm/radial.hpp"
#include "qsymm/serialize.hpp"
#include "qsymm/verify.hpp"

using namespace qsymm;

namespace {

struct Global {
  std::string format = "json";
  std::string out;
  int jobs = 1;
  int trunc = 40;
  unsigned seed = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot write " + g.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  if (!f) throw std::runtime_error("cannot write " + g.out);
}

void emit_json(const Global& g, const Json& j) {
  if (g.format != "json") throw UsageError("this command only supports --format json");
  emit(g, j.dump(2));
}

void emit_poly(const Global& g, const Json& envelope, const LaurentPoly& p) {
  if (g.format == "csv")
    emit(g, poly_to_csv(p));
  else
    emit(g, envelope.dump(2));
}

// --- Askey-Wilson parameters -------------------------------------------------

struct AWOpts {
  std::string a = "symbolic", b = "symbolic", c = "symbolic", d = "symbolic", q = "symbolic";
  std::string mode = "auto";
};

void add_aw_opts(CLI::App* app, AWOpts& o) {
  app->add_option("--a", o.a, "parameter a: 'symbolic' or an expression in q");
  app->add_option("--b", o.b, "parameter b");
  app->add_option("--c", o.c, "parameter c");
  app->add_option("--d", o.d, "parameter d");
  app->add_option("--q", o.q, "base: 'symbolic', a rational, or a monomial such as q^2");
  app->add_option("--mode", o.mode, "parameter mode")->check(CLI::IsMember({"auto", "symbolic", "numeric"}));
}

VarTablePtr aw_table() {
  static const VarTablePtr t = make_vars({"z", "q", "a", "b", "c", "d"});
  return t;
}

AWParams build_aw(const AWOpts& o) {
  auto t = aw_table();
  auto get = [&](const std::string& v, const char* name) -> RatFunc {
    if (v == "symbolic") {
      if (o.mode == "numeric") throw UsageError(std::string("numeric mode needs a value for --") + name);
      return LaurentPoly::variable(t, name);
    }
    if (o.mode == "symbolic") throw UsageError("symbolic mode admits no numeric override (--" + std::string(name) + ")");
    return parse_expression(v, t);
  };
  RatFunc q = get(o.q, "q");
  LaurentPoly base = q.to_polynomial("the base must be a Laurent polynomial");
  return make_aw_params(get(o.a, "a"), get(o.b, "b"), get(o.c, "c"), get(o.d, "d"), base);
}

Json aw_params_json(const AWParams& p) {
  return Json{{"a", p.a.to_string()}, {"b", p.b.to_string()}, {"c", p.c.to_string()}, {"d", p.d.to_string()},
              {"base", p.base.to_string()}};
}

Json eigen_report_json(const EigenReport& r) {
  Json e = Json::array();
  for (const auto& x : r.entries)
    e.push_back({{"n", x.n}, {"pass", x.pass}, {"eigenvalue", x.eigenvalue.to_string()},
                 {"residual", x.residual.to_string()}});
  return e;
}

// --- Macdonald / Koornwinder -------------------------------------------------

struct MKOpts {
  std::string root = "A1";
  std::string k = "1";
  std::string abcd;  // koornwinder when set
  std::string base = "q";
  int t_exp = 0;
  std::string lambda = "1,0";
  std::string route = "auto";
};

void add_mk_opts(CLI::App* app, MKOpts& o, bool lambda_max) {
  app->add_option("--root", o.root, "root system, e.g. A2, C2, BC1");
  app->add_option("--k", o.k, "multiplicity: 'k' or by squared length 'len2:k,...'");
  app->add_option("--abcd", o.abcd, "Koornwinder a,b,c,d as expressions in q (BC only)");
  app->add_option("--base", o.base, "base as a monomial in q");
  app->add_option("--t-exp", o.t_exp, "Koornwinder t = base^t_exp");
  app->add_option(lambda_max ? "--lambda-max" : "--lambda", o.lambda, "dominant weight, comma separated");
  if (!lambda_max)
    app->add_option("--route", o.route, "construction route")->check(CLI::IsMember({"auto", "gram-schmidt", "eigen"}));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

MKWeightSpec build_mk(const MKOpts& o) {
  auto rs = parse_root_system(o.root);
  auto t = mk_table(rs);
  LaurentPoly base = parse_expression(o.base, t).to_polynomial("the base must be a monomial in q");
  if (!o.abcd.empty()) {
    if (rs.kind != RootKind::BC) throw UsageError("--abcd needs a BC root system");
    auto parts = split(o.abcd, ',');
    if (parts.size() != 4) throw UsageError("--abcd needs four expressions");
    std::array<RatFunc, 4> abcd{parse_expression(parts[0], t), parse_expression(parts[1], t),
                                parse_expression(parts[2], t), parse_expression(parts[3], t)};
    return koornwinder_spec(rs.rank, t, base, abcd, o.t_exp);
  }
  std::map<int, ExactScalar> by_len;
  if (o.k.find(':') == std::string::npos) {
    ExactScalar k = parse_scalar(o.k);
    for (int len : {1, 2, 4}) by_len[len] = k;
  } else {
    for (const auto& part : split(o.k, ',')) {
      auto kv = split(part, ':');
      if (kv.size() != 2) throw UsageError("bad --k entry '" + part + "'");
      by_len[std::stoi(kv[0])] = parse_scalar(kv[1]);
    }
  }
  set_multiplicity_by_length(rs, by_len);
  return macdonald_spec(rs, t, base);
}

Json mk_poly_json(const MKPolynomial& p) {
  Json basis = Json::array(), coeffs = Json::array();
  for (const auto& b : p.basis) basis.push_back(weight_to_string(b));
  for (const auto& c : p.coeffs) coeffs.push_back(c.to_string());
  return Json{{"lambda", weight_to_string(p.lambda)}, {"basis", basis},     {"coeffs", coeffs},
              {"numerator", poly_to_json(p.numerator)}, {"denominator", poly_to_json(p.denominator)}};
}

MKPolynomial compute_mk(const MKWeightSpec& s, const MKOpts& o, std::string& route) {
  WeightVec lam = parse_weight(o.lambda);
  if (lam.size() != s.x.size())
    throw UsageError("--lambda needs " + std::to_string(s.x.size()) + " coordinates for " + s.rs.label());
  route = o.route;
  if (route == "auto") {
    try {
      LaurentPoly delta = build_weight(s);
      route = "gram-schmidt";
      return gram_schmidt_mk(s, lam, delta);
    } catch (const std::domain_error&) {
      route = "eigen";
    }
  }
  if (route == "gram-schmidt") return gram_schmidt_mk(s, lam);
  return mk_eigen_polynomial(s, macdonald_operator(s), lam);
}

// --- quantum group helpers ---------------------------------------------------

Json check_report_json(const CheckReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items) {
    Json j{{"name", i.name}, {"pass", i.pass}};
    if (!i.detail.empty()) j["detail"] = i.detail;
    items.push_back(j);
  }
  return Json{{"pass", r.all_pass()}, {"items", items}};
}

RatFunc qg_value(const std::string& v, const char* name) {
  if (v == "symbolic") return LaurentPoly::variable(qg_table(), name);
  return parse_expression(v, qg_table());
}

PolyMatrix make_j(const std::string& kind, std::size_t n, std::size_t l, const RatFunc& s) {
  if (kind == "jsigma") return j_sigma(n, s);
  if (kind == "grassmannian") return j_grassmannian(n, l, s);
  if (kind == "case1") return j_case1(n);
  if (kind == "case2") return j_case2(n);
  if (kind == "def") return j_def(n);
  if (kind == "prime") return j_prime(n, true);
  if (kind == "identity") return PolyMatrix::identity(qg_table(), n);
  throw UsageError("unknown J '" + kind + "'");
}

// --- export / import ---------------------------------------------------------

Json export_entity(const std::string& entity, int n, const AWOpts& aw, const MKOpts& mk, const std::string& sigma,
                   const std::string& tau) {
  if (entity == "aw") {
    AWParams p = build_aw(aw);
    return Json{{"entity", "aw"}, {"n", n}, {"params", aw_params_json(p)}, {"value", poly_to_json(aw_polynomial(n, p))}};
  }
  if (entity == "mk") {
    auto s = build_mk(mk);
    std::string route;
    auto p = compute_mk(s, mk, route);
    return Json{{"entity", "mk"}, {"root", mk.root}, {"route", route}, {"value", mk_poly_json(p)}};
  }
  if (entity == "rmatrix") {
    auto b = build_r_matrix(static_cast<std::size_t>(n));
    return Json{{"entity", "rmatrix"}, {"n", n}, {"value", matrix_to_json(b.R)}};
  }
  if (entity == "radial-op") {
    auto st = make_spherical_setup(n, sigma, tau);
    auto op = radial_operator(st);
    return Json{{"entity", "radial-op"},
                {"n", n},
                {"value",
                 {{"coeff_up", ratfunc_to_json(op.coeff_up)},
                  {"coeff_down", ratfunc_to_json(op.coeff_down)},
                  {"coeff_id", ratfunc_to_json(op.coeff_id)},
                  {"base", ratfunc_to_json(op.base)}}}};
  }
  throw UsageError("unknown entity '" + entity + "'");
}

// Parses every value back into exact objects and re-serializes them.
Json reimport(const Json& doc) {
  Json out = doc;
  const std::string entity = doc.at("entity");
  const Json& v = doc.at("value");
  if (entity == "aw") {
    out["value"] = poly_to_json(poly_from_json(v));
  } else if (entity == "mk") {
    auto num = poly_from_json(v.at("numerator"));
    out["value"]["numerator"] = poly_to_json(num);
    out["value"]["denominator"] = poly_to_json(poly_from_json(v.at("denominator"), num.table()));
  } else if (entity == "rmatrix") {
    out["value"] = matrix_to_json(matrix_from_json(v));
  } else if (entity == "radial-op") {
    for (const char* key : {"coeff_up", "coeff_down", "coeff_id", "base"})
      out["value"][key] = ratfunc_to_json(ratfunc_from_json(v.at(key)));
  } else {
    throw UsageError("unknown entity '" + entity + "'");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsymm: exact checks for q-orthogonal polynomials and quantum symmetric spaces"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--jobs", g.jobs, "parallel width")->check(CLI::PositiveNumber);
  app.add_option("--trunc", g.trunc, "truncation order")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized sample points");
  app.fallthrough();

  int exit_code = 0;

  // aw
  AWOpts aw_opts;
  int aw_n = 0;
  std::string aw_norm = "p";
  auto* aw = app.add_subcommand("aw", "Askey-Wilson polynomial");
  aw->add_option("--n", aw_n, "degree")->required()->check(CLI::NonNegativeNumber);
  aw->add_option("--normalization", aw_norm, "p: monic-type p_n, r: 4phi3 normalization")
      ->check(CLI::IsMember({"p", "r"}));
  add_aw_opts(aw, aw_opts);
  aw->callback([&] {
    AWParams p = build_aw(aw_opts);
    Json j{{"n", aw_n}, {"params", aw_params_json(p)}, {"normalization", aw_norm}};
    if (aw_norm == "p") {
      LaurentPoly pn = aw_polynomial(aw_n, p);
      j["value"] = poly_to_json(pn);
      emit_poly(g, j, pn);
    } else {
      auto r = aw_polynomial_r(aw_n, p);
      j["scale"] = ratfunc_to_json(r.scale);
      j["value"] = poly_to_json(r.body);
      emit_poly(g, j, r.body);
    }
  });

  // aw-verify
  AWOpts awv_opts;
  int awv_nmax = 5, awv_samples = 0;
  auto* awv = app.add_subcommand("aw-verify", "Askey-Wilson eigen-equation sweep");
  awv->add_option("--nmax", awv_nmax, "maximal degree")->check(CLI::NonNegativeNumber);
  awv->add_option("--samples", awv_samples, "additional random rational sample points (uses --seed)");
  add_aw_opts(awv, awv_opts);
  awv->callback([&] {
    set_thread_count(g.jobs);
    AWParams p = build_aw(awv_opts);
    auto rep = verify_aw_eigen(awv_nmax, p, g.jobs > 1 ? Exec::parallel : Exec::serial);
    Json runs = Json::array();
    runs.push_back({{"params", aw_params_json(p)}, {"entries", eigen_report_json(rep)}});
    bool ok = rep.all_pass();
    std::mt19937 rng(g.seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int i = 0; i < awv_samples; ++i) {
      std::array<RatFunc, 4> v{RatFunc(aw_table()), RatFunc(aw_table()), RatFunc(aw_table()), RatFunc(aw_table())};
      for (auto& x : v) x = RatFunc(aw_table(), ExactScalar(num(rng), den(rng)));
      AWParams ps = with_parameters(p, v);
      auto r = verify_aw_eigen(awv_nmax, ps, g.jobs > 1 ? Exec::parallel : Exec::serial);
      ok = ok && r.all_pass();
      runs.push_back({{"params", aw_params_json(ps)}, {"entries", eigen_report_json(r)}});
    }
    emit_json(g, Json{{"pass", ok}, {"runs", runs}});
    exit_code = ok ? 0 : 1;
  });

  // aw-orth
  AWOpts awo_opts;
  awo_opts.q = "1/2";
  awo_opts.a = "1/2";
  awo_opts.b = "-1/3";
  awo_opts.c = "1/5";
  awo_opts.d = "1/7";
  int awo_n = 0, awo_m = 1;
  auto* awo = app.add_subcommand("aw-orth", "truncated Askey-Wilson orthogonality");
  awo->add_option("--n", awo_n)->check(CLI::NonNegativeNumber);
  awo->add_option("--m", awo_m)->check(CLI::NonNegativeNumber);
  add_aw_opts(awo, awo_opts);
  awo->callback([&] {
    AWParams p = build_aw(awo_opts);
    auto r = aw_orthogonality_check(awo_n, awo_m, p, g.trunc);
    bool ok = awo_n == awo_m ? r.positive() : r.below_bound();
    emit_json(g, Json{{"n", awo_n},
                      {"m", awo_m},
                      {"truncation", g.trunc},
                      {"value", to_string(r.value)},
                      {"value_approx", r.value.get_d()},
                      {"bound", to_string(r.bound)},
                      {"bound_approx", r.bound.get_d()},
                      {"pass", ok}});
    exit_code = ok ? 0 : 1;
  });

  // mk
  MKOpts mk_opts;
  auto* mk = app.add_subcommand("mk", "Macdonald or Koornwinder polynomial");
  add_mk_opts(mk, mk_opts, false);
  mk->callback([&] {
    auto s = build_mk(mk_opts);
    std::string route;
    auto p = compute_mk(s, mk_opts, route);
    Json j = mk_poly_json(p);
    j["route"] = route;
    j["root"] = mk_opts.root;
    if (g.format == "csv")
      emit(g, poly_to_csv(p.numerator));
    else
      emit(g, j.dump(2));
  });

  // mk-verify
  MKOpts mkv_opts;
  mkv_opts.lambda = "2,0";
  auto* mkv = app.add_subcommand("mk-verify", "diagonalization and orthogonality sweep");
  add_mk_opts(mkv, mkv_opts, true);
  mkv->callback([&] {
    set_thread_count(g.jobs);
    auto s = build_mk(mkv_opts);
    if (parse_weight(mkv_opts.lambda).size() != s.x.size())
      throw UsageError("--lambda-max needs " + std::to_string(s.x.size()) + " coordinates for " + s.rs.label());
    auto rep = verify_mk_diagonalization(s, parse_weight(mkv_opts.lambda), g.jobs > 1 ? Exec::parallel : Exec::serial);
    Json eig = Json::array(), orth = Json::array();
    for (const auto& e : rep.eigen)
      eig.push_back({{"lambda", weight_to_string(e.lambda)}, {"pass", e.pass}, {"eigenvalue", e.eigenvalue.to_string()}});
    for (const auto& o : rep.orth)
      orth.push_back({{"lambda", weight_to_string(o.lambda)}, {"mu", weight_to_string(o.mu)}, {"zero", o.value.is_zero()}});
    emit_json(g, Json{{"route", rep.route}, {"pass", rep.all_pass()}, {"eigen", eig}, {"orthogonality", orth}});
    exit_code = rep.all_pass() ? 0 : 1;
  });

  // qg
  auto* qgc = app.add_subcommand("qg", "quantum-group checks");
  qgc->require_subcommand(1);
  std::size_t qn = 2, ql = 1;
  std::string qj = "jsigma", qkind = "reflVV", qs = "symbolic", qu = "symbolic", qv = "symbolic", qspace = "VxV",
              qfamily = "kdef", qq = "symbolic";
  auto* refl = qgc->add_subcommand("reflection", "reflection equation for a J matrix");
  refl->add_option("--n", qn)->check(CLI::Range(2, 8));
  refl->add_option("--J", qj)->check(CLI::IsMember({"jsigma", "grassmannian", "case1", "case2", "def", "prime", "identity"}));
  refl->add_option("--l", ql);
  refl->add_option("--s", qs);
  refl->add_option("--kind", qkind)->check(CLI::IsMember({"reflVV", "Urefl"}));
  refl->callback([&] {
    PolyMatrix J = make_j(qj, qn, ql, qg_value(qs, "s"));
    bool p_var = qj == "case1" || qj == "case2";
    RatFunc p = LaurentPoly::variable(qg_table(), "p");
    auto b = p_var ? build_r_matrix(qn, p * p) : build_r_matrix(qn);
    auto r = reflection_check(qkind == "reflVV" ? ReflKind::reflVV : ReflKind::Urefl, J, b);
    Json j{{"n", qn}, {"J", qj}, {"kind", qkind}, {"pass", r.pass}, {"nonzero_residual_entries", r.residual.nonzero_count()}};
    if (!r.pass) j["residual"] = matrix_to_json(r.residual);
    emit_json(g, j);
    exit_code = r.pass ? 0 : 1;
  });
  auto* cas = qgc->add_subcommand("casimir", "Casimir action and spectrum");
  cas->add_option("--n", qn)->check(CLI::Range(2, 6));
  cas->add_option("--space", qspace)->check(CLI::IsMember({"V", "VxV", "VdualxV"}));
  cas->callback([&] {
    auto b = build_r_matrix(qn);
    auto sp = qspace == "V" ? CasimirSpace::V : qspace == "VxV" ? CasimirSpace::VxV : CasimirSpace::VdualxV;
    auto r = casimir_action(b, rep_l_operators(b), sp);
    Json ev = Json::array();
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
      ev.push_back({{"value", r.eigenvalues[i].to_string()}, {"multiplicity", r.multiplicities[i]}});
    emit_json(g, Json{{"n", qn}, {"space", qspace}, {"pass", r.pass}, {"eigenvalues", ev}, {"matrix", matrix_to_json(r.C)}});
    exit_code = r.pass ? 0 : 1;
  });
  auto* coid = qgc->add_subcommand("coideal", "coideal membership in the vector representation");
  coid->add_option("--n", qn)->check(CLI::Range(2, 5));
  coid->add_option("--family", qfamily)->check(CLI::IsMember({"kdef", "msigma", "grassmannian"}));
  coid->add_option("--u", qu);
  coid->add_option("--v", qv);
  coid->add_option("--s", qs);
  coid->add_option("--l", ql);
  coid->add_option("--q", qq, "'symbolic' or a rational value");
  coid->callback([&] {
    auto b = qq == "symbolic" ? build_r_matrix(qn) : build_r_matrix(qn, parse_expression(qq, qg_table()));
    CoidealFamily fam = qfamily == "kdef"     ? coideal_kdef(qn, qg_value(qu, "u"), qg_value(qv, "v"))
                        : qfamily == "msigma" ? coideal_projective_M(j_sigma(qn, qg_value(qs, "s")))
                                              : coideal_projective_M(j_grassmannian(qn, ql, qg_value(qs, "s")),
                                                                     CoidealLabel::grassmannian);
    Json gens = Json::array();
    for (const auto& x : fam.generators) gens.push_back(x.to_string());
    auto r = coideal_membership_check(fam, rep_l_operators(b).vector);
    Json j = check_report_json(r);
    j["family"] = to_string(fam.label);
    j["generators"] = gens;
    emit_json(g, j);
    exit_code = r.all_pass() ? 0 : 1;
  });
  auto* fix = qgc->add_subcommand("fixedvec", "fixed vectors in V* (x) V");
  fix->add_option("--n", qn)->check(CLI::Range(2, 5));
  fix->add_option("--u", qu);
  fix->add_option("--v", qv);
  fix->callback([&] {
    auto b = build_r_matrix(qn);
    auto ops = rep_l_operators(b);
    RatFunc u = qg_value(qu, "u"), v = qg_value(qv, "v");
    auto fam = coideal_kdef(qn, u, v);
    Json res = Json::array();
    bool ok = true;
    for (const auto& w : kfixed_vectors(qn, b.q, u, v)) {
      bool pass = fixed_vector_check(fam, tensor_rep(ops.dual, ops.vector), w).pass;
      ok = ok && pass;
      res.push_back(pass);
    }
    emit_json(g, Json{{"n", qn}, {"pass", ok}, {"vectors", res}});
    exit_code = ok ? 0 : 1;
  });
  auto* span = qgc->add_subcommand("span", "the (c,d) family and the M^sigma family span the same subspace");
  span->add_option("--n", qn)->check(CLI::Range(2, 5));
  span->add_option("--u", qu);
  span->add_option("--v", qv);
  span->add_option("--q", qq);
  span->callback([&] {
    auto b = qq == "symbolic" ? build_r_matrix(qn) : build_r_matrix(qn, parse_expression(qq, qg_table()));
    RatFunc u = qg_value(qu, "u"), v = qg_value(qv, "v");
    bool ok = span_equal(coideal_kdef(qn, u, v), coideal_projective_M(j_sigma(qn, v / u)), rep_l_operators(b).vector);
    emit_json(g, Json{{"n", qn}, {"s", (v / u).to_string()}, {"pass", ok}});
    exit_code = ok ? 0 : 1;
  });

  // radial
  int rn = 3, rl = 4;
  std::string rsigma = "symbolic", rtau = "symbolic";
  auto* rad = app.add_subcommand("radial", "radial part of the Casimir on Askey-Wilson polynomials");
  rad->add_option("--n", rn)->check(CLI::Range(2, 8));
  rad->add_option("--lmax", rl)->check(CLI::Range(0, 8));
  rad->add_option("--sigma", rsigma, "'symbolic', an integer exponent, '=P/Q' for s itself, or 'inf'");
  rad->add_option("--tau", rtau);
  rad->callback([&] {
    set_thread_count(g.jobs);
    auto st = make_spherical_setup(rn, rsigma, rtau);
    auto rep = verify_spherical_identification(st, rl, g.jobs > 1 ? Exec::parallel : Exec::serial);
    Json e = Json::array();
    for (const auto& x : rep.entries)
      e.push_back({{"l", x.l}, {"pass", x.pass}, {"bridge", x.bridge_pass}, {"eigenvalue", x.eigenvalue.to_string()}});
    emit_json(g, Json{{"n", rn},
                      {"params", aw_params_json(aw_params_from_sigma_tau(st))},
                      {"normalization", rep.normalization},
                      {"pass", rep.all_pass()},
                      {"entries", e}});
    exit_code = rep.all_pass() ? 0 : 1;
  });

  // table1
  int tcase = 0, tn = 4, tl = 1;
  bool theur = false;
  auto* tab = app.add_subcommand("table1", "classical compact symmetric spaces and their multiplicities");
  tab->add_option("--case", tcase, "row number (0 = print the table)")->check(CLI::Range(0, 10));
  tab->add_option("--n", tn);
  tab->add_option("--l", tl);
  tab->add_flag("--heuristic", theur, "allow heuristic weights for BC cases");
  tab->callback([&] {
    auto row_json = [](const SymmetricSpaceCase& r) {
      return Json{{"case", r.number}, {"cartan", r.cartan}, {"G", r.G},           {"K", r.K},
                  {"rank", r.rank},   {"sigma", r.sigma},   {"m", r.multiplicities}};
    };
    if (tcase == 0) {
      Json rows = Json::array();
      for (const auto& r : table1()) rows.push_back(row_json(r));
      emit_json(g, rows);
      return;
    }
    auto inst = multiplicities_to_parameters(tcase, tn, tl, theur);
    Json m, k;
    for (const auto& [len, v] : inst.m) m[std::to_string(len)] = to_string(v);
    for (const auto& [len, v] : inst.k) k[std::to_string(len)] = to_string(v);
    Json j{{"row", row_json(inst.row)}, {"n", inst.n}, {"rank", inst.rank}, {"m_by_len2", m}, {"k_by_len2", k},
           {"spec", inst.spec.has_value()}, {"heuristic", inst.heuristic}};
    if (inst.spec) j["root_system"] = inst.spec->rs.label();
    if (!inst.note.empty()) j["note"] = inst.note;
    emit_json(g, j);
  });

  // verify-all
  VerifyConfig vcfg;
  bool list_only = false;
  auto* va = app.add_subcommand("verify-all", "run the full verification suite");
  va->add_option("--only", vcfg.only, "restrict to groups (aw, radial, qg, mk, negative) or id prefixes");
  va->add_flag("--inject-j-sign", vcfg.inject.j_sign, "test hook: corrupt every reflection-equation J");
  va->add_flag("--inject-op-coeff", vcfg.inject.operator_coeff, "test hook: perturb the radial operator");
  va->add_flag("--list", list_only, "list the check ids");
  va->callback([&] {
    if (list_only) {
      for (const auto& c : check_registry()) std::cout << c.id << "\t" << c.group << "\t" << c.criterion << "\n";
      return;
    }
    vcfg.jobs = g.jobs;
    vcfg.truncation = g.trunc;
    auto res = run_checks(vcfg);
    emit(g, g.format == "csv" ? report_to_csv(res) : report_to_json(res).dump(2));
    exit_code = all_passed(res) ? 0 : 1;
  });

  // export / import
  std::string entity;
  int en = 2;
  AWOpts ex_aw;
  MKOpts ex_mk;
  std::string ex_sigma = "symbolic", ex_tau = "symbolic";
  auto* ex = app.add_subcommand("export", "export an exact object");
  ex->add_option("entity", entity, "aw, mk, rmatrix or radial-op")
      ->required()
      ->check(CLI::IsMember({"aw", "mk", "rmatrix", "radial-op"}));
  ex->add_option("--n", en, "degree (aw) or dimension (rmatrix, radial-op)");
  add_aw_opts(ex, ex_aw);
  ex->add_option("--root", ex_mk.root);
  ex->add_option("--k", ex_mk.k);
  ex->add_option("--abcd", ex_mk.abcd);
  ex->add_option("--base", ex_mk.base);
  ex->add_option("--lambda", ex_mk.lambda);
  ex->add_option("--sigma", ex_sigma);
  ex->add_option("--tau", ex_tau);
  ex->callback([&] {
    Json doc = export_entity(entity, en, ex_aw, ex_mk, ex_sigma, ex_tau);
    if (g.format == "csv") {
      if (entity == "aw")
        emit(g, poly_to_csv(poly_from_json(doc["value"])));
      else if (entity == "mk")
        emit(g, poly_to_csv(poly_from_json(doc["value"]["numerator"])));
      else
        throw UsageError("csv export is only available for coefficient tables (aw, mk)");
      return;
    }
    emit(g, doc.dump(2));
  });
  std::string in_path;
  auto* im = app.add_subcommand("import", "read an exported object and write it back canonically");
  im->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
  im->callback([&] {
    std::ifstream f(in_path);
    Json doc = Json::parse(f);
    emit_json(g, reimport(doc));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
