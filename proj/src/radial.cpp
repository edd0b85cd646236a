#include "qsymm/radial.hpp"

#include <chrono>
#include <stdexcept>

namespace qsymm {

VarTablePtr radial_table() {
  static const VarTablePtr t = make_vars({"z", "q", "s", "t"});
  return t;
}

namespace {

RatFunc parse_exponent_spec(std::string_view spec, const char* var, const RatFunc& q) {
  const auto& table = q.table();
  if (spec == "symbolic") return LaurentPoly::variable(table, var);
  if (spec == "inf" || spec == "infinity" || spec == "-inf")
    throw std::invalid_argument(std::string("infinite ") + (var[0] == 's' ? "sigma" : "tau") +
                                " is a quantum-subgroup limit (little/big q-Jacobi polynomials); not supported");
  if (!spec.empty() && spec.front() == '=') {
    ExactScalar v = parse_scalar(spec.substr(1));
    if (v == 0) throw std::invalid_argument("s and t must be nonzero");
    return RatFunc(table, v);
  }
  ExactScalar k = parse_scalar(spec);
  if (k.get_den() != 1) throw std::invalid_argument("non-integer exponent: give the value with '=P/Q' instead");
  return q.pow(static_cast<int>(k.get_num().get_si()));
}

}  // namespace

ProjectiveSphericalSetup make_spherical_setup(int n, std::string_view sigma, std::string_view tau) {
  RatFunc q = LaurentPoly::variable(radial_table(), "q");
  return make_spherical_setup(n, parse_exponent_spec(sigma, "s", q), parse_exponent_spec(tau, "t", q));
}

ProjectiveSphericalSetup make_spherical_setup(int n, const RatFunc& s, const RatFunc& t) {
  if (n < 2) throw std::invalid_argument("spherical setup needs n >= 2");
  const auto& table = s.table();
  std::size_t z = table->index("z");
  for (const RatFunc* x : {&s, &t})
    if (x->is_zero() || x->num().involves(z) || x->den().involves(z))
      throw std::invalid_argument("s and t must be nonzero and free of z");
  return {n, LaurentPoly::variable(table, "q"), s, t, z};
}

AWParams aw_params_from_sigma_tau(const ProjectiveSphericalSetup& st) {
  const RatFunc& q = st.q;
  RatFunc a = -(st.s * st.t * q), b = -(q / (st.s * st.t)), c = st.s * q / st.t,
          d = st.t * q.pow(2 * st.n - 3) / st.s;
  LaurentPoly base = q.num() * q.num();
  return make_aw_params(a, b, c, d, base, st.q.table()->name(st.z));
}

QDifferenceOp radial_operator(const ProjectiveSphericalSetup& st) {
  QDifferenceOp op = aw_operator(aw_params_from_sigma_tau(st));
  RatFunc one(st.q.table(), 1), q2 = st.q * st.q;
  op.coeff_id = (one - q2.pow(st.n)) / (one - q2);
  return op;
}

RatFunc radial_eigenvalue(int n, int l, const RatFunc& q) {
  RatFunc e = q.pow(2 * (l + n - 1)) + q.pow(-2 * l);
  for (int i = 2; i < n; ++i) e += q.pow(2 * (n - i));
  return e;
}

RatFunc bridge_eigenvalue(const ProjectiveSphericalSetup& st, int l) {
  AWParams p = aw_params_from_sigma_tau(st);
  RatFunc one(st.q.table(), 1), q2(p.base);
  return aw_eigenvalue(l, p) + (one - q2.pow(st.n)) / (one - q2);
}

bool bridge_identity_holds(int n, int l) {
  auto st = make_spherical_setup(n);
  return radial_eigenvalue(n, l, st.q) == bridge_eigenvalue(st, l);
}

bool SphericalReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass || !e.bridge_pass) return false;
  return !entries.empty();
}

SphericalReport verify_spherical_identification(const ProjectiveSphericalSetup& st, int l_max, Exec exec) {
  return verify_spherical_identification(st, radial_operator(st), l_max, exec);
}

SphericalReport verify_spherical_identification(const ProjectiveSphericalSetup& st, const QDifferenceOp& op,
                                                int l_max, Exec exec) {
  if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");
  AWParams p = aw_params_from_sigma_tau(st);
  const auto& table = st.q.table();
  SphericalReport rep;
  rep.entries.resize(static_cast<std::size_t>(l_max) + 1, SphericalEntry{0, false, RatFunc(table), LaurentPoly(table)});
  sweep(rep.entries.size(), exec, [&](std::size_t i) {
    auto t0 = std::chrono::steady_clock::now();
    int l = static_cast<int>(i);
    // r_l = scale * body with z-free scale, so the body carries the identity
    LaurentPoly body = aw_polynomial_r(l, p).body;
    RatFunc ev = radial_eigenvalue(st.n, l, st.q);
    RatFunc diff = RatFunc(apply_qdiff(op, body)) - ev * RatFunc(body);
    SphericalEntry& e = rep.entries[i];
    e.l = l;
    e.eigenvalue = ev;
    e.residual = diff.num();
    e.pass = diff.is_zero();
    e.bridge_pass = ev == bridge_eigenvalue(st, l);
    e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  });
  return rep;
}

RankOneComparison compare_rank_one_koornwinder(const ProjectiveSphericalSetup& st) {
  auto rs = make_root_system(RootKind::BC, 1);
  auto table = mk_table(rs, {"s", "t"});
  RatFunc q = st.q.retable(table), s = st.s.retable(table), t = st.t.retable(table);
  LaurentPoly q2 = q.num() * q.num();
  RatFunc a = -(s * t * q), b = -(q / (s * t)), c = s * q / t, d = t * q.pow(2 * st.n - 3) / s;
  AWParams p = make_aw_params(a, b, c, d, q2, "x1");
  RatFunc A = aw_coefficient(p);
  std::array<std::size_t, 1> zs{p.z};
  RatFunc Ainv = A.invert_variables(zs);

  auto spec = koornwinder_spec(1, table, q2, {a, b, c, d}, 0);
  ShiftOperator op = macdonald_operator(spec);
  RankOneComparison out{false, RatFunc(table)};
  std::optional<RatFunc> up, down;
  for (const auto& term : op.terms()) {
    if (term.var != p.z) return out;
    if (term.power == 1) up = term.coeff;
    else if (term.power == -1) down = term.coeff;
    else return out;
  }
  if (!up || !down) return out;
  out.factor = *up / A;
  bool z_free = !out.factor.num().involves(p.z) && !out.factor.den().involves(p.z);
  out.pass = z_free && *down == out.factor * Ainv;
  return out;
}

const std::vector<SymmetricSpaceCase>& table1() {
  static const std::vector<SymmetricSpaceCase> rows{
      {1, "AI", "SU(n)", "SO(n)", "l=n-1", "A_l", "1"},
      {2, "AII", "SU(2n)", "Sp(n)", "l=n-1", "A_l", "4"},
      {3, "AIII", "U(n)", "U(l)xU(n-l)", "l<=[n/2]", "BC_l", "2(n-2l), 2, 1"},
      {4, "BI", "SO(2n+1)", "SO(l)xSO(2n+1-l)", "l<=n", "B_l", "1, 2n+1-2l"},
      {5, "CI", "Sp(n)", "U(n)", "l=n", "C_l", "0,1,1"},
      {6, "CII", "Sp(n)", "Sp(l)xSp(n-l)", "l<=[n/2]", "BC_l", "4(n-2l), 4, 3"},
      {7, "DI", "SO(2n)", "SO(l)xSO(2n-l)", "l<n", "B_l", "2n-2l, 1"},
      {8, "DI", "SO(2n)", "SO(l)xSO(2n-l)", "l=n", "D_l", "1"},
      {9, "DIII", "SO(2n)", "U(n)", "n=2l", "C_l", "0,4,1"},
      {10, "DIII", "SO(2n)", "U(n)", "n=2l+1", "BC_l", "4,4,1"},
  };
  return rows;
}

const SymmetricSpaceCase& table1_case(int number) {
  if (number < 1 || number > 10) throw std::invalid_argument("Table I has cases 1..10");
  return table1()[static_cast<std::size_t>(number - 1)];
}

Table1Instance multiplicities_to_parameters(int number, int n, int l, bool heuristic) {
  Table1Instance out;
  out.row = table1_case(number);
  out.n = n;
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  using M = std::map<int, ExactScalar>;
  switch (number) {
    case 1:
    case 2:
      need(n >= 2, "case needs n >= 2");
      out.l = n - 1;
      out.kind = RootKind::A;
      out.m = M{{2, number == 1 ? 1 : 4}};
      break;
    case 3:
      need(l >= 1 && 2 * l <= n, "case 3 needs 1 <= l <= n/2");
      out.l = l;
      out.kind = RootKind::BC;
      out.m = M{{1, 2 * (n - 2 * l)}, {2, 2}, {4, 1}};
      break;
    case 4:
      need(l >= 1 && l <= n, "case 4 needs 1 <= l <= n");
      out.l = l;
      out.kind = RootKind::B;
      // printed as "1, 2n+1-2l"; read with the short roots carrying 2n+1-2l
      // as in case 7 and the classical SO(p,q) data
      out.m = M{{1, 2 * n + 1 - 2 * l}, {2, 1}};
      out.note = "printed order reversed relative to the column caption; short roots take 2n+1-2l";
      break;
    case 5:
      out.l = n;
      out.kind = RootKind::C;
      out.m = M{{2, 1}, {4, 1}};
      break;
    case 6:
      need(l >= 1 && 2 * l <= n, "case 6 needs 1 <= l <= n/2");
      out.l = l;
      out.kind = RootKind::BC;
      out.m = M{{1, 4 * (n - 2 * l)}, {2, 4}, {4, 3}};
      break;
    case 7:
      need(l >= 1 && l < n, "case 7 needs 1 <= l < n");
      out.l = l;
      out.kind = RootKind::B;
      out.m = M{{1, 2 * n - 2 * l}, {2, 1}};
      break;
    case 8:
      out.l = n;
      out.kind = RootKind::D;
      out.m = M{{2, 1}};
      break;
    case 9:
      need(n % 2 == 0, "case 9 needs n = 2l");
      out.l = n / 2;
      out.kind = RootKind::C;
      out.m = M{{2, 4}, {4, 1}};
      break;
    case 10:
      need(n % 2 == 1, "case 10 needs n = 2l+1");
      out.l = (n - 1) / 2;
      out.kind = RootKind::BC;
      out.m = M{{1, 4}, {2, 4}, {4, 1}};
      break;
  }
  out.rank = out.l;
  for (const auto& [len, m] : out.m) out.k[len] = m / 2;

  bool integral = true;
  for (const auto& [len, k] : out.k) integral = integral && k.get_den() == 1;
  int min_rank = out.kind == RootKind::D ? 2 : 1;
  if (out.rank < min_rank || out.rank > 4) {
    out.note += out.note.empty() ? "" : "; ";
    out.note += "rank outside the supported root-system envelope (1..4)";
    return out;
  }
  if (!integral) {
    out.note += out.note.empty() ? "" : "; ";
    out.note += "half-integer k: the weight is not a Laurent polynomial, no spec emitted";
    return out;
  }
  if (out.kind == RootKind::BC && !heuristic) {
    out.note += out.note.empty() ? "" : "; ";
    out.note += "BC case: Koornwinder parameters are not given in closed form; pass the heuristic flag";
    return out;
  }
  // torus variables stand for e^{2 eps_i} (the doubled system)
  auto rs = make_root_system(out.kind, out.rank);
  set_multiplicity_by_length(rs, out.k);
  auto table = mk_table(rs);
  out.spec = macdonald_spec(rs, table, LaurentPoly::variable(table, "q"));
  out.heuristic = out.kind == RootKind::BC;
  out.spec->heuristic = out.heuristic;
  return out;
}

}  // namespace qsymm
