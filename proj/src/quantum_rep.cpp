#include "qsymm/quantum_rep.hpp"

#include <map>
#include <stdexcept>

namespace qsymm {

VarTablePtr qg_table() {
  static const VarTablePtr t = make_vars({"q", "p", "s", "u", "v"});
  return t;
}

namespace {

RatFunc var(const char* name) { return LaurentPoly::variable(qg_table(), name); }

PolyMatrix zero(const VarTablePtr& t, std::size_t n) { return PolyMatrix(t, n, n); }

std::size_t idx(std::size_t n, int i, int j) { return static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j); }

RatFunc q_rho_pow(const RatFunc& q, int e) { return q.pow(e); }

}  // namespace

RMatrixBundle build_r_matrix(std::size_t n) { return build_r_matrix(n, var("q")); }

RMatrixBundle build_r_matrix(std::size_t n, const RatFunc& q) {
  if (n < 2) throw std::invalid_argument("build_r_matrix needs n >= 2");
  const auto& t = q.table();
  RatFunc one(t, 1);
  PolyMatrix R(t, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      R(i * n + j, i * n + j) = i == j ? q : one;
      // e_ij (x) e_ji maps v_j (x) v_i to v_i (x) v_j
      if (i > j) R(i * n + j, j * n + i) = q - q.inverse();
    }
  PolyMatrix P = flip_matrix(t, n);
  auto Rinv = R.inverse();
  if (!Rinv) throw std::logic_error("R-matrix is singular");
  RMatrixBundle b{n, q, R, P, P * R * P, *Rinv, R, R, P * R * P, R};
  b.Rplus21 = P * b.Rplus * P;
  b.Rminus21 = P * b.Rminus * P;
  b.Rplus_inv = P * *Rinv * P;
  b.Rminus_inv = R;
  if (!yang_baxter_holds(b)) throw std::logic_error("R-matrix fails Yang-Baxter");
  return b;
}

bool yang_baxter_holds(const RMatrixBundle& b) {
  const auto& t = b.q.table();
  PolyMatrix I = PolyMatrix::identity(t, b.n);
  PolyMatrix r12 = kron(b.R, I), r23 = kron(I, b.R);
  PolyMatrix p23 = kron(I, b.P);
  PolyMatrix r13 = p23 * r12 * p23;
  return r12 * r13 * r23 == r23 * r13 * r12;
}

bool hecke_holds(const PolyMatrix& x, const RatFunc& q) {
  PolyMatrix I = PolyMatrix::identity(x.table(), x.rows());
  return ((x - I.scaled(q)) * (x + I.scaled(q.inverse()))).is_zero();
}

std::string to_string(const LSymbol& s) {
  static const char* names[] = {"L+", "L-", "S(L+)", "S(L-)"};
  std::string base = names[static_cast<int>(s.kind)];
  std::string ij = std::to_string(s.i + 1) + std::to_string(s.j + 1);
  if (s.kind == LKind::SLplus || s.kind == LKind::SLminus) return base.substr(0, base.size() - 1) + "_" + ij + ")";
  return base + "_" + ij;
}

std::string LElement::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [sym, c] : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + qsymm::to_string(sym);
  }
  return out;
}

const PolyMatrix& Rep::at(const LSymbol& s) const { return mats[static_cast<int>(s.kind)][idx(n, s.i, s.j)]; }

RepLOperators rep_l_operators(const RMatrixBundle& b) {
  const std::size_t n = b.n;
  const auto& t = b.q.table();
  Rep v{n, n, {}};
  const PolyMatrix* src[4] = {&b.Rplus, &b.Rminus, &b.Rplus_inv, &b.Rminus_inv};
  for (int k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.mats[k].push_back(src[k]->block(i, j, n));

  // S^2 blocks X solve sum_k X_kj S(L_ik) = delta_ij, i.e. X^{t1} = (Y^{t1})^{-1}
  auto s2 = [&](const PolyMatrix& y) {
    auto inv = y.partial_transpose_first(n).inverse();
    if (!inv) throw std::logic_error("antipode block system is singular");
    PolyMatrix x = inv->partial_transpose_first(n);
    std::vector<PolyMatrix> out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.push_back(x.block(i, j, n));
    return out;
  };
  RepLOperators ops{v, Rep{n, n, {}}, s2(b.Rplus_inv), s2(b.Rminus_inv)};
  for (std::size_t k = 0; k < n * n; ++k) {
    ops.dual.mats[0].push_back(v.mats[2][k].transpose());
    ops.dual.mats[1].push_back(v.mats[3][k].transpose());
    ops.dual.mats[2].push_back(ops.SSLplus[k].transpose());
    ops.dual.mats[3].push_back(ops.SSLminus[k].transpose());
  }
  (void)t;
  return ops;
}

Rep tensor_rep(const Rep& a, const Rep& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor_rep: different gl(n)");
  const std::size_t n = a.n;
  const auto& t = a.mats[0].front().table();
  Rep r{n, a.dim * b.dim, {}};
  for (int kind = 0; kind < 4; ++kind) {
    bool anti = kind >= 2;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        PolyMatrix m(t, r.dim, r.dim);
        for (std::size_t k = 0; k < n; ++k) {
          const PolyMatrix& x = anti ? a.mats[kind][k * n + j] : a.mats[kind][i * n + k];
          const PolyMatrix& y = anti ? b.mats[kind][i * n + k] : b.mats[kind][k * n + j];
          if (x.is_zero() || y.is_zero()) continue;
          m += kron(x, y);
        }
        r.mats[kind].push_back(std::move(m));
      }
  }
  return r;
}

PolyMatrix rep_eval(const Rep& r, const LElement& x) {
  const auto& t = r.mats[0].front().table();
  PolyMatrix m(t, r.dim, r.dim);
  for (const auto& [sym, c] : x.terms) m += r.at(sym).scaled(c);
  return m;
}

bool CheckReport::all_pass() const {
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

CheckReport verify_l_operator_identities(const RMatrixBundle& b, const RepLOperators& ops) {
  const std::size_t n = b.n;
  const auto& t = b.q.table();
  const Rep& v = ops.vector;
  CheckReport rep;
  PolyMatrix I = PolyMatrix::identity(t, n), Z = zero(t, n);
  for (int pm = 0; pm < 2; ++pm) {
    const char* tag = pm == 0 ? "+" : "-";
    bool left = true, right = true, tri = true, weight = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        PolyMatrix s1 = Z, s2 = Z;
        for (std::size_t k = 0; k < n; ++k) {
          s1 += v.mats[pm][i * n + k] * v.mats[pm + 2][k * n + j];
          s2 += v.mats[pm + 2][i * n + k] * v.mats[pm][k * n + j];
        }
        left = left && s1 == (i == j ? I : Z);
        right = right && s2 == (i == j ? I : Z);
        bool must_vanish = pm == 0 ? i > j : i < j;
        if (must_vanish) tri = tri && v.mats[pm][i * n + j].is_zero();
        for (std::size_t h = 0; h < n; ++h) {
          PolyMatrix d = I, dinv = I;
          d(h, h) = b.q;
          dinv(h, h) = b.q.inverse();
          int e = (h == j ? 1 : 0) - (h == i ? 1 : 0);
          const PolyMatrix& L = v.mats[pm][i * n + j];
          weight = weight && d * L * dinv == L.scaled(b.q.pow(e));
        }
      }
    rep.items.push_back({std::string("antipode sum_k L") + tag + "_ik S(L" + tag + "_kj) = delta_ij", left, ""});
    rep.items.push_back({std::string("antipode sum_k S(L") + tag + "_ik) L" + tag + "_kj = delta_ij", right, ""});
    rep.items.push_back({std::string("triangularity of L") + tag, tri, ""});
    rep.items.push_back({std::string("weight property of L") + tag, weight, ""});
  }
  return rep;
}

CheckReport verify_uq_relations(std::size_t n) {
  if (n < 2) throw std::invalid_argument("verify_uq_relations needs n >= 2");
  const auto t = qg_table();
  RatFunc q = var("q"), one(t, 1);
  PolyMatrix I = PolyMatrix::identity(t, n);
  std::vector<PolyMatrix> e, f, K, Kinv;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e.push_back(PolyMatrix::unit(t, n, i, i + 1));
    f.push_back(PolyMatrix::unit(t, n, i + 1, i));
    PolyMatrix k = I, ki = I;
    k(i, i) = q;
    k(i + 1, i + 1) = q.inverse();
    ki(i, i) = q.inverse();
    ki(i + 1, i + 1) = q;
    K.push_back(k);
    Kinv.push_back(ki);
  }
  CheckReport rep;
  auto add = [&](std::string name, bool ok) { rep.items.push_back({std::move(name), ok, ""}); };
  // q^h for h = eps_k^*; q^0 = 1
  std::vector<PolyMatrix> qh;
  for (std::size_t k = 0; k < n; ++k) {
    PolyMatrix d = I;
    d(k, k) = q;
    qh.push_back(d);
  }
  {
    PolyMatrix q0 = I;
    for (std::size_t k = 0; k < n; ++k) q0(k, k) = q.pow(0);
    add("q^0 = 1", q0 == I);
  }
  const std::size_t r = n - 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      PolyMatrix c = e[i] * f[j] - f[j] * e[i];
      PolyMatrix want = i == j ? (K[i] - Kinv[i]).scaled((q - q.inverse()).inverse()) : zero(t, n);
      add("[e" + std::to_string(i + 1) + ",f" + std::to_string(j + 1) + "]", c == want);
    }
  for (std::size_t k = 0; k < n; ++k) {
    PolyMatrix d = qh[k], di = I;
    di(k, k) = q.inverse();
    for (std::size_t i = 0; i < r; ++i) {
      int a = (k == i ? 1 : 0) - (k == i + 1 ? 1 : 0);  // <eps_k, alpha_i>
      add("q^h e" + std::to_string(i + 1) + " q^-h, h=eps" + std::to_string(k + 1),
          d * e[i] * di == e[i].scaled(q.pow(a)));
      add("q^h f" + std::to_string(i + 1) + " q^-h, h=eps" + std::to_string(k + 1),
          d * f[i] * di == f[i].scaled(q.pow(-a)));
    }
    for (std::size_t l = 0; l < n; ++l) add("q^h commute", qh[k] * qh[l] == qh[l] * qh[k]);
  }
  RatFunc qq = q + q.inverse();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      std::string tag = std::to_string(i + 1) + std::to_string(j + 1);
      if (i + 1 == j || j + 1 == i) {
        add("Serre e" + tag, (e[i] * e[i] * e[j] - (e[i] * e[j] * e[i]).scaled(qq) + e[j] * e[i] * e[i]).is_zero());
        add("Serre f" + tag, (f[i] * f[i] * f[j] - (f[i] * f[j] * f[i]).scaled(qq) + f[j] * f[i] * f[i]).is_zero());
      } else {
        add("[e_i,e_j] = 0, " + tag, (e[i] * e[j] - e[j] * e[i]).is_zero());
        add("[f_i,f_j] = 0, " + tag, (f[i] * f[j] - f[j] * f[i]).is_zero());
      }
    }
  (void)one;
  return rep;
}

PolyMatrix j_def(std::size_t n) {
  PolyMatrix J = PolyMatrix::identity(qg_table(), n);
  J(n - 1, n - 1) = RatFunc(qg_table(), -1);
  return J;
}

PolyMatrix j_prime(std::size_t n, bool verbatim) {
  const auto t = qg_table();
  PolyMatrix J = PolyMatrix::identity(t, n);
  J(0, 0) = RatFunc(t);
  J(n - 1, n - 1) = RatFunc(t);
  if (verbatim) {
    J(n - 1, 0) -= RatFunc(t, 2);  // "-e_{n1} - e_{n1}" as displayed
  } else {
    J(0, n - 1) -= RatFunc(t, 1);
    J(n - 1, 0) -= RatFunc(t, 1);
  }
  return J;
}

PolyMatrix j_sigma(std::size_t n, const RatFunc& s) { return j_grassmannian(n, 1, s); }

PolyMatrix j_grassmannian(std::size_t n, std::size_t l, const RatFunc& s) {
  if (n < 2 || l < 1 || 2 * l > n) throw std::invalid_argument("j_grassmannian needs 1 <= l <= n/2");
  const auto& t = s.table();
  RatFunc one(t, 1);
  PolyMatrix J(t, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t kp = n + 1 - k;
    if (k <= l) J(k - 1, k - 1) += one - s * s;
    if (k > l && k < n + 1 - l) J(k - 1, k - 1) += one;
    if (k <= l || k >= n + 1 - l) J(k - 1, kp - 1) -= s;
  }
  return J;
}

PolyMatrix j_case1(std::size_t n) {
  RatFunc p = var("p");
  PolyMatrix J(qg_table(), n, n);
  for (std::size_t i = 1; i <= n; ++i) J(i - 1, i - 1) = q_rho_pow(p, static_cast<int>(n + 1) - 2 * static_cast<int>(i));
  return J;
}

PolyMatrix j_case2(std::size_t n) {
  if (n % 2 != 0) throw std::invalid_argument("j_case2 needs even n");
  const auto t = qg_table();
  PolyMatrix J0(t, n, n);
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    J0(2 * k - 1, 2 * k - 2) = RatFunc(t, -1);
    J0(2 * k - 2, 2 * k - 1) = RatFunc(t, 1);
  }
  return J0 * j_case1(n);
}

ReflectionResult reflection_check(ReflKind kind, const PolyMatrix& J, const RMatrixBundle& b) {
  if (J.rows() != b.n || J.cols() != b.n) throw std::invalid_argument("J dimension does not match the R-matrix");
  PolyMatrix I = PolyMatrix::identity(b.q.table(), b.n);
  PolyMatrix J1 = kron(J, I), J2 = kron(I, J);
  PolyMatrix lhs = J1, rhs = J1;
  if (kind == ReflKind::reflVV) {
    PolyMatrix Rt = b.R.partial_transpose_first(b.n);
    lhs = b.R * J1 * Rt * J2;
    rhs = J2 * Rt * J1 * b.R;
  } else {
    lhs = b.Rplus * J2 * b.Rminus21 * J1;
    rhs = J1 * b.Rminus * J2 * b.Rplus21;
  }
  PolyMatrix d = lhs - rhs;
  return {d.is_zero(), d};
}

std::string to_string(CoidealLabel l) {
  switch (l) {
    case CoidealLabel::projective_kdef: return "projective_kdef";
    case CoidealLabel::projective_M: return "projective_M";
    case CoidealLabel::general_MJ: return "general_MJ";
    case CoidealLabel::grassmannian: return "grassmannian";
    case CoidealLabel::custom: return "custom";
  }
  return "custom";
}

namespace {

LElement make_element(const std::map<LSymbol, RatFunc>& m) {
  LElement e;
  for (const auto& [s, c] : m)
    if (!c.is_zero()) e.terms.emplace_back(s, c);
  return e;
}

void accumulate(std::map<LSymbol, RatFunc>& m, const LSymbol& s, const RatFunc& c) {
  auto it = m.find(s);
  if (it == m.end())
    m.emplace(s, c);
  else
    it->second += c;
}

}  // namespace

CoidealFamily coideal_kdef(std::size_t n, const RatFunc& u, const RatFunc& v) {
  if (n < 2) throw std::invalid_argument("coideal_kdef needs n >= 2");
  const auto& t = u.table();
  RatFunc one(t, 1);
  const int N = static_cast<int>(n) - 1;  // last index
  using K = LKind;
  auto el = [&](std::initializer_list<std::pair<LSymbol, RatFunc>> ts) {
    std::map<LSymbol, RatFunc> m;
    for (const auto& [s, c] : ts) accumulate(m, s, c);
    return make_element(m);
  };
  CoidealFamily f{CoidealLabel::projective_kdef, n, {}};
  f.generators.push_back(el({{{K::Lplus, 0, 0}, one}, {{K::Lminus, N, N}, -one}}));
  f.generators.push_back(el({{{K::Lminus, 0, 0}, one}, {{K::Lplus, N, N}, -one}}));
  for (int k = 1; k < N; ++k) f.generators.push_back(el({{{K::Lplus, 0, k}, u}, {{K::Lminus, N, k}, v}}));
  for (int k = 1; k < N; ++k) f.generators.push_back(el({{{K::Lplus, k, N}, v}, {{K::Lminus, k, 0}, u}}));
  for (int i = 1; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      f.generators.push_back(el({{{K::Lplus, i, j}, one}}));
      f.generators.push_back(el({{{K::Lminus, j, i}, one}}));
    }
  for (int i = 1; i < N; ++i) f.generators.push_back(el({{{K::Lplus, i, i}, one}, {{K::Lminus, i, i}, -one}}));
  RatFunc cd = u * v, c_d = u * u - v * v;
  f.generators.push_back(el({{{K::Lplus, 0, N}, cd},
                             {{K::Lminus, N, 0}, -cd},
                             {{K::Lplus, 0, 0}, -c_d},
                             {{K::Lminus, 0, 0}, c_d}}));
  return f;
}

CoidealFamily coideal_projective_M(const PolyMatrix& J, CoidealLabel label) {
  const std::size_t n = J.rows();
  CoidealFamily f{label, n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::map<LSymbol, RatFunc> m;
      for (std::size_t k = 0; k < n; ++k) {
        if (!J(k, j).is_zero()) accumulate(m, {LKind::Lplus, int(i), int(k)}, J(k, j));
        if (!J(i, k).is_zero()) accumulate(m, {LKind::Lminus, int(k), int(j)}, -J(i, k));
      }
      LElement e = make_element(m);
      if (!e.terms.empty()) f.generators.push_back(std::move(e));
    }
  return f;
}

CoidealFamily coideal_general_MJ(const PolyMatrix& J) {
  const std::size_t n = J.rows();
  auto inv = J.inverse();
  if (!inv) throw std::invalid_argument("general_MJ needs an invertible J");
  CoidealFamily f{CoidealLabel::general_MJ, n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::map<LSymbol, RatFunc> m;
      accumulate(m, {LKind::Lplus, int(i), int(j)}, RatFunc(J.table(), 1));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          RatFunc c = J(i, k) * (*inv)(l, j);
          if (!c.is_zero()) accumulate(m, {LKind::SLminus, int(l), int(k)}, -c);
        }
      LElement e = make_element(m);
      if (!e.terms.empty()) f.generators.push_back(std::move(e));
    }
  return f;
}

std::vector<RatFunc> counit_values(const CoidealFamily& fam) {
  std::vector<RatFunc> out;
  for (const auto& g : fam.generators) {
    RatFunc s(qg_table());
    bool first = true;
    for (const auto& [sym, c] : g.terms) {
      if (first) {
        s = RatFunc(c.table());
        first = false;
      }
      if (sym.i == sym.j) s += c;
    }
    out.push_back(s);
  }
  return out;
}

namespace {

RatVector flatten(const PolyMatrix& m) { return m.entries(); }

PolyMatrix rows_matrix(const std::vector<RatVector>& rows, const VarTablePtr& t, std::size_t width) {
  PolyMatrix m(t, rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  return m;
}

RatFunc dot(const RatVector& a, const RatVector& b, const VarTablePtr& t) {
  RatFunc s(t);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

}  // namespace

CheckReport coideal_membership_check(const CoidealFamily& fam, const Rep& rep) {
  CheckReport out;
  if (fam.generators.empty()) {
    out.items.push_back({"empty family", true, "vacuous"});
    return out;
  }
  const std::size_t n = rep.n, d2 = rep.dim * rep.dim;
  const auto& t = rep.mats[0].front().table();
  std::vector<RatVector> rows;
  for (const auto& g : fam.generators) rows.push_back(flatten(rep_eval(rep, g)));
  auto ann = rows_matrix(rows, t, d2).nullspace();
  // phi[a][symbol] = f_a(rho(symbol))
  std::map<LSymbol, std::vector<RatFunc>> phi;
  auto phis = [&](const LSymbol& s) -> const std::vector<RatFunc>& {
    auto it = phi.find(s);
    if (it != phi.end()) return it->second;
    std::vector<RatFunc> v;
    RatVector flat = flatten(rep.at(s));
    for (const auto& f : ann) v.push_back(dot(f, flat, t));
    return phi.emplace(s, std::move(v)).first->second;
  };
  for (std::size_t gi = 0; gi < fam.generators.size(); ++gi) {
    const auto& g = fam.generators[gi];
    // pairs (left symbol, right symbol, coefficient) of the coproduct
    std::vector<std::tuple<LSymbol, LSymbol, RatFunc>> pairs;
    for (const auto& [s, c] : g.terms)
      for (int k = 0; k < int(n); ++k) {
        bool anti = s.kind == LKind::SLplus || s.kind == LKind::SLminus;
        if (anti)
          pairs.emplace_back(LSymbol{s.kind, k, s.j}, LSymbol{s.kind, s.i, k}, c);
        else
          pairs.emplace_back(LSymbol{s.kind, s.i, k}, LSymbol{s.kind, k, s.j}, c);
      }
    bool ok = true;
    std::string detail;
    for (std::size_t a = 0; a < ann.size() && ok; ++a)
      for (std::size_t b = 0; b < ann.size() && ok; ++b) {
        RatFunc s(t);
        for (const auto& [l, r, c] : pairs) {
          const RatFunc& x = phis(l)[a];
          if (x.is_zero()) continue;
          const RatFunc& y = phis(r)[b];
          if (!y.is_zero()) s += c * x * y;
        }
        if (!s.is_zero()) {
          ok = false;
          detail = "annihilator pair (" + std::to_string(a) + "," + std::to_string(b) + ") gives " + s.to_string();
        }
      }
    out.items.push_back({"generator " + std::to_string(gi + 1) + ": " + g.to_string(), ok, detail});
  }
  return out;
}

FixedVectorResult fixed_vector_check(const CoidealFamily& fam, const Rep& space, const RatVector& w) {
  if (w.size() != space.dim) throw std::invalid_argument("vector dimension does not match the space");
  FixedVectorResult r{true, {}};
  for (const auto& g : fam.generators) {
    RatVector img = rep_eval(space, g).apply(w);
    for (const auto& x : img)
      if (!x.is_zero()) r.pass = false;
    r.residuals.push_back(std::move(img));
  }
  return r;
}

std::array<RatVector, 2> kfixed_vectors(std::size_t n, const RatFunc& q, const RatFunc& u, const RatFunc& v) {
  const auto& t = q.table();
  RatVector w1(n * n, RatFunc(t)), w2(n * n, RatFunc(t));
  for (std::size_t k = 0; k < n; ++k) w1[k * n + k] = q.pow(2 * static_cast<int>(n - 1 - k));
  const std::size_t N = n - 1;
  w2[0 * n + N] += u * v;
  w2[N * n + 0] += u * v;
  w2[0] += q * v * v;
  w2[N * n + N] += q.inverse() * u * u;
  return {w1, w2};
}

RatVector w_vector(const PolyMatrix& J) { return J.entries(); }

PolyMatrix casimir_matrix(const Rep& r, const RatFunc& q, bool as_printed) {
  const std::size_t n = r.n;
  PolyMatrix C(q.table(), r.dim, r.dim);
  for (int i = 0; i < int(n); ++i)
    for (int j = 0; j < int(n); ++j) {
      const PolyMatrix& a = r.at({LKind::Lplus, i, j});
      const PolyMatrix& b = as_printed ? r.at({LKind::SLminus, i, j}) : r.at({LKind::SLminus, j, i});
      if (a.is_zero() || b.is_zero()) continue;
      C += (a * b).scaled(q.pow(2 * (int(n) - 1 - i)));
    }
  return C;
}

RatFunc casimir_eigenvalue(std::size_t n, int l, const RatFunc& q) {
  const int N = static_cast<int>(n);
  RatFunc e = q.pow(2 * (l + N - 1)) + q.pow(-2 * l);
  for (int i = 2; i < N; ++i) e += q.pow(2 * (N - i));
  return e;
}

CasimirReport casimir_action(const RMatrixBundle& b, const RepLOperators& ops, CasimirSpace space) {
  const std::size_t n = b.n;
  const auto& t = b.q.table();
  Rep r = space == CasimirSpace::V     ? ops.vector
          : space == CasimirSpace::VxV ? tensor_rep(ops.vector, ops.vector)
                                       : tensor_rep(ops.dual, ops.vector);
  PolyMatrix C = casimir_matrix(r, b.q);
  PolyMatrix I = PolyMatrix::identity(t, r.dim);
  CasimirReport rep{C, {}, {}, false};
  if (space == CasimirSpace::V) {
    rep.eigenvalues = {C(0, 0)};
    rep.multiplicities = {n};
    rep.pass = C == I.scaled(C(0, 0));
    return rep;
  }
  RatFunc l1(t), l2(t);
  std::size_t m1 = 0, m2 = 0;
  if (space == CasimirSpace::VxV) {
    // v1 (x) v1 spans the top of Sym^2 V; the other eigenvalue comes from the trace
    l1 = C(0, 0);
    RatFunc tr(t);
    for (std::size_t i = 0; i < r.dim; ++i) tr += C(i, i);
    m1 = n * (n + 1) / 2;
    m2 = n * (n - 1) / 2;
    l2 = (tr - l1 * RatFunc(t, long(m1))) / RatFunc(t, long(m2));
  } else {
    l1 = casimir_eigenvalue(n, 0, b.q);
    l2 = casimir_eigenvalue(n, 1, b.q);
    m1 = 1;
    m2 = n * n - 1;
  }
  rep.eigenvalues = {l1, l2};
  rep.multiplicities = {m1, m2};
  PolyMatrix a = C - I.scaled(l1), c = C - I.scaled(l2);
  rep.pass = !(l1 == l2) && (a * c).is_zero() && a.rank() == m2 && c.rank() == m1;
  return rep;
}

bool span_equal(const CoidealFamily& a, const CoidealFamily& b, const Rep& rep) {
  const auto& t = rep.mats[0].front().table();
  const std::size_t d2 = rep.dim * rep.dim;
  std::vector<RatVector> ra, rb;
  for (const auto& g : a.generators) ra.push_back(flatten(rep_eval(rep, g)));
  for (const auto& g : b.generators) rb.push_back(flatten(rep_eval(rep, g)));
  std::vector<RatVector> all = ra;
  all.insert(all.end(), rb.begin(), rb.end());
  std::size_t r1 = ra.empty() ? 0 : rows_matrix(ra, t, d2).rank();
  std::size_t r2 = rb.empty() ? 0 : rows_matrix(rb, t, d2).rank();
  std::size_t r12 = all.empty() ? 0 : rows_matrix(all, t, d2).rank();
  return r1 == r2 && r2 == r12;
}

}  // namespace qsymm
