#include "qsymm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qsymm/aw_ops.hpp"
#include "qsymm/mk_poly.hpp"
#include "qsymm/parallel.hpp"
#include "qsymm/quantum_rep.hpp"
#include "qsymm/radial.hpp"

namespace qsymm {

namespace {

constexpr std::size_t kResidualChars = 400;

std::string clip(std::string s) {
  if (s.size() > kResidualChars) s = s.substr(0, kResidualChars) + "...";
  return s;
}

std::string residual_of(const PolyMatrix& m) {
  std::size_t nz = m.nonzero_count();
  if (nz == 0) return "";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        return clip(std::to_string(nz) + " nonzero entries; (" + std::to_string(i) + "," + std::to_string(j) +
                    ") = " + m(i, j).to_string());
  return "";
}

std::string residual_of(const LaurentPoly& p) { return p.is_zero() ? "" : clip(p.to_string()); }

CheckOutcome from_report(const CheckReport& r) {
  CheckOutcome o{r.all_pass(), "", ""};
  for (const auto& it : r.items)
    if (!it.pass) {
      o.detail = it.name;
      o.residual = clip(it.detail);
      break;
    }
  return o;
}

// --- parameters --------------------------------------------------------------

AWParams symbolic_aw() {
  static const VarTablePtr t = make_vars({"z", "q", "a", "b", "c", "d"});
  auto v = [&](const char* n) { return RatFunc(LaurentPoly::variable(t, n)); };
  return make_aw_params(v("a"), v("b"), v("c"), v("d"), LaurentPoly::variable(t, "q"));
}

AWParams sample_aw(int which) {
  static const VarTablePtr t = make_vars({"z", "q"});
  static const ExactScalar pts[3][4] = {{ExactScalar(1, 2), ExactScalar(-1, 3), ExactScalar(1, 5), ExactScalar(1, 7)},
                                        {2, 3, ExactScalar(-1, 2), ExactScalar(1, 4)},
                                        {ExactScalar(1, 3), ExactScalar(1, 3), -2, 5}};
  const auto& p = pts[which];
  return make_aw_params(RatFunc(t, p[0]), RatFunc(t, p[1]), RatFunc(t, p[2]), RatFunc(t, p[3]),
                        LaurentPoly::variable(t, "q"));
}

AWParams orth_aw() {
  static const VarTablePtr t = make_vars({"z"});
  return make_aw_params(RatFunc(t, ExactScalar(1, 2)), RatFunc(t, ExactScalar(-1, 3)), RatFunc(t, ExactScalar(1, 5)),
                        RatFunc(t, ExactScalar(1, 7)), LaurentPoly(t, ExactScalar(1, 2)));
}

RatFunc qg(const char* n) { return LaurentPoly::variable(qg_table(), n); }
RatFunc qnum(const ExactScalar& x) { return RatFunc(qg_table(), x); }

const ExactScalar kSamples[3] = {1, 2, ExactScalar(1, 3)};

PolyMatrix corrupt(PolyMatrix j) {
  // diagonal J (and any 2x2 J with a zero corner) solve the equations whatever
  // their signs, so the wrong-signed copy of the leading entry goes below the diagonal
  std::size_t n = j.rows();
  RatFunc x = j(0, 0);
  for (std::size_t k = 0; k < n && x.is_zero(); ++k) x = j(0, k);
  j(n - 1, 0) = j(n - 1, 0) - x;
  j(n - 1, n - 1) = j(n - 1, n - 1) - x;
  return j;
}

PolyMatrix maybe_corrupt(const PolyMatrix& j, const VerifyConfig& cfg) { return cfg.inject.j_sign ? corrupt(j) : j; }

QDifferenceOp perturbed(QDifferenceOp op) {
  RatFunc q = LaurentPoly::variable(op.base.table(), "q");
  op.coeff_up = op.coeff_up * (RatFunc(op.base.table(), 1) + q);
  std::array<std::size_t, 1> zs{op.z};
  op.coeff_down = op.coeff_up.invert_variables(zs);
  return op;
}

CheckOutcome refl(ReflKind kind, const PolyMatrix& j, const RMatrixBundle& b) {
  auto r = reflection_check(kind, j, b);
  return {r.pass, residual_of(r.residual), ""};
}

CheckOutcome radial_check(int n, const VerifyConfig& cfg) {
  auto st = make_spherical_setup(n);
  QDifferenceOp op = radial_operator(st);
  if (cfg.inject.operator_coeff) op = perturbed(op);
  auto rep = verify_spherical_identification(st, op, 4, Exec::serial);
  for (const auto& e : rep.entries)
    if (!e.pass || !e.bridge_pass)
      return {false, residual_of(e.residual), "l = " + std::to_string(e.l)};
  return {true, "", "normalization " + rep.normalization};
}

MKWeightSpec type_a(int rank, int k) {
  auto rs = make_root_system(RootKind::A, rank);
  set_multiplicity_by_length(rs, {{2, k}});
  auto t = mk_table(rs);
  return macdonald_spec(rs, t, LaurentPoly::variable(t, "q"));
}

MKWeightSpec telescoping_bc(int rank) {
  auto rs = make_root_system(RootKind::BC, rank);
  auto t = mk_table(rs);
  LaurentPoly q = LaurentPoly::variable(t, "q"), one(t, 1);
  std::array<RatFunc, 4> abcd{q * q, -one, q, -q.pow(3)};
  return koornwinder_spec(rank, t, q * q, abcd, 1);
}

CheckOutcome mk_suite(const MKWeightSpec& s, const std::vector<WeightVec>& tops) {
  for (const auto& top : tops) {
    auto rep = verify_mk_diagonalization(s, top, Exec::serial);
    for (const auto& e : rep.eigen)
      if (!e.pass) return {false, residual_of(e.residual), "eigen " + weight_to_string(e.lambda)};
    for (const auto& o : rep.orth)
      if (!o.value.is_zero())
        return {false, residual_of(o.value), "orthogonality " + weight_to_string(o.lambda) + " vs " +
                                                 weight_to_string(o.mu)};
    if (!rep.all_pass()) return {false, "", "report failed at " + weight_to_string(top)};
  }
  return {true, "", ""};
}

// --- registry ----------------------------------------------------------------

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> r;
  auto add = [&](std::string id, std::string group, int crit, std::string ref,
                 std::function<CheckOutcome(const VerifyConfig&)> f) {
    r.push_back({std::move(id), std::move(group), std::move(ref), crit, std::move(f)});
  };

  // Askey-Wilson
  add("aw.eigen.symbolic", "aw", 1, "Askey-Wilson q-difference equation, symbolic a,b,c,d,q", [](const VerifyConfig&) {
    auto rep = verify_aw_eigen(5, symbolic_aw(), Exec::serial);
    for (const auto& e : rep.entries)
      if (!e.pass) return CheckOutcome{false, residual_of(e.residual), "n = " + std::to_string(e.n)};
    return CheckOutcome{true, "", "n = 0..5"};
  });
  for (int i = 0; i < 3; ++i)
    add("aw.eigen.sample" + std::to_string(i + 1), "aw", 1, "Askey-Wilson q-difference equation, rational a,b,c,d",
        [i](const VerifyConfig&) {
          auto rep = verify_aw_eigen(5, sample_aw(i), Exec::serial);
          for (const auto& e : rep.entries)
            if (!e.pass) return CheckOutcome{false, residual_of(e.residual), "n = " + std::to_string(e.n)};
          return CheckOutcome{true, "", ""};
        });
  add("aw.orthogonality", "aw", 11, "Askey-Wilson orthogonality, truncated constant term with tail bound",
      [](const VerifyConfig& cfg) {
        auto p = orth_aw();
        std::ostringstream worst;
        for (int n = 0; n <= 3; ++n)
          for (int m = n + 1; m <= 3; ++m) {
            auto res = aw_orthogonality_check(n, m, p, cfg.truncation);
            if (!res.below_bound())
              return CheckOutcome{false, to_string(res.value),
                                  "(" + std::to_string(n) + "," + std::to_string(m) + ") bound " + to_string(res.bound)};
            worst << "(" << n << "," << m << "): |value| " << std::abs(res.value.get_d()) << " <= " << res.bound.get_d()
                  << "; ";
          }
        return CheckOutcome{true, "", worst.str()};
      });

  // radial part
  for (int n = 2; n <= 4; ++n)
    add("radial.spherical.n" + std::to_string(n), "radial", 2,
        "radial part of the Casimir on Askey-Wilson polynomials at the sigma,tau parameters",
        [n](const VerifyConfig& cfg) { return radial_check(n, cfg); });
  add("radial.bridge", "radial", 3, "Casimir eigenvalue equals the Askey-Wilson eigenvalue plus the constant",
      [](const VerifyConfig&) {
        for (int n = 2; n <= 5; ++n)
          for (int l = 0; l <= 5; ++l)
            if (!bridge_identity_holds(n, l))
              return CheckOutcome{false, "", "n = " + std::to_string(n) + ", l = " + std::to_string(l)};
        return CheckOutcome{true, "", ""};
      });
  add("radial.rank_one_koornwinder", "radial", 0, "rank-one Koornwinder operator versus the radial part",
      [](const VerifyConfig&) {
        for (int n = 2; n <= 4; ++n) {
          auto c = compare_rank_one_koornwinder(make_spherical_setup(n));
          if (!c.pass) return CheckOutcome{false, c.factor.to_string(), "n = " + std::to_string(n)};
        }
        return CheckOutcome{true, "", "factor 1/2"};
      });

  // reflection equations
  for (std::size_t n = 2; n <= 5; ++n)
    add("qg.reflVV.jsigma.n" + std::to_string(n), "qg", 4, "reflection equation on V (x) V for the projective J^sigma",
        [n](const VerifyConfig& cfg) {
          return refl(ReflKind::reflVV, maybe_corrupt(j_sigma(n, qg("s")), cfg), build_r_matrix(n));
        });
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t l = 1; 2 * l <= n; ++l)
      add("qg.urefl.grassmannian.n" + std::to_string(n) + ".l" + std::to_string(l), "qg", 4,
          "reflection equation with R+ and R- for the Grassmannian J^sigma", [n, l](const VerifyConfig& cfg) {
            return refl(ReflKind::Urefl, maybe_corrupt(j_grassmannian(n, l, qg("s")), cfg), build_r_matrix(n));
          });
  for (std::size_t n = 2; n <= 6; ++n) {
    add("qg.reflVV.case1.n" + std::to_string(n), "qg", 4, "reflection equation for J = diag(q^rho), q = p^2",
        [n](const VerifyConfig& cfg) {
          return refl(ReflKind::reflVV, maybe_corrupt(j_case1(n), cfg), build_r_matrix(n, qg("p") * qg("p")));
        });
    if (n % 2 == 0)
      add("qg.reflVV.case2.n" + std::to_string(n), "qg", 4, "reflection equation for J = J0 diag(q^rho), q = p^2",
          [n](const VerifyConfig& cfg) {
            return refl(ReflKind::reflVV, maybe_corrupt(j_case2(n), cfg), build_r_matrix(n, qg("p") * qg("p")));
          });
  }

  // fixed vectors, coideals, spans
  for (std::size_t n = 2; n <= 4; ++n)
    add("qg.fixedvec.n" + std::to_string(n), "qg", 5, "coideal generators annihilate the two fixed vectors in V* (x) V",
        [n](const VerifyConfig&) {
          auto b = build_r_matrix(n);
          auto ops = rep_l_operators(b);
          Rep dv = tensor_rep(ops.dual, ops.vector);
          auto fam = coideal_kdef(n, qg("u"), qg("v"));
          auto ws = kfixed_vectors(n, b.q, qg("u"), qg("v"));
          for (std::size_t w = 0; w < 2; ++w) {
            auto res = fixed_vector_check(fam, dv, ws[w]);
            if (!res.pass) {
              for (std::size_t g = 0; g < res.residuals.size(); ++g)
                for (const auto& x : res.residuals[g])
                  if (!x.is_zero())
                    return CheckOutcome{false, clip(x.to_string()),
                                        "vector " + std::to_string(w + 1) + ", generator " + std::to_string(g + 1)};
            }
          }
          return CheckOutcome{true, "", ""};
        });
  for (std::size_t n = 2; n <= 3; ++n) {
    add("qg.coideal.kdef.n" + std::to_string(n), "qg", 6, "coideal property of the (c,d) family in the vector representation",
        [n](const VerifyConfig&) {
          auto ops = rep_l_operators(build_r_matrix(n));
          return from_report(coideal_membership_check(coideal_kdef(n, qg("u"), qg("v")), ops.vector));
        });
    add("qg.coideal.msigma.n" + std::to_string(n), "qg", 6, "coideal property of the M^sigma family in the vector representation",
        [n](const VerifyConfig&) {
          auto ops = rep_l_operators(build_r_matrix(n));
          return from_report(coideal_membership_check(coideal_projective_M(j_sigma(n, qg("s"))), ops.vector));
        });
    add("qg.span.n" + std::to_string(n) + ".symbolic", "qg", 7, "the two definitions of k^sigma span the same subspace",
        [n](const VerifyConfig&) {
          auto ops = rep_l_operators(build_r_matrix(n));
          RatFunc u = qg("u"), v = qg("v");
          bool ok = span_equal(coideal_kdef(n, u, v), coideal_projective_M(j_sigma(n, v / u)), ops.vector);
          return CheckOutcome{ok, "", "s = v/u"};
        });
    for (int i = 0; i < 3; ++i)
      add("qg.span.n" + std::to_string(n) + ".sample" + std::to_string(i + 1), "qg", 7,
          "the two definitions of k^sigma span the same subspace, q = 1/2", [n, i](const VerifyConfig&) {
            auto ops = rep_l_operators(build_r_matrix(n, qnum(ExactScalar(1, 2))));
            RatFunc s = qnum(kSamples[i]);
            bool ok = span_equal(coideal_kdef(n, qnum(1), s), coideal_projective_M(j_sigma(n, s)), ops.vector);
            return CheckOutcome{ok, "", "u = 1, v = s = " + to_string(kSamples[i])};
          });
  }

  // quantum group sanity
  for (std::size_t n = 2; n <= 4; ++n) {
    add("qg.sanity.rmatrix.n" + std::to_string(n), "qg", 8, "Yang-Baxter equation and Hecke condition for R",
        [n](const VerifyConfig&) {
          auto b = build_r_matrix(n);
          if (!yang_baxter_holds(b)) return CheckOutcome{false, "", "Yang-Baxter"};
          if (!hecke_holds(b.P * b.R, b.q)) return CheckOutcome{false, "", "Hecke on P R"};
          return CheckOutcome{true, "", ""};
        });
    add("qg.sanity.uqrel.n" + std::to_string(n), "qg", 8, "U_q(gl(n)) relations in the vector representation",
        [n](const VerifyConfig&) { return from_report(verify_uq_relations(n)); });
    add("qg.sanity.loperators.n" + std::to_string(n), "qg", 8, "antipode identity, triangularity and weight property of L+-",
        [n](const VerifyConfig&) {
          auto b = build_r_matrix(n);
          return from_report(verify_l_operator_identities(b, rep_l_operators(b)));
        });
  }
  for (std::size_t n = 2; n <= 3; ++n)
    add("qg.casimir.n" + std::to_string(n), "qg", 9, "Casimir spectra on V, V (x) V and V* (x) V", [n](const VerifyConfig&) {
      auto b = build_r_matrix(n);
      auto ops = rep_l_operators(b);
      RatFunc eps(qg_table());
      for (std::size_t i = 0; i < n; ++i) eps += b.q.pow(2 * static_cast<int>(n - 1 - i));
      if (!(eps == casimir_eigenvalue(n, 0, b.q))) return CheckOutcome{false, "", "counit value"};
      for (auto sp : {CasimirSpace::V, CasimirSpace::VxV, CasimirSpace::VdualxV}) {
        auto rep = casimir_action(b, ops, sp);
        if (!rep.pass) return CheckOutcome{false, residual_of(rep.C), "space " + std::to_string(static_cast<int>(sp))};
      }
      return CheckOutcome{true, "", ""};
    });

  // Macdonald / Koornwinder
  for (int k : {1, 2}) {
    add("mk.A1.k" + std::to_string(k), "mk", 10, "Macdonald polynomials for A1: eigenfunctions and orthogonality",
        [k](const VerifyConfig&) { return mk_suite(type_a(1, k), {{2, 0}, {3, 0}}); });
    add("mk.A2.k" + std::to_string(k), "mk", 10, "Macdonald polynomials for A2: eigenfunctions and orthogonality",
        [k](const VerifyConfig&) { return mk_suite(type_a(2, k), {{1, 0, 0}, {2, 0, 0}, {3, 0, 0}}); });
  }
  add("mk.BC1.telescoping", "mk", 10, "Koornwinder polynomials BC1 with telescoping weight",
      [](const VerifyConfig&) { return mk_suite(telescoping_bc(1), {{3}}); });
  add("mk.BC2.telescoping", "mk", 10, "Koornwinder polynomials BC2 with telescoping weight",
      [](const VerifyConfig&) { return mk_suite(telescoping_bc(2), {{3, 0}}); });
  add("mk.schur", "mk", 10, "t = q Macdonald polynomials equal Schur polynomials (tableaux oracle)", [](const VerifyConfig&) {
    for (int rank : {1, 2}) {
      auto s = type_a(rank, 1);
      LaurentPoly delta = build_weight(s);
      std::vector<WeightVec> lams = rank == 1 ? std::vector<WeightVec>{{1, 0}, {2, 0}, {3, 0}, {2, 1}}
                                              : std::vector<WeightVec>{{1, 0, 0}, {2, 0, 0}, {1, 1, 0}, {3, 0, 0}, {2, 1, 0}};
      for (const auto& lam : lams) {
        auto p = gram_schmidt_mk(s, lam, delta);
        LaurentPoly diff = p.numerator - schur_polynomial(lam, s.table, s.x) * p.denominator;
        if (!diff.is_zero()) return CheckOutcome{false, residual_of(diff), weight_to_string(lam)};
      }
    }
    return CheckOutcome{true, "", ""};
  });
  add("mk.bc1_vs_aw", "mk", 10, "rank-one Koornwinder polynomials equal Askey-Wilson polynomials", [](const VerifyConfig&) {
    auto rs = make_root_system(RootKind::BC, 1);
    auto t = mk_table(rs);
    LaurentPoly q = LaurentPoly::variable(t, "q");
    for (int n = 2; n <= 3; ++n) {
      std::array<RatFunc, 4> abcd{RatFunc(-q), RatFunc(-q), RatFunc(q), RatFunc(q.pow(2 * n - 3))};
      auto s = koornwinder_spec(1, t, q * q, abcd, 0);
      auto aw = make_aw_params(abcd[0], abcd[1], abcd[2], abcd[3], q * q, "x1");
      for (WeightVec top : {WeightVec{2}, WeightVec{3}}) {
        auto rep = verify_mk_diagonalization(s, top, Exec::serial);
        if (!rep.all_pass()) return CheckOutcome{false, "", "eigen check at " + weight_to_string(top)};
        for (const auto& p : rep.polys) {
          int deg = p.lambda[0];
          LaurentPoly pn = aw_polynomial(deg, aw);
          LaurentPoly diff = pn * x_coefficient(p.numerator, s.x, {deg}) - p.numerator * x_coefficient(pn, s.x, {deg});
          if (!diff.is_zero()) return CheckOutcome{false, residual_of(diff), "degree " + std::to_string(deg)};
        }
      }
    }
    return CheckOutcome{true, "", "radial parameters sigma = tau = 0, n = 2, 3"};
  });

  // negative controls: each passes when the corruption is detected
  add("neg.reflection.j_sign", "negative", 12, "corrupted J must violate the reflection equation",
      [](const VerifyConfig&) {
        for (std::size_t n = 2; n <= 4; ++n) {
          auto b = build_r_matrix(n, qg("p") * qg("p"));
          auto r1 = reflection_check(ReflKind::reflVV, corrupt(j_case1(n)), b);
          auto r2 = reflection_check(ReflKind::Urefl, corrupt(j_grassmannian(n, 1, qg("s"))), build_r_matrix(n));
          if (r1.pass || r2.pass) return CheckOutcome{false, "", "corruption not detected at n = " + std::to_string(n)};
        }
        auto b = build_r_matrix(2, qg("p") * qg("p"));
        return CheckOutcome{true, residual_of(reflection_check(ReflKind::reflVV, corrupt(j_case1(2)), b).residual),
                            "detected for n = 2..4"};
      });
  add("neg.radial.operator_coeff", "negative", 12, "perturbed radial operator must break the eigen-equation",
      [](const VerifyConfig&) {
        auto st = make_spherical_setup(3);
        auto rep = verify_spherical_identification(st, perturbed(radial_operator(st)), 2, Exec::serial);
        for (const auto& e : rep.entries)
          if (!e.pass) return CheckOutcome{true, residual_of(e.residual), "detected at l = " + std::to_string(e.l)};
        return CheckOutcome{false, "", "perturbation not detected"};
      });
  add("neg.aw.eigenvalue", "negative", 12, "a wrong eigenvalue must leave a residual", [](const VerifyConfig&) {
    auto p = symbolic_aw();
    LaurentPoly p2 = aw_polynomial(2, p);
    RatFunc wrong = aw_eigenvalue(3, p);
    RatFunc diff = RatFunc(apply_qdiff(aw_operator(p), p2)) - wrong * RatFunc(p2);
    return CheckOutcome{!diff.is_zero(), residual_of(diff.num()), "P_2 against the n = 3 eigenvalue"};
  });
  add("neg.coideal.single_entry", "negative", 12, "span{L+_13} is not a coideal", [](const VerifyConfig&) {
    auto ops = rep_l_operators(build_r_matrix(3));
    CoidealFamily bad{CoidealLabel::custom, 3, {LElement{{{LSymbol{LKind::Lplus, 0, 2}, qnum(1)}}}}};
    auto rep = coideal_membership_check(bad, ops.vector);
    auto o = from_report(rep);
    return CheckOutcome{!rep.all_pass(), o.residual, "membership must fail"};
  });
  add("neg.fixedvec.wrong_vector", "negative", 12, "v*_1 (x) v_1 alone is not fixed", [](const VerifyConfig&) {
    auto b = build_r_matrix(3);
    auto ops = rep_l_operators(b);
    RatVector e11(9, RatFunc(qg_table()));
    e11[0] = qnum(1);
    bool fixed = fixed_vector_check(coideal_kdef(3, qg("u"), qg("v")), tensor_rep(ops.dual, ops.vector), e11).pass;
    return CheckOutcome{!fixed, "", ""};
  });
  add("neg.span.mismatched_sigma", "negative", 12, "different s gives different spans", [](const VerifyConfig&) {
    auto ops = rep_l_operators(build_r_matrix(3, qnum(ExactScalar(1, 2))));
    bool eq = span_equal(coideal_kdef(3, qnum(1), qnum(2)), coideal_projective_M(j_sigma(3, qnum(3))), ops.vector);
    return CheckOutcome{!eq, "", "s = 2 against s = 3"};
  });
  add("neg.sanity.hecke_on_r", "negative", 12, "R itself (without the flip) is not Hecke", [](const VerifyConfig&) {
    auto b = build_r_matrix(3);
    return CheckOutcome{!hecke_holds(b.R, b.q), "", ""};
  });
  add("neg.casimir.as_printed", "negative", 12, "the Casimir with S(L-_ij) indices is not scalar on V",
      [](const VerifyConfig&) {
        auto b = build_r_matrix(2);
        PolyMatrix c = casimir_matrix(rep_l_operators(b).vector, b.q, true);
        return CheckOutcome{!(c(0, 0) == c(1, 1)), "", "diag " + c(0, 0).to_string() + ", " + c(1, 1).to_string()};
      });
  add("neg.mk.non_eigen", "negative", 12, "an orbit sum is not an eigenfunction for k = 1", [](const VerifyConfig&) {
    auto s = type_a(1, 1);
    auto op = macdonald_operator(s);
    MKPolynomial fake{{2, 0}, {{2, 0}}, {RatFunc(s.table, 1)}, orbit_sum(s.rs, {2, 0}, s.table, s.x), LaurentPoly(s.table, 1)};
    auto e = check_eigen(op, fake, s.x);
    return CheckOutcome{!e.pass, residual_of(e.residual), "m_(2,0) for A1"};
  });

  std::sort(r.begin(), r.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
  return r;
}

bool selected(const CheckSpec& c, const VerifyConfig& cfg) {
  if (cfg.only.empty()) return true;
  for (const auto& o : cfg.only)
    if (c.group == o || c.id.rfind(o, 0) == 0) return true;
  return false;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> reg = build_registry();
  return reg;
}

std::vector<CheckResult> run_checks(const VerifyConfig& cfg) {
  std::vector<const CheckSpec*> todo;
  for (const auto& c : check_registry())
    if (selected(c, cfg)) todo.push_back(&c);
  if (todo.empty()) throw std::invalid_argument("no check matches the filter");
  std::vector<CheckResult> out(todo.size());
  int saved = thread_count();
  if (cfg.jobs > 1) set_thread_count(cfg.jobs);
  sweep(todo.size(), cfg.jobs > 1 ? Exec::parallel : Exec::serial, [&](std::size_t i) {
    const CheckSpec& c = *todo[i];
    CheckResult& r = out[i];
    r.id = c.id;
    r.group = c.group;
    r.paper_ref = c.paper_ref;
    r.criterion = c.criterion;
    auto t0 = std::chrono::steady_clock::now();
    try {
      CheckOutcome o = c.run(cfg);
      r.status = o.pass ? "pass" : "fail";
      r.residual = o.residual;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.status = "error";
      r.detail = e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  });
  if (cfg.jobs > 1) set_thread_count(saved);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == "pass"; });
}

Json report_to_json(const std::vector<CheckResult>& results, bool with_runtime) {
  Json checks = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    Json j{{"check_id", r.id}, {"group", r.group}, {"criterion", r.criterion}, {"paper_ref", r.paper_ref},
           {"status", r.status}};
    if (with_runtime) j["runtime_ms"] = r.runtime_ms;
    if (!r.residual.empty()) j["residual"] = r.residual;
    if (!r.detail.empty()) j["detail"] = r.detail;
    checks.push_back(std::move(j));
    passed += r.status == "pass";
  }
  return Json{{"checks", checks},
              {"summary", {{"total", results.size()}, {"passed", passed}, {"failed", results.size() - passed}}}};
}

std::string report_to_csv(const std::vector<CheckResult>& results) {
  auto quote = [](const std::string& s) {
    std::string o = "\"";
    for (char c : s) {
      if (c == '"') o += '"';
      o += c;
    }
    return o + "\"";
  };
  std::ostringstream os;
  os << "check_id,group,criterion,status,runtime_ms,residual\n";
  for (const auto& r : results)
    os << r.id << ',' << r.group << ',' << r.criterion << ',' << r.status << ',' << r.runtime_ms << ','
       << quote(r.residual) << '\n';
  return os.str();
}

double criterion_budget_ms(int criterion) {
  static const std::map<int, double> budget{{1, 10e3}, {2, 60e3}, {3, 1e3},  {4, 60e3},  {5, 30e3},  {6, 60e3},
                                            {7, 30e3}, {8, 30e3}, {9, 30e3}, {10, 120e3}, {11, 30e3}, {12, 60e3}};
  auto it = budget.find(criterion);
  return it == budget.end() ? 0 : it->second;
}

std::string criterion_title(int criterion) {
  static const std::map<int, std::string> titles{
      {1, "AW eigen-identity"},
      {2, "radial-part reproduction"},
      {3, "bridge identity"},
      {4, "reflection equations"},
      {5, "fixed-vector annihilation"},
      {6, "coideal evidence"},
      {7, "span equivalence"},
      {8, "quantum-group sanity"},
      {9, "Casimir spectra"},
      {10, "Macdonald/Koornwinder suite"},
      {11, "AW orthogonality"},
      {12, "negative controls"},
  };
  auto it = titles.find(criterion);
  return it == titles.end() ? "supplementary" : it->second;
}

}  // namespace qsymm
