#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsymm/parallel.hpp"
#include "qsymm/poly_matrix.hpp"
#include "qsymm/root_system.hpp"

namespace qsymm {

enum class MKKind { macdonald, koornwinder };

// Torus variables are the table variables x1..x_dim. base is q (a unit
// monomial such as q or q^2).
struct MKWeightSpec {
  RootSystemData rs;
  MKKind kind = MKKind::macdonald;
  VarTablePtr table;
  std::vector<std::size_t> x;
  LaurentPoly base;
  std::vector<RatFunc> abcd;  // koornwinder: a, b, c, d
  std::vector<RatFunc> t;     // koornwinder: t (one entry)
  bool heuristic = false;     // set by Table I derivations that are not exact
};

// {x1..x_dim, q, extra...}
VarTablePtr mk_table(const RootSystemData& rs, const std::vector<std::string>& extra = {});

// Uses rs.multiplicity as k_alpha (t_alpha = q^{k_alpha}); integers >= 0,
// Weyl-invariant.
MKWeightSpec macdonald_spec(RootSystemData rs, VarTablePtr table, LaurentPoly base);
MKWeightSpec koornwinder_spec(int rank, VarTablePtr table, LaurentPoly base, const std::array<RatFunc, 4>& abcd,
                              const RatFunc& t);
MKWeightSpec koornwinder_spec(int rank, VarTablePtr table, LaurentPoly base, const std::array<RatFunc, 4>& abcd,
                              int k);

// q_alpha = q^{u_alpha}: 1 for type A and BC, |alpha|^2 / |short|^2 otherwise.
int root_u(const RootSystemData& rs, const WeightVec& alpha);

// Delta = Delta+ * conj(Delta+) when every infinite-product ratio telescopes;
// otherwise std::domain_error("weight not polynomial; use truncated mode").
LaurentPoly build_weight_plus(const MKWeightSpec& spec);
LaurentPoly build_weight(const MKWeightSpec& spec);
// Rational base and parameters: every infinite product is cut at order M
// (products) or M terms (series). Approximate; no error bound.
LaurentPoly build_weight_truncated(const MKWeightSpec& spec, int truncation);

// Constant term in the torus variables of f * g(x^-1) * delta; a polynomial in
// the remaining variables.
LaurentPoly ct_inner_product(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& delta,
                             const std::vector<std::size_t>& xvars);
// All variables are torus variables.
ExactScalar ct_inner_product(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& delta);

// Coefficient of x^nu (torus variables only) as a polynomial in the others.
LaurentPoly x_coefficient(const LaurentPoly& p, const std::vector<std::size_t>& xvars, const WeightVec& nu);

// f -> sum_i coeff_i * (f(x_var -> base^power x_var) - f), certified
// polynomial over a common denominator.
struct ShiftTerm {
  std::size_t var = 0;
  int power = 1;
  RatFunc coeff;
};

class ShiftOperator {
 public:
  ShiftOperator(LaurentPoly base, std::vector<ShiftTerm> terms, std::string error);
  const std::vector<ShiftTerm>& terms() const { return terms_; }
  const LaurentPoly& base() const { return base_; }
  LaurentPoly apply(const LaurentPoly& f) const;

 private:
  LaurentPoly base_, base_inv_, common_den_;
  std::vector<ShiftTerm> terms_;
  std::vector<LaurentPoly> nums_;  // coeff_i = nums_i / common_den_
  std::string error_;
};

// Phi_sigma = T_sigma Delta+ / Delta+ for sigma = eps_1.
RatFunc phi_sigma(const MKWeightSpec& spec);
// D f = |W sigma|^{-1} sum_{w in W} (w Phi)(T_{w sigma} f - f).
ShiftOperator macdonald_operator(const MKWeightSpec& spec);

struct MKPolynomial {
  WeightVec lambda;
  std::vector<WeightVec> basis;  // dominant mu <= lambda, lambda last
  std::vector<RatFunc> coeffs;   // on the orbit sums m_mu; coeffs.back() == 1
  LaurentPoly numerator;         // sum coeffs * m_mu == numerator / denominator
  LaurentPoly denominator;       // free of torus variables
};

MKPolynomial gram_schmidt_mk(const MKWeightSpec& spec, const WeightVec& lambda, const LaurentPoly& delta);
MKPolynomial gram_schmidt_mk(const MKWeightSpec& spec, const WeightVec& lambda);
// Monic triangular eigenvector of D (needs no polynomial weight).
MKPolynomial mk_eigen_polynomial(const MKWeightSpec& spec, const ShiftOperator& op, const WeightVec& lambda);

struct MKEigenEntry {
  WeightVec lambda;
  bool pass = false;
  RatFunc eigenvalue;
  LaurentPoly residual;  // D(numerator) * den(e) - num(e) * numerator
  double runtime_ms = 0;
};

struct MKOrthEntry {
  WeightVec lambda, mu;
  LaurentPoly value;  // ct_inner_product of the numerators
};

struct MKReport {
  std::string route;  // "gram-schmidt" or "eigen"
  std::vector<MKPolynomial> polys;
  std::vector<MKEigenEntry> eigen;
  std::vector<MKOrthEntry> orth;  // empty for the eigen route
  bool all_pass() const;
};

MKEigenEntry check_eigen(const ShiftOperator& op, const MKPolynomial& p, const std::vector<std::size_t>& xvars);
MKReport verify_mk_diagonalization(const MKWeightSpec& spec, const WeightVec& lambda_max, Exec exec = Exec::parallel);

// Schur polynomial of a partition via semistandard tableaux.
LaurentPoly schur_polynomial(const WeightVec& lambda, const VarTablePtr& table, const std::vector<std::size_t>& xvars);

RatFunc weyl_act(const RatFunc& f, const SignedPerm& w, const std::vector<std::size_t>& xvars);
LaurentPoly weyl_act(const LaurentPoly& f, const SignedPerm& w, const std::vector<std::size_t>& xvars);

}  // namespace qsymm
