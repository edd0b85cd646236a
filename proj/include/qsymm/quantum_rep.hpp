#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsymm/parallel.hpp"
#include "qsymm/poly_matrix.hpp"

namespace qsymm {

// Variables used by the quantum-group checks: q, p (q = p^2 for the
// half-integer q^rho), s = q^sigma, u = sqrt(c), v = sqrt(d).
VarTablePtr qg_table();

// Tensor conventions: C^n (x) C^n with basis index (i,k) -> i*n + k, so A (x) B
// is kron(A, B); X_1 = X (x) I, X_2 = I (x) X; ^{t1} transposes the first leg
// (PolyMatrix::partial_transpose_first); P is the flip, X_21 = P X P.
struct RMatrixBundle {
  std::size_t n = 0;
  RatFunc q;
  PolyMatrix R, P, Rplus, Rminus, Rplus21, Rminus21;
  PolyMatrix Rplus_inv, Rminus_inv;
};

// R = sum q^{delta_ij} e_ii (x) e_jj + (q - q^-1) sum_{i>j} e_ij (x) e_ji,
// R+ = P R P, R- = R^-1. Checks Yang-Baxter (R12 R13 R23 = R23 R13 R12) and
// throws std::logic_error on failure.
RMatrixBundle build_r_matrix(std::size_t n);
RMatrixBundle build_r_matrix(std::size_t n, const RatFunc& q);

bool yang_baxter_holds(const RMatrixBundle& b);
// (X - q)(X + q^-1) = 0
bool hecke_holds(const PolyMatrix& x, const RatFunc& q);

enum class LKind { Lplus, Lminus, SLplus, SLminus };
struct LSymbol {
  LKind kind;
  int i, j;  // 0-based
  friend auto operator<=>(const LSymbol&, const LSymbol&) = default;
};
std::string to_string(const LSymbol& s);

// Formal linear combination of L-entries.
struct LElement {
  std::vector<std::pair<LSymbol, RatFunc>> terms;
  std::string to_string() const;
};

// Matrices of every L-symbol in some representation.
struct Rep {
  std::size_t n = 0;    // gl(n)
  std::size_t dim = 0;  // representation dimension
  std::array<std::vector<PolyMatrix>, 4> mats;  // [kind][i*n + j]
  const PolyMatrix& at(const LSymbol& s) const;
};

// Block (i,j) of R+- and of its inverse: R+- = sum e_ij (x) rho(L+-_ij).
struct RepLOperators {
  Rep vector;  // V
  Rep dual;    // V*: rho*(x) = rho(S(x))^T
  std::vector<PolyMatrix> SSLplus, SSLminus;  // rho(S^2(L+-_ij)), used by the dual
};

RepLOperators rep_l_operators(const RMatrixBundle& b);
// Coproduct: Delta(L_ij) = sum_k L_ik (x) L_kj, Delta(S(L_ij)) = sum_k S(L_kj) (x) S(L_ik).
Rep tensor_rep(const Rep& a, const Rep& b);
PolyMatrix rep_eval(const Rep& r, const LElement& x);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
};

// sum_k rho(L_ik) rho(S(L_kj)) = delta_ij, triangularity, weight property.
CheckReport verify_l_operator_identities(const RMatrixBundle& b, const RepLOperators& ops);
CheckReport verify_uq_relations(std::size_t n);

// J matrices (entries over qg_table()).
PolyMatrix j_def(std::size_t n);
PolyMatrix j_prime(std::size_t n, bool verbatim);
PolyMatrix j_sigma(std::size_t n, const RatFunc& s);
PolyMatrix j_grassmannian(std::size_t n, std::size_t l, const RatFunc& s);
PolyMatrix j_case1(std::size_t n);  // diag(q^{rho_i}) = diag(p^{n+1-2i})
PolyMatrix j_case2(std::size_t n);  // J0 diag(q^{rho_i}), n even

enum class ReflKind { reflVV, Urefl };
struct ReflectionResult {
  bool pass = false;
  PolyMatrix residual;  // lhs - rhs
};
ReflectionResult reflection_check(ReflKind kind, const PolyMatrix& J, const RMatrixBundle& b);

enum class CoidealLabel { projective_kdef, projective_M, general_MJ, grassmannian, custom };
std::string to_string(CoidealLabel l);

struct CoidealFamily {
  CoidealLabel label = CoidealLabel::custom;
  std::size_t n = 0;
  std::vector<LElement> generators;
};

// items (i)-(vi) with sqrt(c) = u, sqrt(d) = v
CoidealFamily coideal_kdef(std::size_t n, const RatFunc& u, const RatFunc& v);
// M = L+ J - J L- (J = J^sigma or the Grassmannian J^sigma)
CoidealFamily coideal_projective_M(const PolyMatrix& J, CoidealLabel label = CoidealLabel::projective_M);
// M = L+ - J S(L-)^t J^-1
CoidealFamily coideal_general_MJ(const PolyMatrix& J);

// Sum of counit values (L_ij, S(L_ij) -> delta_ij) of each generator.
std::vector<RatFunc> counit_values(const CoidealFamily& fam);

// Membership of (rho (x) rho) Delta(g) in K (x) End + End (x) K with K the
// represented span, via annihilator pairs.
CheckReport coideal_membership_check(const CoidealFamily& fam, const Rep& rep);

struct FixedVectorResult {
  bool pass = false;
  std::vector<RatVector> residuals;  // per generator
};
FixedVectorResult fixed_vector_check(const CoidealFamily& fam, const Rep& space, const RatVector& w);

// sum_k q^{2(n-k)} v*_k (x) v_k and the (u, v) vector, in V* (x) V.
std::array<RatVector, 2> kfixed_vectors(std::size_t n, const RatFunc& q, const RatFunc& u, const RatFunc& v);
// w_J = sum_ij J_ij v_i (x) v_j
RatVector w_vector(const PolyMatrix& J);

// C = sum_ij q^{2(n-i)} L+_ij S(L-_ji) in the representation. With the
// indices as printed (S(L-_ij)) triangularity kills every off-diagonal term;
// as_printed = true evaluates that form anyway.
PolyMatrix casimir_matrix(const Rep& r, const RatFunc& q, bool as_printed = false);
RatFunc casimir_eigenvalue(std::size_t n, int l, const RatFunc& q);

struct CasimirReport {
  PolyMatrix C;
  std::vector<RatFunc> eigenvalues;
  std::vector<std::size_t> multiplicities;
  bool pass = false;
};
enum class CasimirSpace { V, VxV, VdualxV };
CasimirReport casimir_action(const RMatrixBundle& b, const RepLOperators& ops, CasimirSpace space);

bool span_equal(const CoidealFamily& a, const CoidealFamily& b, const Rep& rep);

}  // namespace qsymm
