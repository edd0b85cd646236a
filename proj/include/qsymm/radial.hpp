#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsymm/aw_ops.hpp"
#include "qsymm/mk_poly.hpp"

namespace qsymm {

// {z, q, s, t}: z is the restricted torus variable z = z_1 z_n^-1,
// s = q^sigma, t = q^tau.
VarTablePtr radial_table();

struct ProjectiveSphericalSetup {
  int n = 2;
  RatFunc q, s, t;  // over one table containing z
  std::size_t z = 0;
};

// sigma, tau: "symbolic" (the variable s or t), an integer k (q^k), or
// "=P/Q" for a literal value of s or t. "inf" is rejected.
ProjectiveSphericalSetup make_spherical_setup(int n, std::string_view sigma = "symbolic",
                                              std::string_view tau = "symbolic");
ProjectiveSphericalSetup make_spherical_setup(int n, const RatFunc& s, const RatFunc& t);

// a = -stq, b = -q/(st), c = sq/t, d = t q^{2n-3}/s, base q^2.
AWParams aw_params_from_sigma_tau(const ProjectiveSphericalSetup& setup);

// A(z;q^2)(T - 1) + A(1/z;q^2)(T^-1 - 1) + (1 - q^{2n})/(1 - q^2)
QDifferenceOp radial_operator(const ProjectiveSphericalSetup& setup);

// q^{2(l+n-1)} + q^{-2l} + sum_{1<i<n} q^{2(n-i)}
RatFunc radial_eigenvalue(int n, int l, const RatFunc& q);
// -(1 - q^{-2l})(1 - q^{2(l-1)} abcd) + (1 - q^{2n})/(1 - q^2) with abcd
// taken from the parameter map.
RatFunc bridge_eigenvalue(const ProjectiveSphericalSetup& setup, int l);
bool bridge_identity_holds(int n, int l);

struct SphericalEntry {
  int l = 0;
  bool pass = false;
  RatFunc eigenvalue;
  LaurentPoly residual;  // D(P_l) - eigenvalue * P_l on the polynomial body
  bool bridge_pass = false;
  double runtime_ms = 0;
};

struct SphericalReport {
  std::string normalization = "r_n (4phi3 = 1 at z = a)";
  std::vector<SphericalEntry> entries;
  bool all_pass() const;
};

SphericalReport verify_spherical_identification(const ProjectiveSphericalSetup& setup, int l_max,
                                                Exec exec = Exec::parallel);
// Same with a caller-supplied operator (used by the negative controls).
SphericalReport verify_spherical_identification(const ProjectiveSphericalSetup& setup, const QDifferenceOp& op,
                                                int l_max, Exec exec = Exec::parallel);

// BC_1 Koornwinder operator at the radial parameters versus D: the shift
// coefficients agree up to one z-free factor.
struct RankOneComparison {
  bool pass = false;
  RatFunc factor;  // koornwinder coefficient / radial coefficient
};
RankOneComparison compare_rank_one_koornwinder(const ProjectiveSphericalSetup& setup);

// Table I: classical compact symmetric spaces, stored as printed.
struct SymmetricSpaceCase {
  int number = 0;
  std::string cartan, G, K, rank, sigma, multiplicities;
};
const std::vector<SymmetricSpaceCase>& table1();
const SymmetricSpaceCase& table1_case(int number);

struct Table1Instance {
  SymmetricSpaceCase row;
  int n = 0, l = 0;
  RootKind kind = RootKind::A;
  int rank = 0;
  // m_alpha by squared length in the epsilon normalization (1 short,
  // 2 medium, 4 long); k = m/2 on the doubled system
  std::map<int, ExactScalar> m, k;
  std::optional<MKWeightSpec> spec;
  bool heuristic = false;
  std::string note;
};

// n and l as in the row (l is ignored where the row fixes it).
Table1Instance multiplicities_to_parameters(int number, int n, int l = 0, bool heuristic = false);

}  // namespace qsymm
