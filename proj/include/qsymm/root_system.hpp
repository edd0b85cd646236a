#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsymm/laurent_poly.hpp"

namespace qsymm {

enum class RootKind { A, B, C, D, BC };

// Integer vector in the epsilon basis (length l+1 for A_l, l otherwise).
using WeightVec = std::vector<int>;

// w(lambda)_{perm[i]} = sign[i] * lambda_i
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
  WeightVec apply(const WeightVec& v) const;
  SignedPerm compose(const SignedPerm& inner) const;  // (this o inner)
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
};

struct RootSystemData {
  RootKind kind = RootKind::A;
  int rank = 1;
  std::vector<WeightVec> positive_roots;
  std::vector<WeightVec> simple_roots;
  std::vector<SignedPerm> weyl_generators;
  std::map<WeightVec, ExactScalar> multiplicity;  // on positive roots

  std::size_t dim() const { return kind == RootKind::A ? rank + 1 : rank; }
  std::string label() const;
};

// Supported envelope: rank 1..4 (D needs rank >= 2).
RootSystemData make_root_system(RootKind kind, int rank);
// "A2", "BC1", ...
RootSystemData parse_root_system(std::string_view token);

int inner(const WeightVec& a, const WeightVec& b);
// Sets k by squared root length (1, 2 or 4 in the epsilon normalization).
void set_multiplicity_by_length(RootSystemData& rs, const std::map<int, ExactScalar>& by_len2);
bool multiplicity_is_weyl_invariant(const RootSystemData& rs);

std::vector<SignedPerm> weyl_group(const RootSystemData& rs);
std::vector<WeightVec> weyl_orbit(const RootSystemData& rs, const WeightVec& lambda);
bool is_dominant(const RootSystemData& rs, const WeightVec& lambda);
// Reflects into the dominant chamber.
WeightVec dominant_representative(const RootSystemData& rs, const WeightVec& mu);

// x_i = e^{eps_i} realized by table variables xvars[i].
LaurentPoly orbit_sum(const RootSystemData& rs, const WeightVec& lambda, const VarTablePtr& table,
                      const std::vector<std::size_t>& xvars);

// lambda - mu a non-negative rational combination of positive roots.
bool dominance_leq(const RootSystemData& rs, const WeightVec& mu, const WeightVec& lambda);
// Dominant mu <= lambda in the same root-lattice coset, ascending in a linear
// order refining dominance (lambda last), ties broken lexicographically.
std::vector<WeightVec> dominant_weights_below(const RootSystemData& rs, const WeightVec& lambda);

std::string weight_to_string(const WeightVec& w);
WeightVec parse_weight(std::string_view text);  // "2,1,0"

}  // namespace qsymm
