#pragma once

#include <array>
#include <string_view>

#include "qsymm/rat_func.hpp"

namespace qsymm {

// (a; base)_n = prod_{k<n} (1 - a base^k)
RatFunc q_pochhammer(const RatFunc& a, const RatFunc& base, int n);
LaurentPoly q_pochhammer(const LaurentPoly& a, const LaurentPoly& base, int n);

// Terminating 4phi3 with first upper parameter base^{-n}.
RatFunc phi_4_3_terminating(int n, const std::array<RatFunc, 3>& upper, const std::array<RatFunc, 3>& lower,
                            const RatFunc& arg, const RatFunc& base);

struct AWParams {
  RatFunc a, b, c, d;
  LaurentPoly base;
  std::size_t z = 0;  // index of the z variable in the common table

  const VarTablePtr& table() const { return base.table(); }
  std::array<RatFunc, 4> list() const { return {a, b, c, d}; }
};

// Validates the base (not 0, not +-1) and locates the z variable.
AWParams make_aw_params(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d,
                        const LaurentPoly& base, std::string_view zname = "z");
AWParams with_parameters(const AWParams& p, const std::array<RatFunc, 4>& abcd);

// P_n(z) = a^{-n}(ab,ac,ad;q)_n 4phi3(q^{-n}, abcd q^{n-1}, az, a/z; ab, ac, ad; q, q),
// a symmetric Laurent polynomial in z.
LaurentPoly aw_polynomial(int n, const AWParams& p);

// r_n = 4phi3(...) = scale * body with body = P_n and the z-free
// scale = 1/(a^{-n}(ab,ac,ad;q)_n); r_n(z=a) = 1.
struct AWPolynomialR {
  RatFunc scale;
  LaurentPoly body;
  RatFunc value() const { return scale * RatFunc(body); }
};
AWPolynomialR aw_polynomial_r(int n, const AWParams& p);

}  // namespace qsymm
