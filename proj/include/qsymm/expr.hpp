#pragma once

#include <string_view>

#include "qsymm/rat_func.hpp"

namespace qsymm {

// Rational expressions over the table: integers, p/q literals, variable
// names, + - * / ^ (integer exponents) and parentheses. "-q^3", "s*q/t".
RatFunc parse_expression(std::string_view text, const VarTablePtr& table);

}  // namespace qsymm
