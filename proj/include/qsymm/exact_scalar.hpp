#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qsymm {

// GMP keeps mpq_class canonical (coprime, positive denominator) after every
// arithmetic operation, so ExactScalar needs no extra normalization layer.
using ExactScalar = mpq_class;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
ExactScalar parse_scalar(std::string_view text);
std::string to_string(const ExactScalar& x);

// x^e for any integer e (x != 0 when e < 0).
ExactScalar scalar_pow(const ExactScalar& x, long e);

}  // namespace qsymm
