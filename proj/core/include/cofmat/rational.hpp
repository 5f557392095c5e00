#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cofmat {

// Arbitrary-precision rational backed by GMP. gmpxx keeps arithmetic results
// in canonical form (positive denominator, reduced).
using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

// "num/den", with the denominator omitted when it is 1.
std::string to_string(const Rational& value);

// Accepts "a", "a/b" and "-a/b" with decimal integers; the result is
// canonicalized. Throws std::invalid_argument on malformed input or b == 0.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace cofmat
