#pragma once

// Exact rationals. The ground field throughout is Q: every identity handled
// here has integer structure coefficients, so checking over Q certifies it
// over C as well.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace confalg {

/// Always canonical (reduced, positive denominator) after arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `p`, `-p` or `p/q`. Throws std::invalid_argument on bad input or q == 0.
Rational parse_rational(std::string_view text);

/// `p` when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& value);

/// Generalized binomial coefficient C(m, j) = m(m-1)...(m-j+1)/j!, valid for negative m.
Rational binomial(std::int64_t m, unsigned j);

/// m(m-1)...(m-j+1).
Integer falling_factorial(std::int64_t m, unsigned j);

Integer factorial(unsigned n);

}  // namespace confalg
