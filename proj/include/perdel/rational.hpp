#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace perdel {

/// Exact rational scalar. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" form, with "/q" omitted when q == 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q". Throws InputError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

Integer lcm_of_denominators(const std::vector<Rational>& values);
Integer gcd_of_numerators(const std::vector<Rational>& values);

/// Fits in int64, else throws Error("ArithmeticOverflow").
std::int64_t to_int64(const Integer& z);

}  // namespace perdel
