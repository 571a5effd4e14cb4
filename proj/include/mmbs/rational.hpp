#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mmbs {

using Integer = mpz_class;
/// Exact rational; gmpxx keeps results of arithmetic canonical (lowest
/// terms, positive denominator).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Builds num/den in lowest terms. Throws InvalidArgument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q", "k" or "-p/q". Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// "k" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Converts an Integer known to fit into a signed 64-bit value.
std::int64_t to_int64(const Integer& z);

}  // namespace mmbs
