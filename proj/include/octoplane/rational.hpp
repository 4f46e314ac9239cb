#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace octoplane {

// Exact scalar. gmpxx keeps values canonical (lowest terms, positive
// denominator) as long as they are built through make_rational/parse_rational
// or arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

bool is_zero(const RatVector& v);

/// Least common multiple of all denominators in v (1 for an empty vector).
Integer common_denominator(const RatVector& v);

}  // namespace octoplane
