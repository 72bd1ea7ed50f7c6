#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace facelat {

/// Arbitrary-precision rational, always kept in canonical (gcd-reduced,
/// positive denominator) form.
using ExactScalar = mpq_class;
using ExactVector = std::vector<ExactScalar>;
using ExactMatrix = std::vector<ExactVector>;  // row-major

/// Parses "p", "-p", "p/q". Throws Error(ParseError) on malformed input or a
/// zero denominator.
ExactScalar parse_scalar(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const ExactScalar& value);

int sign(const ExactScalar& value);

ExactScalar dot(const ExactVector& a, const ExactVector& b);

bool is_zero(const ExactVector& v);

ExactVector scaled(const ExactVector& v, const ExactScalar& factor);
ExactVector add(const ExactVector& a, const ExactVector& b);
ExactVector subtract(const ExactVector& a, const ExactVector& b);
ExactVector negated(const ExactVector& v);

/// Integer-like vector check (every denominator is 1).
bool is_integral(const ExactVector& v);

std::string to_string(const ExactVector& v);

}  // namespace facelat
