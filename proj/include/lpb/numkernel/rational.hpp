#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lpb {

using Integer = mpz_class;
using Rational = mpq_class;

// Error taxonomy shared by every layer.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Integer& n) { return sgn(n) == 0; }

/// Canonical num/den; throws DivisionByZero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "a", "-a", "a/b" (decimal integers, optional leading sign).
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

bool is_integer(const Rational& r);

/// Positive generator of the Z-module spanned by the values; 0 for an empty / all-zero span.
Rational rational_gcd(std::span<const Rational> values);

/// Least common multiple of the denominators (1 for an empty span).
Integer denominator_lcm(std::span<const Rational> values);

}  // namespace lpb
