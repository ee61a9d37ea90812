#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hookid {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; throws std::domain_error when den is 0.
[[nodiscard]] Rational make_rational(const Integer& num, const Integer& den);

/// Always "p/q" with q >= 1, so integers print as "n/1".
[[nodiscard]] std::string to_fraction_string(const Rational& q);
/// Human-facing form: "n" for integers, "p/q" otherwise.
[[nodiscard]] std::string to_display_string(const Rational& q);
/// Accepts "n" or "p/q" (q != 0); the result is canonicalized.
[[nodiscard]] Rational parse_rational(std::string_view text);

[[nodiscard]] inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace hookid
