#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fachom {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Accepts "p", "p/q" and optional leading sign; throws Error(Input).
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace fachom
