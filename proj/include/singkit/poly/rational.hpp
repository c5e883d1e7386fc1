#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace singkit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "3", "-1/2".
std::string to_string(const Rational& q);

/// Parses "a" or "a/b" with an optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);

bool is_integer(const Rational& q);

/// True iff q = r^2 for some rational r.
bool is_rational_square(const Rational& q);

}  // namespace singkit
