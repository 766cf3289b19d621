#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hiergame {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Accepts "p", "-p" and "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

std::vector<std::string> to_strings(const std::vector<Rational>& values);

}  // namespace hiergame
