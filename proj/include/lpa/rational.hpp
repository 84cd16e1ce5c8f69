#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lpa {

// Arbitrary precision rational scalar used by every exact computation.
using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws lpa::Error on malformed text or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace lpa
