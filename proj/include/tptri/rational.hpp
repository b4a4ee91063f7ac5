#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tptri {

// Exact rational scalar.  GMP canonicalizes to lowest terms with a positive
// denominator, and every arithmetic operation preserves that form.
using Rational = mpq_class;
using Integer = mpz_class;

// Parse "p" or "p/q" in base 10 (optional leading '-' on either part).
// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" with q > 1 otherwise.
std::string to_string(const Rational& value);

// Binomial coefficient n over k, exactly.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace tptri
