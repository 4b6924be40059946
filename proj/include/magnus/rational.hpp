#ifndef MAGNUS_RATIONAL_HPP
#define MAGNUS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace magnus {

/// Exact rational scalar. GMP keeps every arithmetic result canonical
/// (lowest terms, positive denominator); values built from raw
/// numerator/denominator pairs must go through make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" (optional sign on p). Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q" with q >= 1, e.g. "-1/12", "3/1", "0/1".
std::string rational_to_fraction_string(const Rational& r);

/// Short human form: "3", "-1/12".
std::string rational_to_string(const Rational& r);

Rational factorial(int n);

}  // namespace magnus

#endif  // MAGNUS_RATIONAL_HPP
