#ifndef SINGPOLY_RATIONAL_HPP
#define SINGPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace singpoly {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from strings go through parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", with optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace singpoly

#endif
