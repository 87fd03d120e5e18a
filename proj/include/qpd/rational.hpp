#ifndef QPD_RATIONAL_HPP
#define QPD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qpd/error.hpp"

namespace qpd {

/// Exact-mode scalar. Arithmetic results from GMP are always in lowest
/// terms with a positive denominator, so structural equality is value
/// equality.
using Rational = mpq_class;

/// Parses "p/q", an integer "p", or a decimal literal such as "-0.125" or
/// "2.5e-3". Throws Error(ErrorKind::ParseError) on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// The exact binary value of a finite double.
Rational rational_from_double(double value);

/// The shortest decimal that round-trips to `value` (so 0.1 -> 1/10).
Rational rational_from_decimal(double value);

inline double to_double(const Rational& value) { return value.get_d(); }

inline int sign(const Rational& value) { return sgn(value); }

/// Sign of u + v*sqrt(r) for rational u, v and r >= 0, decided exactly.
int sign_of_surd(const Rational& u, const Rational& v, const Rational& r);

/// Best rational approximation of `value` with denominator at most
/// `max_denominator` (continued fractions with semiconvergents).
Rational best_rational_approximation(const Rational& value,
                                     const mpz_class& max_denominator);

}  // namespace qpd

#endif  // QPD_RATIONAL_HPP
