#include "qpd/rational.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace qpd {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::ParseError, "not a rational number: '" + std::string(text) + "'");
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_digits(digits)) bad_number(whole);
  mpz_class value(std::string(digits), 10);
  return negative ? mpz_class(-value) : value;
}

Rational parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    auto [ptr, ec] = std::from_chars(exp_text.data() + (exp_text.starts_with('+') ? 1 : 0),
                                     exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) bad_number(text);
    if (exponent > 4096 || exponent < -4096) bad_number(text);
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((!int_part.empty() && !is_digits(int_part)) || (!frac_part.empty() && !is_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      bad_number(text);
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!is_digits(mantissa)) bad_number(text);
    digits = std::string(mantissa);
  }
  mpz_class numerator(digits, 10);
  if (negative) numerator = -numerator;
  long shift = exponent - fraction_digits;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational result = shift >= 0 ? Rational(numerator * power) : Rational(numerator, power);
  result.canonicalize();
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) bad_number(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) bad_number(text);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational result(num, den);
    result.canonicalize();
    return result;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::NonFiniteValue, "cannot convert non-finite double to rational");
  }
  return Rational(value);
}

Rational rational_from_decimal(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::NonFiniteValue, "cannot convert non-finite double to rational");
  }
  std::array<char, 64> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return parse_rational(std::string_view(buffer.data(), static_cast<std::size_t>(ptr - buffer.data())));
}

int sign_of_surd(const Rational& u, const Rational& v, const Rational& r) {
  if (sgn(r) < 0) throw Error(ErrorKind::PreconditionViolated, "square root of a negative rational");
  const int su = sgn(u);
  const int sv = sgn(r) == 0 ? 0 : sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: compare u^2 against v^2 r.
  const Rational lhs = u * u;
  const Rational rhs = v * v * r;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? su : sv;
}

Rational best_rational_approximation(const Rational& value, const mpz_class& max_denominator) {
  if (max_denominator < 1) {
    throw Error(ErrorKind::PreconditionViolated, "max_denominator must be >= 1");
  }
  if (value.get_den() <= max_denominator) return value;
  // Same scheme as Python's Fraction.limit_denominator.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = value.get_num(), d = value.get_den();
  for (;;) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpz_class rem = n - a * d;
    n = d;
    d = rem;
  }
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), mpz_class(max_denominator - q0).get_mpz_t(), q1.get_mpz_t());
  Rational bound1(mpz_class(p0 + k * p1), mpz_class(q0 + k * q1));
  Rational bound2(p1, q1);
  bound1.canonicalize();
  bound2.canonicalize();
  Rational diff2 = bound2 - value;
  Rational diff1 = bound1 - value;
  return abs(diff2) <= abs(diff1) ? bound2 : bound1;
}

}  // namespace qpd
