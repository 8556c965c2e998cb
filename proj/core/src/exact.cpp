// SPDX-License-Identifier: Apache-2.0
#include "stirsum/exact.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "stirsum/errors.hpp"

namespace stirsum {

ExactRational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  ExactRational q(numerator, denominator);
  q.canonicalize();
  return q;
}

ExactRational make_rational(long numerator, long denominator) {
  return make_rational(BigInt(numerator), BigInt(denominator));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParameterError("malformed number: '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParameterError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw ParameterError("zero denominator in '" + std::string(whole) + "'");
    return make_rational(num, den);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    BigInt ev = parse_integer(text.substr(e + 1), whole);
    if (!ev.fits_slong_p() || abs(ev) > 100000) throw ParameterError("exponent out of range in '" + std::string(whole) + "'");
    exponent = ev.get_si();
    text = text.substr(0, e);
  }

  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParameterError("malformed number: '" + std::string(whole) + "'");
    digits = std::string(ip) + std::string(fp);
    fraction_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(text)) throw ParameterError("malformed number: '" + std::string(whole) + "'");
    digits = std::string(text);
  }

  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  const long scale = exponent - fraction_digits;
  if (scale >= 0) return ExactRational(mantissa * pow(BigInt(10), static_cast<unsigned long>(scale)));
  return make_rational(mantissa, pow(BigInt(10), static_cast<unsigned long>(-scale)));
}

BigInt floor(const ExactRational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil(const ExactRational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

ExactRational fractional_part(const ExactRational& q) { return q - ExactRational(floor(q)); }

bool is_integer(const ExactRational& q) { return q.get_den() == 1; }

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

ExactRational pow(const ExactRational& base, unsigned long exponent) {
  ExactRational r(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  r.canonicalize();
  return r;
}

std::string to_string(const ExactRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  BigInt den = q.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return q.get_str();

  const unsigned long places = std::max(twos, fives);
  BigInt scaled = q.get_num() * pow(BigInt(10), places) / q.get_den();
  const bool negative = scaled < 0;
  std::string digits = BigInt(abs(scaled)).get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

}  // namespace stirsum
