// SPDX-License-Identifier: Apache-2.0
#include "stirsum/complex.hpp"

#include <string>

#include "stirsum/errors.hpp"

namespace stirsum {

ComplexRational parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s.empty()) throw ParameterError("empty complex number");
  if (s.back() != 'i') return {parse_rational(s), 0};

  s.pop_back();
  // Split at the last sign that is not the leading one and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [&](const std::string& part) -> ExactRational {
    if (part.empty() || part == "+") return 1;
    if (part == "-") return -1;
    return parse_rational(part);
  };
  if (split == std::string::npos) return {0, imag_of(s)};
  return {parse_rational(s.substr(0, split)), imag_of(s.substr(split))};
}

std::string to_string(const ComplexRational& z) {
  if (z.is_real()) return to_string(z.re);
  std::string im = to_string(z.im);
  if (im.front() != '-') im.insert(0, "+");
  return to_string(z.re) + im + "i";
}

ComplexReal exp(const ComplexReal& z) {
  BigReal m = exp(z.re());
  return {m * cos(z.im()), m * sin(z.im())};
}

ComplexReal pow(const BigReal& base, const ComplexReal& exponent) {
  if (base.sign() <= 0) throw DomainError("complex power needs a positive base");
  return exp(exponent * log(base));
}

}  // namespace stirsum
