#pragma once

// Exact rational scalar type used throughout the library. All quantities
// (distances, weights, norms, LP data) are arbitrary-precision rationals;
// no operation in this library ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace freelip {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::cpp_int_backend<>, bmp::et_off>;
using Rational = bmp::number<bmp::rational_adaptor<bmp::cpp_int_backend<>>, bmp::et_off>;

// Parses "a", "-a", "a/b" with b > 0 after an optional sign on the numerator
// only. Returns nullopt for anything else, including zero denominators.
inline std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t num_begin = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == num_begin) return std::nullopt;
  Integer num(text.substr(num_begin, pos - num_begin));
  Integer den(1);
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == den_begin || pos != text.size()) return std::nullopt;
    den = Integer(text.substr(den_begin));
    if (den == 0) return std::nullopt;
  }
  Rational value = Rational(num) / Rational(den);
  return negative ? Rational(-value) : value;
}

// Canonical form: reduced, denominator omitted when 1, e.g. "-3/2", "7".
inline std::string format_rational(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace freelip
