#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "fuzzmine/error.hpp"

namespace fuzzmine {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

/// Truncates a non-negative value toward zero at 10^-2 (1/6 -> 0.16, 2/3 -> 0.66).
inline Rational truncate_hundredths(const Rational& x) {
  Integer scaled = boost::multiprecision::numerator(x) * 100;
  Integer hundredths = scaled / boost::multiprecision::denominator(x);
  return Rational(hundredths, Integer(100));
}

/// "p/q", or "p" when the value is an integer.
inline std::string to_fraction_string(const Rational& x) { return x.str(); }

/// Exact decimal when the value terminates in base ten ("0.36", "12"),
/// otherwise "p/q".
inline std::string to_decimal_string(const Rational& x) {
  Integer den = boost::multiprecision::denominator(x);
  int twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1 || x < 0) return to_fraction_string(x);
  int places = twos > fives ? twos : fives;
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Integer scaled = boost::multiprecision::numerator(x) * scale / boost::multiprecision::denominator(x);
  std::string digits = scaled.str();
  if (places == 0) return digits;
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return digits;
}

/// Fixed two-decimal rendering after truncation toward zero; "2.89", "0.20", "11.00".
inline std::string to_fixed2(const Rational& x) {
  Integer scaled = boost::multiprecision::numerator(x) * 100 / boost::multiprecision::denominator(x);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Integer whole = scaled / 100;
  int frac = static_cast<int>(scaled % 100);
  std::string out = negative ? "-" : "";
  out += whole.str();
  out += '.';
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

/// Decimal digits only; leading zeros are stripped so cpp_int does not read octal.
inline Integer decimal_integer(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer(std::string(digits.substr(first)));
}

}  // namespace detail

/// Parses "12", "0.36", ".5" or "9/25". Signs are not accepted.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return Error(ErrorKind::MalformedInput, "not a rational number: '" + std::string(text) + "'"); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) throw fail();
    Integer d = detail::decimal_integer(den);
    if (d == 0) throw fail();
    return Rational(detail::decimal_integer(num), d);
  }
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw fail();
  if (!whole.empty() && !detail::all_digits(whole)) throw fail();
  if (dot != std::string_view::npos && !frac.empty() && !detail::all_digits(frac)) throw fail();
  if (dot != std::string_view::npos && frac.empty() && whole.empty()) throw fail();
  Integer scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  Integer num = detail::decimal_integer(whole);
  num *= scale;
  if (!frac.empty()) num += detail::decimal_integer(frac);
  return Rational(num, scale);
}

}  // namespace fuzzmine
