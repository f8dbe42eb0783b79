#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace vassiliev {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "n" or "p/q". Throws std::invalid_argument on bad input.
inline Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  try {
    return Rational(std::string(s));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: " + std::string(s));
  }
}

}  // namespace vassiliev
