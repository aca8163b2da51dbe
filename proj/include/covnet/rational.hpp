#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace covnet {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "123", "-4" or "num/den" with a positive denominator after
// normalization. Whitespace is not allowed.
Rational parse_rational(const std::string& text);

// Canonical form: "n" when the denominator is 1, otherwise "n/d".
std::string rational_to_string(const Rational& value);

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace covnet
