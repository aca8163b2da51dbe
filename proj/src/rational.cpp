#include "covnet/rational.hpp"

namespace covnet {

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(const std::string& s) {
  // boost's parser rejects a leading '+'
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_int_token(text))
      throw ParseError("invalid rational literal: '" + text + "'");
    return Rational(parse_integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_int_token(num) || !valid_int_token(den))
    throw ParseError("invalid rational literal: '" + text + "'");
  Integer n = parse_integer(num);
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in rational: '" + text + "'");
  if (d < 0) {  // cpp_rational requires a positive denominator
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

std::string rational_to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace covnet
