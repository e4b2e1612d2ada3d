#include "expost/beta.hpp"

#include <cctype>

namespace expost::beta {

namespace {

Rational parse_decimal(std::string_view t) {
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t.remove_prefix(1);
  }
  if (t.empty()) throw Error(ErrorCode::InvalidInput, "empty number");
  boost::multiprecision::cpp_int num = 0, den = 1;
  bool dot = false, digits = false;
  for (char c : t) {
    if (c == '.' && !dot) {
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      num = num * 10 + (c - '0');
      if (dot) den *= 10;
      digits = true;
    } else {
      throw Error(ErrorCode::InvalidInput, "not a rational number: " + std::string(t));
    }
  }
  if (!digits) throw Error(ErrorCode::InvalidInput, "not a rational number: " + std::string(t));
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  return parse_decimal(text.substr(0, slash)) / den;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace expost::beta
