#include "dynfield/rational.hpp"

#include <cctype>

#include "dynfield/error.hpp"

namespace dynfield {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    }
  }
  return cpp_int(std::string(text));
}

}  // namespace

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string display(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return to_string(value);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const cpp_int num = parse_integer(text.substr(0, slash), text);
  const cpp_int den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational power_of(unsigned base, long exponent) {
  cpp_int p = boost::multiprecision::pow(
      cpp_int(base), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) return Rational(cpp_int(1), p);
  return Rational(p);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace dynfield
