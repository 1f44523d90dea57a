#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dynfield {

/// Arbitrary-precision exact rational. All encodings, cells and branch
/// coefficients are carried in this type.
using Rational = boost::multiprecision::cpp_rational;

/// Serializes as "num/den", also for integers ("3/1").
std::string to_string(const Rational& value);

/// Human-readable form: integers without the denominator ("3", "1/4").
std::string display(const Rational& value);

/// Accepts "num/den" or a bare integer. Throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

/// base^exponent; negative exponents give the reciprocal power.
Rational power_of(unsigned base, long exponent);

double to_double(const Rational& value);

}  // namespace dynfield
