#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace rcft {

/// Exact small rational used for exponents, central charges and weights.
using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", "p" or "-p/q". Throws Error(InvalidArgument) on malformed input.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

/// Fractional part in [0, 1).
Rational fractional_part(const Rational& r);

/// Largest integer <= r.
std::int64_t floor(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace rcft
