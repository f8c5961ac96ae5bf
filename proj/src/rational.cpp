#include "rcft/rational.hpp"

#include <charconv>

#include "rcft/error.hpp"

namespace rcft {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    fail(ErrorCode::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

Rational fractional_part(const Rational& r) { return r - Rational(floor(r)); }

}  // namespace rcft
