#include "vcst/fixed.hpp"

#include <cmath>
#include <cstdlib>

namespace vcst {

Fixed Fixed::from_double(double v) {
  if (std::isinf(v) && v > 0) return infinity();
  if (!std::isfinite(v)) throw InvalidInstanceError("non-finite numeric value");
  double scaled = v * static_cast<double>(kScale);
  if (std::abs(scaled) >= 9.0e18)
    throw InvalidInstanceError("value out of fixed-point range");
  return from_units(static_cast<std::int64_t>(std::llround(scaled)));
}

Fixed Fixed::parse(std::string_view s) {
  if (s.empty()) throw InvalidInstanceError("empty numeric string");
  if (s == "inf" || s == "+inf") return infinity();
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size())
    throw InvalidInstanceError("bad numeric string: " + std::string(s));
  std::int64_t whole = 0;
  bool any_digit = false;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    any_digit = true;
    int d = s[pos] - '0';
    if (whole > (INT64_MAX - d) / 10)
      throw InvalidInstanceError("numeric overflow: " + std::string(s));
    whole = whole * 10 + d;
    ++pos;
  }
  std::int64_t frac = 0;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    int digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      any_digit = true;
      if (++digits > 6)
        throw InvalidInstanceError("more than 6 fractional digits: " +
                                   std::string(s));
      frac = frac * 10 + (s[pos] - '0');
      ++pos;
    }
    while (digits < 6) {
      frac *= 10;
      ++digits;
    }
  }
  if (!any_digit || pos != s.size())
    throw InvalidInstanceError("bad numeric string: " + std::string(s));
  if (whole > (INT64_MAX - frac) / kScale)
    throw InvalidInstanceError("numeric overflow: " + std::string(s));
  std::int64_t u = whole * kScale + frac;
  return from_units(neg ? -u : u);
}

std::string Fixed::to_string() const {
  if (is_infinite()) return "inf";
  std::int64_t u = units_;
  std::string sign;
  if (u < 0) {
    sign = "-";
    u = -u;
  }
  std::int64_t whole = u / kScale;
  std::int64_t frac = u % kScale;
  std::string out = sign + std::to_string(whole);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

double Fixed::to_double() const {
  if (is_infinite()) return HUGE_VAL;
  return static_cast<double>(units_) / static_cast<double>(kScale);
}

Fixed Fixed::operator+(const Fixed& o) const {
  if (is_infinite() || o.is_infinite()) return infinity();
  std::int64_t a = units_, b = o.units_;
  if ((b > 0 && a > INT64_MAX - b - 1) || (b < 0 && a < INT64_MIN - b))
    throw InternalError("fixed-point addition overflow");
  return from_units(a + b);
}

Fixed Fixed::operator-(const Fixed& o) const {
  if (is_infinite() || o.is_infinite())
    throw InternalError("fixed-point subtraction with infinity");
  return from_units(units_ - o.units_);
}

}  // namespace vcst
