#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vcst {

// Thrown when an input file or in-memory instance violates a structural
// requirement (bad coordinates, negative weight, non-monotone table, ...).
struct InvalidInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a problem has no feasible solution (disconnected terminals,
// uncoverable element, only infinite-weight solutions, ...).
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an input exceeds a documented size cap of an exact solver.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal invariant that should hold by construction fails.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Decimal fixed-point value with 6 fractional digits, plus an explicit
// +infinity sentinel.  All weight/length/coordinate arithmetic in the
// library happens on this type so that sums and comparisons are exact and
// serialization round-trips byte for byte.
class Fixed {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  Fixed() : units_(0) {}

  static Fixed from_units(std::int64_t u) {
    Fixed f;
    f.units_ = u;
    return f;
  }
  static Fixed from_int(std::int64_t v) { return from_units(v * kScale); }
  static Fixed infinity() { return from_units(kInfUnits); }

  // Rounds to the nearest representable value; rejects non-finite input.
  static Fixed from_double(double v);

  // Exact parse of a decimal string with at most 6 fractional digits,
  // or "inf".  Throws InvalidInstanceError otherwise.
  static Fixed parse(std::string_view s);

  // Canonical decimal rendering: no exponent, trailing zeros trimmed,
  // "inf" for the sentinel.  parse(to_string(x)) == x for every value.
  std::string to_string() const;

  bool is_infinite() const { return units_ == kInfUnits; }
  std::int64_t units() const { return units_; }
  double to_double() const;

  bool operator==(const Fixed& o) const { return units_ == o.units_; }
  bool operator!=(const Fixed& o) const { return units_ != o.units_; }
  bool operator<(const Fixed& o) const { return units_ < o.units_; }
  bool operator<=(const Fixed& o) const { return units_ <= o.units_; }
  bool operator>(const Fixed& o) const { return units_ > o.units_; }
  bool operator>=(const Fixed& o) const { return units_ >= o.units_; }

  // Saturating addition: inf + x == inf.  Overflow of finite values throws.
  Fixed operator+(const Fixed& o) const;
  Fixed& operator+=(const Fixed& o) {
    *this = *this + o;
    return *this;
  }
  // Difference of finite values (used by validators); throws on infinities.
  Fixed operator-(const Fixed& o) const;

 private:
  static constexpr std::int64_t kInfUnits = INT64_MAX;
  std::int64_t units_;
};

inline Fixed min(const Fixed& a, const Fixed& b) { return a < b ? a : b; }
inline Fixed max(const Fixed& a, const Fixed& b) { return a < b ? b : a; }

}  // namespace vcst
