#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ultra {

using BigInt = boost::multiprecision::cpp_int;

/// Exact non-negative rational, always stored reduced. Every distance, level
/// and spectrum value in the library is a Rational; no floating point is used
/// anywhere on the value path.
class Rational {
 public:
  Rational() = default;  // zero
  Rational(int value);
  Rational(long long numerator, long long denominator);
  Rational(BigInt numerator, BigInt denominator);

  /// Accepts "p", "p/q" and finite decimals such as "2.75" (converted
  /// exactly). Throws Error(errc::parse_error) on anything else, including
  /// negative values.
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_zero() const { return value_.is_zero(); }

  /// "p" when the denominator is 1, otherwise "p/q". This is the rendering
  /// used in canonical signatures and all file formats.
  std::string str() const;

  /// Decimal rendering for drawings: exact when the reduced denominator has
  /// only factors 2 and 5 within the digit budget, otherwise rounded half-up.
  /// Trailing zeros are trimmed.
  std::string decimal_str(unsigned max_frac_digits = 4) const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;  // throws std::domain_error below zero
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws std::domain_error on zero divisor
  Rational half() const;

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    if (value_ < o.value_) return std::strong_ordering::less;
    if (value_ == o.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

 private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit Rational(Rep value) : value_(std::move(value)) {}

  Rep value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b).half(); }

}  // namespace ultra
