#include "ultra/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "ultra/error.hpp"

namespace ultra {

namespace {

BigInt pow10(std::size_t digits) {
  BigInt p = 1;
  for (std::size_t i = 0; i < digits; ++i) p *= 10;
  return p;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt digits_to_int(std::string_view s) { return BigInt(std::string(s)); }

[[noreturn]] void parse_fail(std::string_view text, std::string_view reason) {
  throw Error(errc::parse_error,
              "invalid rational '" + std::string(text) + "': " + std::string(reason));
}

}  // namespace

Rational::Rational(int value) {
  if (value < 0) throw std::domain_error("Rational must be non-negative");
  value_ = value;
}

Rational::Rational(long long numerator, long long denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator.is_zero()) throw std::domain_error("Rational denominator must be nonzero");
  if (numerator < 0 || denominator < 0)
    throw std::domain_error("Rational must be non-negative");
  value_ = Rep(std::move(numerator), std::move(denominator));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) parse_fail(text, "empty");
  if (s.front() == '-') parse_fail(text, "value must be non-negative");
  if (s.front() == '+') parse_fail(text, "explicit sign not allowed");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) parse_fail(text, "expected digits around '/'");
    BigInt d = digits_to_int(den);
    if (d.is_zero()) parse_fail(text, "zero denominator");
    return Rational(digits_to_int(num), std::move(d));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) parse_fail(text, "expected digits around '.'");
    if (!whole.empty() && !all_digits(whole)) parse_fail(text, "expected digits before '.'");
    if (!frac.empty() && !all_digits(frac)) parse_fail(text, "expected digits after '.'");
    BigInt scale = pow10(frac.size());
    BigInt num = whole.empty() ? BigInt(0) : digits_to_int(whole);
    num *= scale;
    if (!frac.empty()) num += digits_to_int(frac);
    return Rational(std::move(num), std::move(scale));
  }
  if (!all_digits(s)) parse_fail(text, "expected digits");
  return Rational(digits_to_int(s), BigInt(1));
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  try {
    return parse(text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::str() const {
  BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::string Rational::decimal_str(unsigned max_frac_digits) const {
  BigInt num = numerator();
  BigInt den = denominator();
  // scaled = round_half_up(num * 10^d / den)
  BigInt scale = pow10(max_frac_digits);
  BigInt scaled_num = num * scale;
  BigInt q = scaled_num / den;
  BigInt r = scaled_num % den;
  if (r * 2 >= den) ++q;

  std::string digits = q.str();
  if (digits.size() <= max_frac_digits)
    digits.insert(0, max_frac_digits + 1 - digits.size(), '0');
  std::string whole = digits.substr(0, digits.size() - max_frac_digits);
  std::string frac = digits.substr(digits.size() - max_frac_digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return frac.empty() ? whole : whole + "." + frac;
}

Rational Rational::operator+(const Rational& o) const { return Rational(Rep(value_ + o.value_)); }

Rational Rational::operator-(const Rational& o) const {
  if (value_ < o.value_) throw std::domain_error("Rational subtraction below zero");
  return Rational(Rep(value_ - o.value_));
}

Rational Rational::operator*(const Rational& o) const { return Rational(Rep(value_ * o.value_)); }

Rational Rational::operator/(const Rational& o) const {
  if (o.value_.is_zero()) throw std::domain_error("Rational division by zero");
  return Rational(Rep(value_ / o.value_));
}

Rational Rational::half() const { return Rational(Rep(value_ / 2)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }


}  // namespace ultra
