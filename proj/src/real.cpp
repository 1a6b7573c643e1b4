// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qpm/real.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <system_error>

namespace qpm {

namespace {

Rational pow10(int exponent) {
  Rational r(1);
  for (int i = 0; i < exponent; ++i) r *= 10;
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Exact parse of [-+]?digits(.digits)?([eE][-+]?digits)?
std::optional<Rational> parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
      exp_negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 4) return std::nullopt;
    exponent = std::stoi(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  int fraction_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      return std::nullopt;
    }
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<int>(frac.size());
  } else {
    if (!all_digits(s)) return std::nullopt;
    digits = std::string(s);
  }
  // cpp_int reads a leading 0 as an octal prefix
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  Rational r{boost::multiprecision::cpp_int(digits)};
  exponent -= fraction_digits;
  if (exponent > 0) r *= pow10(exponent);
  if (exponent < 0) r /= pow10(-exponent);
  return negative ? Rational(-r) : r;
}

}  // namespace

const Rational& Real::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw std::logic_error("Real::rational: value is a floating-point number");
}

double Real::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->convert_to<double>();
  return std::get<double>(value_);
}

Real Real::as(Arithmetic mode) const {
  if (mode == Arithmetic::Float) return Real(to_double());
  if (is_exact()) return *this;
  double v = std::get<double>(value_);
  if (!std::isfinite(v)) throw std::invalid_argument("cannot represent non-finite value exactly");
  return Real(Rational(v));
}

bool Real::is_zero() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->is_zero();
  return std::get<double>(value_) == 0.0;
}

bool Real::is_negative() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->sign() < 0;
  return std::get<double>(value_) < 0.0;
}

std::string Real::str() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->str();
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(value_));
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

Real Real::parse(std::string_view text, Arithmetic mode) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_decimal(text.substr(0, slash));
    auto den = parse_decimal(text.substr(slash + 1));
    if (!num || !den) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (den->is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = *num / *den;
  } else {
    auto dec = parse_decimal(text);
    if (!dec) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    if (mode == Arithmetic::Float) {
      // correctly rounded, unlike the rational conversion
      double v = 0;
      const char* begin = text.data() + (text.front() == '+' ? 1 : 0);
      auto [end, ec] = std::from_chars(begin, text.data() + text.size(), v);
      if (ec == std::errc() && end == text.data() + text.size()) return Real(v);
    }
    value = *dec;
  }
  return Real(std::move(value)).as(mode);
}

Real operator+(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) return Real(a.rational() + b.rational());
  return Real(a.to_double() + b.to_double());
}

Real operator-(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) return Real(a.rational() - b.rational());
  return Real(a.to_double() - b.to_double());
}

Real operator*(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) return Real(a.rational() * b.rational());
  return Real(a.to_double() * b.to_double());
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_exact() && b.is_exact()) return Real(a.rational() / b.rational());
  return Real(a.to_double() / b.to_double());
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) {
    const int c = a.rational().compare(b.rational());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return a.to_double() <=> b.to_double();
}

bool Real::identical(const Real& other) const {
  if (is_exact() != other.is_exact()) return false;
  if (is_exact()) return rational() == other.rational();
  // bitwise: distinguishes -0.0 and treats NaN payloads as equal to themselves
  double x = std::get<double>(value_);
  double y = std::get<double>(other.value_);
  return std::memcmp(&x, &y, sizeof(double)) == 0;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }
Real min(const Real& a, const Real& b) { return (b < a) ? b : a; }

bool NumericPolicy::leq(const Real& a, const Real& b) const {
  if (mode == Arithmetic::Exact) return a <= b;
  return a.to_double() <= b.to_double() + tolerance;
}

bool NumericPolicy::is_zero(const Real& a) const {
  if (mode == Arithmetic::Exact) return a.is_zero();
  return std::abs(a.to_double()) <= tolerance;
}

ExtendedDistance::ExtendedDistance(Real v) : value_(std::move(v)) {
  if (value_->is_negative()) throw std::invalid_argument("distance must be nonnegative");
}

const Real& ExtendedDistance::value() const {
  if (!value_) throw std::logic_error("ExtendedDistance::value: distance is infinite");
  return *value_;
}

std::string ExtendedDistance::str() const { return value_ ? value_->str() : "inf"; }

ExtendedDistance operator+(const ExtendedDistance& a, const ExtendedDistance& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtendedDistance::infinity();
  return ExtendedDistance(a.value() + b.value());
}

std::partial_ordering operator<=>(const ExtendedDistance& a, const ExtendedDistance& b) {
  if (a.is_infinite() && b.is_infinite()) return std::partial_ordering::equivalent;
  if (a.is_infinite()) return std::partial_ordering::greater;
  if (b.is_infinite()) return std::partial_ordering::less;
  return a.value() <=> b.value();
}

}  // namespace qpm
