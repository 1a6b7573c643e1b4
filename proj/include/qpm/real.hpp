// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpm {

using Rational = boost::multiprecision::cpp_rational;

enum class Arithmetic { Exact, Float };

/// A distance value. Holds either an arbitrary-precision rational or a
/// binary double. Arithmetic on two exact operands stays exact; any
/// operation involving a double produces a double.
class Real {
 public:
  Real() : value_(Rational(0)) {}
  Real(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Real(double v) : value_(v) {}               // NOLINT(google-explicit-constructor)
  Real(int v) : value_(Rational(v)) {}        // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }

  /// Throws std::logic_error when the value is a double.
  const Rational& rational() const;
  double to_double() const;

  /// Converts to the representation required by `mode`. Doubles are
  /// converted to rationals exactly (the binary value, not a decimal guess).
  Real as(Arithmetic mode) const;

  bool is_zero() const;
  bool is_negative() const;

  /// "p/q" (or "p") for exact values, shortest round-trip decimal for doubles.
  std::string str() const;

  /// Accepts "p", "p/q", and plain decimals such as "0.25" or "-3.5e-2".
  /// Decimals are read exactly in EXACT mode. Throws std::invalid_argument.
  static Real parse(std::string_view text, Arithmetic mode);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real& operator+=(const Real& other) { return *this = *this + other; }
  Real& operator-=(const Real& other) { return *this = *this - other; }

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return (a <=> b) == 0; }

  /// Structural identity: same representation and same value. Used where a
  /// round trip must be bit-for-bit (serialization, determinism checks).
  bool identical(const Real& other) const;

 private:
  std::variant<Rational, double> value_;
};

Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// Comparison rules attached to a space. EXACT compares rationals exactly;
/// FLOAT applies `tolerance` to every "= 0" and "<=" test.
struct NumericPolicy {
  static constexpr double kDefaultTolerance = 1e-9;

  Arithmetic mode = Arithmetic::Exact;
  double tolerance = kDefaultTolerance;

  static NumericPolicy exact() { return {}; }
  static NumericPolicy floating(double tol = kDefaultTolerance) { return {Arithmetic::Float, tol}; }

  bool leq(const Real& a, const Real& b) const;
  bool is_zero(const Real& a) const;
  Real coerce(const Real& v) const { return v.as(mode); }
};

/// A distance that may be infinite. Infinity absorbs addition and compares
/// above every finite value.
class ExtendedDistance {
 public:
  ExtendedDistance(Real v);  // NOLINT(google-explicit-constructor)
  static ExtendedDistance infinity() { return ExtendedDistance(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error on infinity.
  const Real& value() const;
  std::string str() const;

  friend ExtendedDistance operator+(const ExtendedDistance& a, const ExtendedDistance& b);
  friend std::partial_ordering operator<=>(const ExtendedDistance& a, const ExtendedDistance& b);
  friend bool operator==(const ExtendedDistance& a, const ExtendedDistance& b) { return (a <=> b) == 0; }

 private:
  ExtendedDistance() = default;
  std::optional<Real> value_;
};

}  // namespace qpm
