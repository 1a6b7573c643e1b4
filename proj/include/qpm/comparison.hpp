// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpm/real.hpp"

namespace qpm {

enum class GammaKind { Linear, RationalShrink, User };

/// CERTIFIED kinds satisfy both comparison-function conditions by proof:
///
///   linear(c):        sum c*t_n = c * sum t_n, so summability transfers.
///   rational_shrink:  sum t_n/(1+t_n) < inf forces t_n -> 0, hence
///                     t_n/(1+t_n) >= t_n/2 eventually.
///
/// USER functions can only be sampled, so they stay SAMPLED forever.
enum class Certification { Certified, Sampled };

/// A comparison function gamma: nondecreasing, gamma(0) = 0 and
/// 0 < gamma(t) < t for t > 0, plus the series-summability transfer
/// property that no finite sample can confirm.
class ComparisonFunction {
 public:
  using Knot = std::pair<Real, Real>;
  using Oracle = std::function<Real(const Real&)>;

  /// gamma(t) = c*t. Throws std::invalid_argument unless 0 < c < 1.
  static ComparisonFunction linear(Rational c);
  /// gamma(t) = t/(1+t).
  static ComparisonFunction rational_shrink();
  /// Step function through the knots: gamma(t) is the value of the last
  /// knot at or below t, and 0 below the first knot. Knot abscissae must be
  /// positive and strictly increasing; throws std::invalid_argument.
  static ComparisonFunction user_table(std::vector<Knot> knots);
  /// Arbitrary callback. gamma(0) is still forced to 0 by evaluate().
  static ComparisonFunction user_function(Oracle fn, std::string label = "user");

  GammaKind kind() const { return kind_; }
  Certification certification() const {
    return kind_ == GammaKind::User ? Certification::Sampled : Certification::Certified;
  }
  /// Throws std::logic_error unless kind() == Linear.
  const Rational& coefficient() const;
  /// Empty unless this is a tabulated user function.
  const std::vector<Knot>& table() const { return table_; }
  bool has_table() const { return kind_ == GammaKind::User && !oracle_; }
  const std::string& label() const { return label_; }

  /// Throws std::domain_error for t < 0.
  Real operator()(const Real& t) const;

 private:
  ComparisonFunction() = default;

  GammaKind kind_ = GammaKind::Linear;
  Rational coefficient_;
  std::vector<Knot> table_;
  Oracle oracle_;
  std::string label_;
};

inline Real evaluate(const ComparisonFunction& gamma, const Real& t) { return gamma(t); }

struct Gamma1Report {
  enum class Failure { None, NonzeroAtZero, NotPositive, NotBelowIdentity, NotMonotone };

  Failure failure = Failure::None;
  /// Offending t, or the adjacent grid pair (t1, t2) for monotonicity.
  std::vector<Real> witness;
  Certification certification = Certification::Sampled;

  bool ok() const { return failure == Failure::None; }
};

std::string to_string(Gamma1Report::Failure failure);

/// 64 logarithmically spaced points spanning [1e-6, 1e6].
std::vector<Real> default_gamma_grid();

/// Checks gamma(0) = 0, 0 < gamma(t) < t at every grid point, and
/// monotonicity across adjacent grid points. Comparisons are strict and
/// exact on the values produced. A pass never changes the certification.
/// Throws std::invalid_argument if the grid is empty, not strictly
/// increasing, or not positive.
Gamma1Report verify_gamma1(const ComparisonFunction& gamma, std::span<const Real> grid);

}  // namespace qpm
