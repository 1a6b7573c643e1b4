// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qpm/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpm {

ComparisonFunction ComparisonFunction::linear(Rational c) {
  if (c.sign() <= 0 || c >= 1) throw std::invalid_argument("linear comparison needs 0 < c < 1, got " + c.str());
  ComparisonFunction g;
  g.kind_ = GammaKind::Linear;
  g.coefficient_ = std::move(c);
  g.label_ = "linear";
  return g;
}

ComparisonFunction ComparisonFunction::rational_shrink() {
  ComparisonFunction g;
  g.kind_ = GammaKind::RationalShrink;
  g.label_ = "rational_shrink";
  return g;
}

ComparisonFunction ComparisonFunction::user_table(std::vector<Knot> knots) {
  if (knots.empty()) throw std::invalid_argument("user table needs at least one knot");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!(knots[i].first > Real(0))) throw std::invalid_argument("user table abscissae must be positive");
    if (knots[i].second.is_negative()) throw std::invalid_argument("user table values must be nonnegative");
    if (i > 0 && !(knots[i - 1].first < knots[i].first)) {
      throw std::invalid_argument("user table abscissae must be strictly increasing");
    }
  }
  ComparisonFunction g;
  g.kind_ = GammaKind::User;
  g.table_ = std::move(knots);
  g.label_ = "user";
  return g;
}

ComparisonFunction ComparisonFunction::user_function(Oracle fn, std::string label) {
  if (!fn) throw std::invalid_argument("user comparison function is empty");
  ComparisonFunction g;
  g.kind_ = GammaKind::User;
  g.oracle_ = std::move(fn);
  g.label_ = std::move(label);
  return g;
}

const Rational& ComparisonFunction::coefficient() const {
  if (kind_ != GammaKind::Linear) throw std::logic_error("coefficient() on a non-linear comparison function");
  return coefficient_;
}

Real ComparisonFunction::operator()(const Real& t) const {
  if (t.is_negative()) throw std::domain_error("comparison function evaluated at negative t = " + t.str());
  if (t.is_zero()) return t.is_exact() ? Real(0) : Real(0.0);
  switch (kind_) {
    case GammaKind::Linear:
      return Real(coefficient_) * t;
    case GammaKind::RationalShrink:
      return t / (Real(1) + t);
    case GammaKind::User:
      break;
  }
  if (oracle_) return oracle_(t);
  // last knot with abscissa <= t
  auto it = std::upper_bound(table_.begin(), table_.end(), t,
                             [](const Real& v, const Knot& k) { return v < k.first; });
  if (it == table_.begin()) return t.is_exact() ? Real(0) : Real(0.0);
  return std::prev(it)->second;
}

std::string to_string(Gamma1Report::Failure failure) {
  switch (failure) {
    case Gamma1Report::Failure::None: return "none";
    case Gamma1Report::Failure::NonzeroAtZero: return "gamma(0) != 0";
    case Gamma1Report::Failure::NotPositive: return "gamma(t) <= 0";
    case Gamma1Report::Failure::NotBelowIdentity: return "gamma(t) >= t";
    case Gamma1Report::Failure::NotMonotone: return "gamma decreasing";
  }
  return "?";
}

std::vector<Real> default_gamma_grid() {
  constexpr int kPoints = 64;
  std::vector<Real> grid;
  grid.reserve(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    const double exponent = -6.0 + 12.0 * i / (kPoints - 1);
    grid.emplace_back(std::pow(10.0, exponent));
  }
  return grid;
}

Gamma1Report verify_gamma1(const ComparisonFunction& gamma, std::span<const Real> grid) {
  if (grid.empty()) throw std::invalid_argument("verify_gamma1: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > Real(0))) throw std::invalid_argument("verify_gamma1: grid points must be positive");
    if (i > 0 && !(grid[i - 1] < grid[i])) {
      throw std::invalid_argument("verify_gamma1: grid must be strictly increasing");
    }
  }

  Gamma1Report report;
  report.certification = gamma.certification();
  if (!gamma(Real(0)).is_zero()) {
    report.failure = Gamma1Report::Failure::NonzeroAtZero;
    report.witness = {Real(0)};
    return report;
  }
  std::optional<Real> previous;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Real& t = grid[i];
    const Real value = gamma(t);
    if (!(value > Real(0))) {
      report.failure = Gamma1Report::Failure::NotPositive;
      report.witness = {t};
      return report;
    }
    if (!(value < t)) {
      report.failure = Gamma1Report::Failure::NotBelowIdentity;
      report.witness = {t};
      return report;
    }
    if (previous && value < *previous) {
      report.failure = Gamma1Report::Failure::NotMonotone;
      report.witness = {grid[i - 1], t};
      return report;
    }
    previous = value;
  }
  return report;
}

}  // namespace qpm
