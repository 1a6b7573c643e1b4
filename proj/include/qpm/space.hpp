// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpm/real.hpp"

namespace qpm {

using Point = std::string;
using DistanceMatrix = std::vector<std::vector<Real>>;

/// Nonempty finite set of points without duplicates. Member order is kept
/// because it is the encounter order used for tie-breaking.
class PointSet {
 public:
  /// Throws std::invalid_argument if `members` is empty or has duplicates.
  explicit PointSet(std::vector<Point> members);
  PointSet(std::initializer_list<Point> members) : PointSet(std::vector<Point>(members)) {}

  static PointSet singleton(Point p) { return PointSet({std::move(p)}); }

  std::span<const Point> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Point& p) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> members_;
};

/// A quasi-pseudometric space: a point universe with an asymmetric distance.
///
/// Two flavours exist. Finite spaces store an ordered universe and a
/// row-major matrix, entry [i][j] being d(points[i], points[j]). Oracle
/// spaces wrap a distance callback over opaque point identifiers and cannot
/// enumerate their universe. Both are immutable and cheap to copy.
class QSpace {
 public:
  using DistanceOracle = std::function<Real(const Point&, const Point&)>;
  using Membership = std::function<bool(const Point&)>;

  /// Throws std::invalid_argument for an empty or duplicated universe, a
  /// non-square matrix, or a negative entry. Entries are coerced to the
  /// policy's arithmetic.
  static QSpace finite(std::vector<Point> points, DistanceMatrix matrix,
                       NumericPolicy numeric = {}, bool t0 = false);

  /// `membership` may be empty, in which case every identifier is accepted.
  /// `left_k_complete` records a user assertion; it is never verified.
  static QSpace from_oracle(DistanceOracle oracle, NumericPolicy numeric = {}, bool t0 = false,
                            Membership membership = {}, bool left_k_complete = false);

  /// d(x, y). Throws std::out_of_range for points outside the universe.
  Real d(const Point& x, const Point& y) const;

  bool has_finite_universe() const;
  /// Throws std::logic_error for oracle spaces.
  std::span<const Point> points() const;
  /// Throws std::logic_error for oracle spaces.
  const DistanceMatrix& matrix() const;
  std::optional<std::size_t> index_of(const Point& p) const;
  bool contains(const Point& p) const;

  const NumericPolicy& numeric() const;
  bool t0() const;
  /// Finite spaces are always left K-complete.
  bool left_k_complete() const;

  /// d⁻¹(x, y) = d(y, x), same universe and arithmetic.
  QSpace conjugate() const;
  /// dˢ(x, y) = max{d(x, y), d(y, x)}.
  QSpace symmetrize() const;

 private:
  struct Impl;
  explicit QSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Point/set distances. Sets are finite, so inf and sup are min and max.

Real dist_point_set(const QSpace& space, const Point& x, const PointSet& set);
Real dist_set_point(const QSpace& space, const PointSet& set, const Point& x);

/// H(A, B) = max{ max_a d(a, B), max_b d(A, b) }.
ExtendedDistance hausdorff(const QSpace& space, const PointSet& a, const PointSet& b);

/// d(center, y) < radius. Throws std::invalid_argument unless radius > 0.
bool ball_contains(const QSpace& space, const Point& center, const Real& radius, const Point& y);

enum class AxiomStatus { Pass, Fail, Skipped, SampledPass };

std::string to_string(AxiomStatus status);

struct AxiomResult {
  AxiomStatus status = AxiomStatus::Skipped;
  /// The point (i), triple (ii) or pair (iii, symmetry) violating the axiom.
  std::vector<Point> witness;

  bool ok() const { return status != AxiomStatus::Fail; }
};

struct AxiomReport {
  AxiomResult identity;   // d(x,x) = 0
  AxiomResult triangle;   // d(x,z) <= d(x,y) + d(y,z)
  AxiomResult t0;         // d(x,y) = 0 = d(y,x) => x = y

  bool ok() const { return identity.ok() && triangle.ok() && t0.ok(); }
};

/// Exhaustive check over the finite universe (all n³ triples for the
/// triangle inequality). Throws std::logic_error for oracle spaces.
AxiomReport check_axioms(const QSpace& space, bool check_t0);

/// Same checks restricted to `sample`; passing results are SampledPass.
AxiomReport check_axioms_sampled(const QSpace& space, std::span<const Point> sample, bool check_t0);

struct MetricReport {
  AxiomReport quasi;         // identity, triangle, identity of indiscernibles
  AxiomResult symmetry;

  bool ok() const { return quasi.ok() && symmetry.ok(); }
};

/// Full metric axioms on a finite space: the quasi-metric axioms with T₀
/// (identity of indiscernibles) plus symmetry.
MetricReport check_metric_axioms(const QSpace& space);

}  // namespace qpm
