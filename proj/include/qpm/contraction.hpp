// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "qpm/comparison.hpp"
#include "qpm/space.hpp"

namespace qpm {

/// A set-valued map F: point -> nonempty finite PointSet. Either tabulated
/// (serializable) or backed by a callback.
class SetValuedMap {
 public:
  using Oracle = std::function<PointSet(const Point&)>;
  using Entry = std::pair<Point, PointSet>;

  /// Throws std::invalid_argument on a repeated key.
  static SetValuedMap from_table(std::vector<Entry> table);
  static SetValuedMap from_oracle(Oracle fn);
  /// Wraps a single-valued map f as x -> {f(x)}.
  static SetValuedMap from_function(std::function<Point(const Point&)> f);

  /// Throws std::out_of_range where F is undefined.
  PointSet operator()(const Point& x) const;
  bool is_defined(const Point& x) const;

  bool is_tabulated() const { return !oracle_; }
  const std::vector<Entry>& table() const { return table_; }

 private:
  SetValuedMap() = default;
  std::vector<Entry> table_;
  std::unordered_map<Point, std::size_t> index_;
  Oracle oracle_;
};

// Defects. Images are finite, so each value is finite; the ExtendedDistance
// return type keeps the signature aligned with hausdorff().

/// H({x}, F(x)) = max over b in F(x) of d(x, b). Zero exactly at startpoints.
ExtendedDistance startpoint_defect(const QSpace& space, const Point& x, const SetValuedMap& f);
/// H(F(x), {x}) = max over a in F(x) of d(a, x). Zero exactly at endpoints.
ExtendedDistance endpoint_defect(const QSpace& space, const Point& x, const SetValuedMap& f);
/// Max of the two defects above.
ExtendedDistance fixed_defect(const QSpace& space, const Point& x, const SetValuedMap& f);

enum class ContractionMode { Forward, Dual, Symmetric };
enum class Selection { GreedyMinDefect, FirstAdmissible };

std::string to_string(ContractionMode mode);

/// Defect matching the mode: startpoint (Forward), endpoint (Dual), fixed (Symmetric).
Real mode_defect(const QSpace& space, const Point& x, const SetValuedMap& f, ContractionMode mode);

/// True when y satisfies the mode's weak-contraction inequality at x:
///   Forward:   H({y},Fy)  <= d(x,y) - gamma(d(x,y))
///   Dual:      H(Fy,{y})  <= d(y,x) - gamma(d(y,x))
///   Symmetric: max of both <= min of both right-hand sides
bool is_admissible(const QSpace& space, const SetValuedMap& f, const ComparisonFunction& gamma,
                   const Point& x, const Point& y, ContractionMode mode);

/// Chooses y in F(x) among admissible candidates. GreedyMinDefect takes the
/// smallest mode defect, ties going to the lower universe index (finite
/// spaces) or earlier position in F(x) (oracle spaces). FirstAdmissible
/// takes the first admissible member of F(x). nullopt if none is admissible.
std::optional<Point> select_successor(const QSpace& space, const SetValuedMap& f, const ComparisonFunction& gamma,
                                      const Point& x, ContractionMode mode,
                                      Selection selection = Selection::GreedyMinDefect);

struct ContractionCertificate {
  ContractionMode mode = ContractionMode::Forward;
  /// (x, chosen y in F(x)) in universe order.
  std::vector<std::pair<Point, Point>> witnesses;
  std::vector<Point> checked_points;

  /// Throws std::out_of_range for an unchecked point.
  const Point& witness(const Point& x) const;
};

struct Violation {
  /// Smallest universe index with no admissible candidate.
  Point x;
  ContractionMode mode = ContractionMode::Forward;
};

using ContractionResult = std::variant<ContractionCertificate, Violation>;

/// Searches every y in F(x) for every x of a finite universe and records the
/// greedy witness. Throws std::logic_error for oracle spaces and
/// std::out_of_range where F is undefined.
ContractionResult verify_weak_contraction(const QSpace& space, const SetValuedMap& f,
                                          const ComparisonFunction& gamma, ContractionMode mode);

// Brute-force enumeration over a finite universe, in universe order.
// Zero means exact zero in EXACT mode and <= tolerance in FLOAT mode.

std::vector<Point> enumerate_startpoints(const QSpace& space, const SetValuedMap& f);
std::vector<Point> enumerate_endpoints(const QSpace& space, const SetValuedMap& f);
std::vector<Point> enumerate_fixed_points(const QSpace& space, const SetValuedMap& f);

}  // namespace qpm
