// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qpm/contraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpm {

SetValuedMap SetValuedMap::from_table(std::vector<Entry> table) {
  SetValuedMap f;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!f.index_.emplace(table[i].first, i).second) {
      throw std::invalid_argument("set-valued map defined twice at '" + table[i].first + "'");
    }
  }
  f.table_ = std::move(table);
  return f;
}

SetValuedMap SetValuedMap::from_oracle(Oracle fn) {
  if (!fn) throw std::invalid_argument("set-valued map oracle is empty");
  SetValuedMap f;
  f.oracle_ = std::move(fn);
  return f;
}

SetValuedMap SetValuedMap::from_function(std::function<Point(const Point&)> fn) {
  if (!fn) throw std::invalid_argument("single-valued map is empty");
  return from_oracle([fn = std::move(fn)](const Point& x) { return PointSet::singleton(fn(x)); });
}

PointSet SetValuedMap::operator()(const Point& x) const {
  if (oracle_) return oracle_(x);
  auto it = index_.find(x);
  if (it == index_.end()) throw std::out_of_range("set-valued map is undefined at '" + x + "'");
  return table_[it->second].second;
}

bool SetValuedMap::is_defined(const Point& x) const { return oracle_ ? true : index_.contains(x); }

ExtendedDistance startpoint_defect(const QSpace& space, const Point& x, const SetValuedMap& f) {
  return hausdorff(space, PointSet::singleton(x), f(x));
}

ExtendedDistance endpoint_defect(const QSpace& space, const Point& x, const SetValuedMap& f) {
  return hausdorff(space, f(x), PointSet::singleton(x));
}

ExtendedDistance fixed_defect(const QSpace& space, const Point& x, const SetValuedMap& f) {
  return std::max(startpoint_defect(space, x, f), endpoint_defect(space, x, f),
                  [](const ExtendedDistance& a, const ExtendedDistance& b) { return a < b; });
}

std::string to_string(ContractionMode mode) {
  switch (mode) {
    case ContractionMode::Forward: return "forward";
    case ContractionMode::Dual: return "dual";
    case ContractionMode::Symmetric: return "symmetric";
  }
  return "?";
}

Real mode_defect(const QSpace& space, const Point& x, const SetValuedMap& f, ContractionMode mode) {
  switch (mode) {
    case ContractionMode::Forward: return startpoint_defect(space, x, f).value();
    case ContractionMode::Dual: return endpoint_defect(space, x, f).value();
    case ContractionMode::Symmetric: return fixed_defect(space, x, f).value();
  }
  throw std::logic_error("unknown contraction mode");
}

namespace {

Real contraction_bound(const ComparisonFunction& gamma, const Real& t) { return t - gamma(t); }

bool admissible_with_defect(const QSpace& space, const ComparisonFunction& gamma, const Point& x, const Point& y,
                            const Real& defect_y, ContractionMode mode) {
  const auto& num = space.numeric();
  switch (mode) {
    case ContractionMode::Forward:
      return num.leq(defect_y, contraction_bound(gamma, space.d(x, y)));
    case ContractionMode::Dual:
      return num.leq(defect_y, contraction_bound(gamma, space.d(y, x)));
    case ContractionMode::Symmetric:
      return num.leq(defect_y, min(contraction_bound(gamma, space.d(x, y)), contraction_bound(gamma, space.d(y, x))));
  }
  return false;
}

}  // namespace

bool is_admissible(const QSpace& space, const SetValuedMap& f, const ComparisonFunction& gamma, const Point& x,
                   const Point& y, ContractionMode mode) {
  return admissible_with_defect(space, gamma, x, y, mode_defect(space, y, f, mode), mode);
}

std::optional<Point> select_successor(const QSpace& space, const SetValuedMap& f, const ComparisonFunction& gamma,
                                      const Point& x, ContractionMode mode, Selection selection) {
  const PointSet candidates = f(x);
  std::optional<Point> best;
  std::optional<Real> best_defect;
  std::size_t best_rank = 0;
  std::size_t position = 0;
  for (const auto& y : candidates) {
    const std::size_t rank = space.index_of(y).value_or(position);
    ++position;
    Real defect = mode_defect(space, y, f, mode);
    if (!admissible_with_defect(space, gamma, x, y, defect, mode)) continue;
    if (selection == Selection::FirstAdmissible) return y;
    if (!best || defect < *best_defect || (defect == *best_defect && rank < best_rank)) {
      best = y;
      best_defect = std::move(defect);
      best_rank = rank;
    }
  }
  return best;
}

const Point& ContractionCertificate::witness(const Point& x) const {
  for (const auto& [from, to] : witnesses) {
    if (from == x) return to;
  }
  throw std::out_of_range("no witness recorded for '" + x + "'");
}

ContractionResult verify_weak_contraction(const QSpace& space, const SetValuedMap& f,
                                          const ComparisonFunction& gamma, ContractionMode mode) {
  ContractionCertificate cert;
  cert.mode = mode;
  for (const auto& x : space.points()) {
    auto y = select_successor(space, f, gamma, x, mode, Selection::GreedyMinDefect);
    if (!y) return Violation{x, mode};
    cert.witnesses.emplace_back(x, std::move(*y));
    cert.checked_points.push_back(x);
  }
  return cert;
}

namespace {

template <typename Defect>
std::vector<Point> enumerate_zero(const QSpace& space, const SetValuedMap& f, Defect defect) {
  std::vector<Point> out;
  for (const auto& x : space.points()) {
    if (space.numeric().is_zero(defect(space, x, f).value())) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<Point> enumerate_startpoints(const QSpace& space, const SetValuedMap& f) {
  return enumerate_zero(space, f, startpoint_defect);
}

std::vector<Point> enumerate_endpoints(const QSpace& space, const SetValuedMap& f) {
  return enumerate_zero(space, f, endpoint_defect);
}

std::vector<Point> enumerate_fixed_points(const QSpace& space, const SetValuedMap& f) {
  return enumerate_zero(space, f, fixed_defect);
}

}  // namespace qpm
