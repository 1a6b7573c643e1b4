// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qpm/space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qpm {

PointSet::PointSet(std::vector<Point> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("PointSet must be nonempty");
  std::unordered_set<Point> seen;
  for (const auto& p : members_) {
    if (!seen.insert(p).second) throw std::invalid_argument("PointSet has duplicate member '" + p + "'");
  }
}

bool PointSet::contains(const Point& p) const {
  return std::find(members_.begin(), members_.end(), p) != members_.end();
}

struct QSpace::Impl {
  NumericPolicy numeric;
  bool t0 = false;
  bool left_k_complete = false;

  bool finite = false;
  std::vector<Point> points;
  std::unordered_map<Point, std::size_t> index;
  DistanceMatrix matrix;

  DistanceOracle oracle;
  Membership membership;

  std::size_t require_index(const Point& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw std::out_of_range("point '" + p + "' is not in the space");
    return it->second;
  }
};

QSpace QSpace::finite(std::vector<Point> points, DistanceMatrix matrix, NumericPolicy numeric, bool t0) {
  auto impl = std::make_shared<Impl>();
  impl->numeric = numeric;
  impl->t0 = t0;
  impl->left_k_complete = true;
  impl->finite = true;
  if (points.empty()) throw std::invalid_argument("finite space needs at least one point");
  if (matrix.size() != points.size()) {
    throw std::invalid_argument("distance matrix has " + std::to_string(matrix.size()) + " rows for " +
                                std::to_string(points.size()) + " points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!impl->index.emplace(points[i], i).second) {
      throw std::invalid_argument("duplicate point id '" + points[i] + "'");
    }
    if (matrix[i].size() != points.size()) {
      throw std::invalid_argument("distance matrix row " + std::to_string(i) + " has " +
                                  std::to_string(matrix[i].size()) + " entries, expected " +
                                  std::to_string(points.size()));
    }
    for (auto& entry : matrix[i]) {
      if (entry.is_negative()) throw std::invalid_argument("negative distance in row " + std::to_string(i));
      entry = numeric.coerce(entry);
    }
  }
  impl->points = std::move(points);
  impl->matrix = std::move(matrix);
  return QSpace(std::move(impl));
}

QSpace QSpace::from_oracle(DistanceOracle oracle, NumericPolicy numeric, bool t0, Membership membership,
                           bool left_k_complete) {
  if (!oracle) throw std::invalid_argument("distance oracle is empty");
  auto impl = std::make_shared<Impl>();
  impl->numeric = numeric;
  impl->t0 = t0;
  impl->left_k_complete = left_k_complete;
  impl->oracle = std::move(oracle);
  impl->membership = std::move(membership);
  return QSpace(std::move(impl));
}

Real QSpace::d(const Point& x, const Point& y) const {
  if (impl_->finite) return impl_->matrix[impl_->require_index(x)][impl_->require_index(y)];
  if (impl_->membership) {
    if (!impl_->membership(x)) throw std::out_of_range("point '" + x + "' is not in the space");
    if (!impl_->membership(y)) throw std::out_of_range("point '" + y + "' is not in the space");
  }
  return impl_->numeric.coerce(impl_->oracle(x, y));
}

bool QSpace::has_finite_universe() const { return impl_->finite; }

std::span<const Point> QSpace::points() const {
  if (!impl_->finite) throw std::logic_error("oracle space has no enumerable universe");
  return impl_->points;
}

const DistanceMatrix& QSpace::matrix() const {
  if (!impl_->finite) throw std::logic_error("oracle space has no distance matrix");
  return impl_->matrix;
}

std::optional<std::size_t> QSpace::index_of(const Point& p) const {
  if (!impl_->finite) return std::nullopt;
  auto it = impl_->index.find(p);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

bool QSpace::contains(const Point& p) const {
  if (impl_->finite) return impl_->index.contains(p);
  return !impl_->membership || impl_->membership(p);
}

const NumericPolicy& QSpace::numeric() const { return impl_->numeric; }
bool QSpace::t0() const { return impl_->t0; }
bool QSpace::left_k_complete() const { return impl_->left_k_complete; }

QSpace QSpace::conjugate() const {
  if (impl_->finite) {
    const auto n = impl_->points.size();
    DistanceMatrix transposed(n, std::vector<Real>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) transposed[i][j] = impl_->matrix[j][i];
    }
    return finite(impl_->points, std::move(transposed), impl_->numeric, impl_->t0);
  }
  auto base = impl_;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->oracle = [base](const Point& x, const Point& y) { return base->oracle(y, x); };
  return QSpace(std::move(impl));
}

QSpace QSpace::symmetrize() const {
  if (impl_->finite) {
    const auto n = impl_->points.size();
    DistanceMatrix sym(n, std::vector<Real>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sym[i][j] = max(impl_->matrix[i][j], impl_->matrix[j][i]);
    }
    return finite(impl_->points, std::move(sym), impl_->numeric, impl_->t0);
  }
  auto base = impl_;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->oracle = [base](const Point& x, const Point& y) { return max(base->oracle(x, y), base->oracle(y, x)); };
  return QSpace(std::move(impl));
}

Real dist_point_set(const QSpace& space, const Point& x, const PointSet& set) {
  auto it = set.begin();
  Real best = space.d(x, *it);
  for (++it; it != set.end(); ++it) best = min(best, space.d(x, *it));
  return best;
}

Real dist_set_point(const QSpace& space, const PointSet& set, const Point& x) {
  auto it = set.begin();
  Real best = space.d(*it, x);
  for (++it; it != set.end(); ++it) best = min(best, space.d(*it, x));
  return best;
}

ExtendedDistance hausdorff(const QSpace& space, const PointSet& a, const PointSet& b) {
  Real result(0);
  for (const auto& p : a) result = max(result, dist_point_set(space, p, b));
  for (const auto& q : b) result = max(result, dist_set_point(space, a, q));
  return ExtendedDistance(space.numeric().coerce(result));
}

bool ball_contains(const QSpace& space, const Point& center, const Real& radius, const Point& y) {
  if (!(radius > Real(0))) throw std::invalid_argument("ball radius must be positive");
  return space.d(center, y) < radius;
}

std::string to_string(AxiomStatus status) {
  switch (status) {
    case AxiomStatus::Pass: return "PASS";
    case AxiomStatus::Fail: return "FAIL";
    case AxiomStatus::Skipped: return "SKIPPED";
    case AxiomStatus::SampledPass: return "SAMPLED-PASS";
  }
  return "?";
}

namespace {

AxiomReport check_over(const QSpace& space, std::span<const Point> pts, bool check_t0, AxiomStatus pass) {
  const auto& num = space.numeric();
  AxiomReport report;
  report.identity.status = pass;
  for (const auto& x : pts) {
    if (!num.is_zero(space.d(x, x))) {
      report.identity = {AxiomStatus::Fail, {x}};
      break;
    }
  }

  // Lexicographic scan so the reported witness does not depend on anything
  // but the universe order.
  report.triangle.status = pass;
  const auto n = pts.size();
  std::vector<std::vector<Real>> dist(n, std::vector<Real>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = space.d(pts[i], pts[j]);
  }
  for (std::size_t i = 0; i < n && report.triangle.ok(); ++i) {
    for (std::size_t j = 0; j < n && report.triangle.ok(); ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!num.leq(dist[i][k], dist[i][j] + dist[j][k])) {
          report.triangle = {AxiomStatus::Fail, {pts[i], pts[j], pts[k]}};
          break;
        }
      }
    }
  }

  if (check_t0) {
    report.t0.status = pass;
    for (std::size_t i = 0; i < n && report.t0.ok(); ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (pts[i] != pts[j] && num.is_zero(dist[i][j]) && num.is_zero(dist[j][i])) {
          report.t0 = {AxiomStatus::Fail, {pts[i], pts[j]}};
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace

AxiomReport check_axioms(const QSpace& space, bool check_t0) {
  return check_over(space, space.points(), check_t0, AxiomStatus::Pass);
}

AxiomReport check_axioms_sampled(const QSpace& space, std::span<const Point> sample, bool check_t0) {
  return check_over(space, sample, check_t0, AxiomStatus::SampledPass);
}

MetricReport check_metric_axioms(const QSpace& space) {
  MetricReport report;
  report.quasi = check_axioms(space, true);
  report.symmetry.status = AxiomStatus::Pass;
  const auto pts = space.points();
  const auto& num = space.numeric();
  for (std::size_t i = 0; i < pts.size() && report.symmetry.ok(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Real a = space.d(pts[i], pts[j]);
      const Real b = space.d(pts[j], pts[i]);
      if (!(num.leq(a, b) && num.leq(b, a))) {
        report.symmetry = {AxiomStatus::Fail, {pts[i], pts[j]}};
        break;
      }
    }
  }
  return report;
}

}  // namespace qpm
