// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qpm/solver.hpp"

#include <stdexcept>
#include <unordered_set>

namespace qpm {

std::string to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::Startpoint: return "startpoint";
    case SolveMode::Endpoint: return "endpoint";
    case SolveMode::FixedPoint: return "fixedpoint";
  }
  return "?";
}

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Converged: return "CONVERGED";
    case OutcomeKind::MaxIterations: return "MAX_ITERATIONS";
    case OutcomeKind::ContractionViolated: return "CONTRACTION_VIOLATED";
  }
  return "?";
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

bool same_iteration(const IterationTrace& a, const IterationTrace& b) {
  if (a.start != b.start || a.steps.size() != b.steps.size() || !(a.outcome == b.outcome)) return false;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    const auto& s = a.steps[i];
    const auto& t = b.steps[i];
    if (s.n != t.n || s.x != t.x || s.y != t.y || !s.d.identical(t.d) || !s.gamma_d.identical(t.gamma_d) ||
        !s.defect.identical(t.defect)) {
      return false;
    }
  }
  return true;
}

namespace {

// The space the iteration actually runs on and the contraction mode used there.
struct Frame {
  QSpace space;
  ContractionMode mode;
};

Frame frame_for(const QSpace& space, SolveMode mode) {
  switch (mode) {
    case SolveMode::Startpoint: return {space, ContractionMode::Forward};
    case SolveMode::Endpoint: return {space.conjugate(), ContractionMode::Forward};
    case SolveMode::FixedPoint: return {space, ContractionMode::Symmetric};
  }
  throw std::logic_error("unknown solve mode");
}

bool within(const Real& defect, const Real& tolerance) { return defect <= tolerance; }

}  // namespace

IterationTrace solve(const QSpace& space, const SetValuedMap& f, const ComparisonFunction& gamma, const Point& x0,
                     const SolverConfig& config) {
  if (config.tolerance.is_negative()) throw std::invalid_argument("solver tolerance must be nonnegative");
  if (config.tolerance.is_zero() && space.numeric().mode == Arithmetic::Float) {
    throw std::invalid_argument("zero tolerance requires EXACT arithmetic");
  }
  if (config.max_iterations == 0) throw std::invalid_argument("max_iterations must be positive");
  if (!space.contains(x0)) throw std::invalid_argument("start point '" + x0 + "' is not in the space");

  const Frame frame = frame_for(space, config.mode);
  const Real tolerance = space.numeric().coerce(config.tolerance);

  IterationTrace trace;
  trace.mode = config.mode;
  trace.numeric = space.numeric();
  trace.start = x0;

  Point x = x0;
  Real defect = mode_defect(frame.space, x, f, frame.mode);
  Real best_defect = defect;
  std::unordered_set<Point> visited{x};
  std::size_t stalled = 0;

  for (std::size_t n = 0;; ++n) {
    if (within(defect, tolerance)) {
      trace.outcome = {OutcomeKind::Converged, x, defect, {}};
      return trace;
    }
    if (n == config.max_iterations) {
      trace.outcome = {OutcomeKind::MaxIterations, x, defect, {}};
      return trace;
    }
    auto next = select_successor(frame.space, f, gamma, x, frame.mode, config.selection);
    if (!next) {
      trace.outcome = {OutcomeKind::ContractionViolated, x, defect, {}};
      return trace;
    }
    Real step = frame.space.d(x, *next);
    Real next_defect = mode_defect(frame.space, *next, f, frame.mode);
    Real gamma_step = gamma(step);
    trace.steps.push_back({n, x, *next, step, gamma_step, next_defect});

    // A revisit without improvement can only happen when tolerance-based
    // comparisons admit non-contracting steps; stop instead of looping.
    const bool revisit = !visited.insert(*next).second;
    if (revisit && !(next_defect < best_defect)) {
      ++stalled;
    } else {
      stalled = 0;
    }
    if (next_defect < best_defect) best_defect = next_defect;

    x = std::move(*next);
    defect = std::move(next_defect);
    if (stalled >= visited.size() && !within(defect, tolerance)) {
      trace.outcome = {OutcomeKind::MaxIterations, x, defect, "cycle"};
      return trace;
    }
  }
}

std::vector<Real> cauchy_schedule() {
  std::vector<Real> schedule;
  Rational eps(1);
  for (int i = 0; i < 10; ++i) {
    schedule.emplace_back(eps);
    eps /= 10;
  }
  return schedule;
}

namespace {

TraceReport validate_recorded(const IterationTrace& trace, const ComparisonFunction& gamma) {
  TraceReport report;
  const auto& num = trace.numeric;
  const auto& steps = trace.steps;

  report.step_distances.status = CheckStatus::Pass;
  report.defects.status = CheckStatus::Pass;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (report.step_distances.ok() && !num.leq(steps[i].d, steps[i - 1].d)) {
      report.step_distances = {CheckStatus::Fail, steps[i].n};
    }
    if (report.defects.ok() && !num.leq(steps[i].defect, steps[i - 1].defect)) {
      report.defects = {CheckStatus::Fail, steps[i].n};
    }
  }

  // Partial sums start at the step with n = 1 (or the first recorded step
  // when a hand-built trace starts later): for each later index j,
  //   sum_{k=first}^{j-1} gamma(d_k) <= d_first - d_j,
  // and the whole sum is bounded by d_first.
  report.partial_sums.status = CheckStatus::Pass;
  std::size_t first = 0;
  while (first < steps.size() && steps[first].n < 1) ++first;
  if (first < steps.size()) {
    const Real& d_first = steps[first].d;
    Real sum(0);
    for (std::size_t j = first + 1; j < steps.size(); ++j) {
      sum += gamma(steps[j - 1].d);
      if (!num.leq(sum, d_first - steps[j].d)) {
        report.partial_sums = {CheckStatus::Fail, steps[j].n};
        break;
      }
    }
    if (report.partial_sums.ok()) {
      sum += gamma(steps.back().d);
      if (!num.leq(sum, d_first)) report.partial_sums = {CheckStatus::Fail, steps.back().n};
    }
  }
  return report;
}

}  // namespace

TraceReport validate_trace(const IterationTrace& trace, const ComparisonFunction& gamma) {
  return validate_recorded(trace, gamma);
}

TraceReport validate_trace(const IterationTrace& trace, const ComparisonFunction& gamma, const QSpace& space) {
  TraceReport report = validate_recorded(trace, gamma);
  const QSpace run_space = trace.mode == SolveMode::Endpoint ? space.conjugate() : space;

  std::vector<Point> orbit;
  orbit.push_back(trace.steps.empty() ? trace.start : trace.steps.front().x);
  for (const auto& s : trace.steps) orbit.push_back(s.y);
  const std::size_t base = trace.steps.empty() ? 0 : trace.steps.front().n;

  // tail[k] = max over k' >= k and n >= k' of d(x_k', x_n)
  const std::size_t len = orbit.size();
  std::vector<Real> tail(len + 1, Real(0));
  for (std::size_t k = len; k-- > 0;) {
    Real row(0);
    for (std::size_t n = k; n < len; ++n) row = max(row, run_space.d(orbit[k], orbit[n]));
    tail[k] = max(row, tail[k + 1]);
  }
  for (const auto& eps : cauchy_schedule()) {
    std::size_t n0 = 0;
    while (n0 < len && !(tail[n0] < eps)) ++n0;
    report.cauchy_levels.push_back({eps, base + n0});
  }
  report.left_k_cauchy.status = CheckStatus::Pass;
  return report;
}

}  // namespace qpm
