// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qpm/comparison.hpp"
#include "qpm/contraction.hpp"
#include "qpm/space.hpp"

namespace qpm {

enum class SolveMode { Startpoint, Endpoint, FixedPoint };

std::string to_string(SolveMode mode);

struct SolverConfig {
  SolveMode mode = SolveMode::Startpoint;
  /// Convergence threshold on the mode defect. Zero is only valid for
  /// EXACT spaces.
  Real tolerance = Real(0);
  std::size_t max_iterations = 10'000;
  Selection selection = Selection::GreedyMinDefect;
};

/// One iteration x_n -> x_{n+1}. `d` is the step distance in the space the
/// iteration runs on (the conjugate space in endpoint mode), `defect` the
/// mode defect of x_{n+1}.
struct TraceStep {
  std::size_t n = 0;
  Point x;
  Point y;
  Real d;
  Real gamma_d;
  Real defect;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

enum class OutcomeKind { Converged, MaxIterations, ContractionViolated };

std::string to_string(OutcomeKind kind);

struct TraceOutcome {
  OutcomeKind kind = OutcomeKind::MaxIterations;
  /// Limit point, last visited point, or the point with no admissible successor.
  Point point;
  /// Mode defect at `point`.
  Real defect;
  /// Free-form annotation, e.g. "cycle" when the orbit stopped improving.
  std::string note;

  friend bool operator==(const TraceOutcome&, const TraceOutcome&) = default;
};

struct IterationTrace {
  SolveMode mode = SolveMode::Startpoint;
  NumericPolicy numeric;
  Point start;
  std::vector<TraceStep> steps;
  TraceOutcome outcome;

  bool converged() const { return outcome.kind == OutcomeKind::Converged; }
};

/// Same steps and outcome, ignoring the mode label. Used to compare an
/// endpoint run with a startpoint run on the conjugate space.
bool same_iteration(const IterationTrace& a, const IterationTrace& b);

/// Runs the weak-contraction iteration from x0.
///
/// Each step picks x_{n+1} in F(x_n) among candidates satisfying the mode's
/// contraction inequality at (x_n, x_{n+1}) and stops as soon as the mode
/// defect at the current point is within tolerance. Endpoint mode is the
/// startpoint iteration on the conjugate space; fixed-point mode uses the
/// symmetric defect and inequality with forward step distances.
///
/// Throws std::invalid_argument for a zero tolerance on a FLOAT space or a
/// start point outside the space.
IterationTrace solve(const QSpace& space, const SetValuedMap& f, const ComparisonFunction& gamma, const Point& x0,
                     const SolverConfig& config = {});

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus status);

struct CheckResult {
  CheckStatus status = CheckStatus::Skipped;
  /// Trace index `n` of the first failing step.
  std::optional<std::size_t> first_failure;

  bool ok() const { return status != CheckStatus::Fail; }
};

struct CauchyLevel {
  Real epsilon;
  /// Smallest recorded index after which every forward distance
  /// d(x_k, x_n), n0 <= k <= n, stays below epsilon.
  std::size_t n0 = 0;
};

struct TraceReport {
  CheckResult step_distances;  // (a) nonincreasing step distances
  CheckResult defects;         // (b) nonincreasing defects
  CheckResult partial_sums;    // (c) sum_{k=1}^{m-2} gamma(d_k) <= d_1 - d_{m-1} <= d_1
  CheckResult left_k_cauchy;   // (d) prefix certificate, needs the space
  std::vector<CauchyLevel> cauchy_levels;

  bool ok() const { return step_distances.ok() && defects.ok() && partial_sums.ok() && left_k_cauchy.ok(); }
};

/// Epsilons 1, 1/10, ..., 1/10^9 used by the left K-Cauchy certificate.
std::vector<Real> cauchy_schedule();

/// Replays the recorded values against the inequalities the iteration must
/// satisfy. Without a space the left K-Cauchy check is skipped.
TraceReport validate_trace(const IterationTrace& trace, const ComparisonFunction& gamma);
TraceReport validate_trace(const IterationTrace& trace, const ComparisonFunction& gamma, const QSpace& space);

}  // namespace qpm
