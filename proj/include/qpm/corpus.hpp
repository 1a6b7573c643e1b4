// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpm/comparison.hpp"
#include "qpm/contraction.hpp"
#include "qpm/space.hpp"

namespace qpm {

struct ExampleSystem {
  QSpace space;
  SetValuedMap map;
  ComparisonFunction gamma;
};

// Dyadic example: X = {1/2^n : n >= 0} ∪ {0} with
//   d(x, y) = y - x      if y >= x
//           = 2(x - y)   if x > y
// F(1/2^n) = {1/2^(n+1), 0}, F(0) = {0}, gamma(t) = t/2.

Point dyadic_point(unsigned n);
Point zero_point();
/// Numeric value of "Zero" or "Dyadic(n)"; nullopt for anything else.
std::optional<Rational> dyadic_value(const Point& p);

/// Oracle-backed, countable universe, EXACT arithmetic.
ExampleSystem paper_example_space();

/// Finite closure over Dyadic(0..n), Zero with F(Dyadic(n)) = {Zero}.
/// Throws std::invalid_argument for n < 1.
ExampleSystem paper_example_truncated(unsigned n);

struct GeneratorSeed {
  std::uint64_t seed = 0;
  std::size_t size = 4;
  Rational weight_lo = 0;
  Rational weight_hi = 8;
};

class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, std::uint64_t seed) : std::runtime_error(what), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Min-plus transitive closure (Floyd-Warshall) of a square weight matrix
/// with zero diagonal. The result satisfies the triangle inequality and is
/// pointwise <= the input.
std::vector<std::vector<Rational>> min_plus_closure(std::vector<std::vector<Rational>> weights);

/// Closes `weights` and returns the space, or nullopt when the closure
/// violates T₀.
std::optional<QSpace> t0_space_from_weights(std::vector<Point> points, std::vector<std::vector<Rational>> weights);

/// Random finite T₀-quasi-metric space on points p0..p{size-1}. Weights are
/// drawn from a 16-step rational grid over [weight_lo, weight_hi] and closed
/// under min-plus; a closure failing T₀ is redrawn, up to 32 times.
/// Deterministic in the seed across platforms. Throws GenerationError when
/// the retry budget is exhausted and std::invalid_argument for size < 2 or
/// an invalid weight range.
QSpace random_t0_qspace(const GeneratorSeed& g);

struct GeneratedSystem {
  QSpace space;
  SetValuedMap map;
  Point sink;
};

/// random_t0_qspace plus a map with a universal sink z: F(z) = {z} and
/// F(x) = {z} ∪ (random subset) elsewhere, members in universe order. y = z
/// witnesses the forward contraction inequality at every x for any gamma
/// with 0 <= gamma(t) <= t.
GeneratedSystem random_weakly_contractive_system(const GeneratorSeed& g, const ComparisonFunction& gamma);

}  // namespace qpm
