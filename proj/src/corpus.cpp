// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qpm/corpus.hpp"

#include <charconv>
#include <random>

namespace qpm {

namespace {

constexpr std::string_view kDyadicPrefix = "Dyadic(";
constexpr int kWeightSteps = 16;
constexpr int kRetryBudget = 32;

std::optional<unsigned> dyadic_exponent(const Point& p) {
  if (!p.starts_with(kDyadicPrefix) || !p.ends_with(")")) return std::nullopt;
  const char* first = p.data() + kDyadicPrefix.size();
  const char* last = p.data() + p.size() - 1;
  if (first == last) return std::nullopt;
  unsigned n = 0;
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  // canonical spelling only, so "Dyadic(01)" is not an alias of Dyadic(1)
  if (dyadic_point(n) != p) return std::nullopt;
  return n;
}

Rational example_distance(const Rational& x, const Rational& y) {
  return y >= x ? Rational(y - x) : Rational(2 * (x - y));
}

Real example_oracle(const Point& a, const Point& b) {
  auto x = dyadic_value(a);
  auto y = dyadic_value(b);
  if (!x) throw std::out_of_range("'" + a + "' is not a point of the dyadic example");
  if (!y) throw std::out_of_range("'" + b + "' is not a point of the dyadic example");
  return Real(example_distance(*x, *y));
}

// Platform-independent bounded draw; mt19937_64 output is fully specified
// by the standard whereas the distributions are not.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

Point dyadic_point(unsigned n) { return std::string(kDyadicPrefix) + std::to_string(n) + ")"; }
Point zero_point() { return "Zero"; }

std::optional<Rational> dyadic_value(const Point& p) {
  if (p == zero_point()) return Rational(0);
  auto n = dyadic_exponent(p);
  if (!n) return std::nullopt;
  Rational v(1);
  for (unsigned i = 0; i < *n; ++i) v /= 2;
  return v;
}

ExampleSystem paper_example_space() {
  auto space = QSpace::from_oracle(example_oracle, NumericPolicy::exact(), /*t0=*/true,
                                   [](const Point& p) { return dyadic_value(p).has_value(); },
                                   /*left_k_complete=*/true);
  auto map = SetValuedMap::from_oracle([](const Point& x) {
    if (x == zero_point()) return PointSet::singleton(zero_point());
    auto n = dyadic_exponent(x);
    if (!n) throw std::out_of_range("'" + x + "' is not a point of the dyadic example");
    return PointSet({dyadic_point(*n + 1), zero_point()});
  });
  return {std::move(space), std::move(map), ComparisonFunction::linear(Rational(1, 2))};
}

ExampleSystem paper_example_truncated(unsigned n) {
  if (n < 1) throw std::invalid_argument("truncation depth must be at least 1");
  std::vector<Point> points;
  std::vector<Rational> values;
  for (unsigned i = 0; i <= n; ++i) {
    points.push_back(dyadic_point(i));
    values.push_back(*dyadic_value(points.back()));
  }
  points.push_back(zero_point());
  values.emplace_back(0);

  DistanceMatrix matrix(points.size(), std::vector<Real>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) matrix[i][j] = Real(example_distance(values[i], values[j]));
  }

  std::vector<SetValuedMap::Entry> table;
  for (unsigned i = 0; i < n; ++i) table.emplace_back(dyadic_point(i), PointSet({dyadic_point(i + 1), zero_point()}));
  table.emplace_back(dyadic_point(n), PointSet::singleton(zero_point()));
  table.emplace_back(zero_point(), PointSet::singleton(zero_point()));

  return {QSpace::finite(std::move(points), std::move(matrix), NumericPolicy::exact(), /*t0=*/true),
          SetValuedMap::from_table(std::move(table)), ComparisonFunction::linear(Rational(1, 2))};
}

std::vector<std::vector<Rational>> min_plus_closure(std::vector<std::vector<Rational>> weights) {
  const auto n = weights.size();
  for (const auto& row : weights) {
    if (row.size() != n) throw std::invalid_argument("min_plus_closure: weight matrix is not square");
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational via = weights[i][k] + weights[k][j];
        if (via < weights[i][j]) weights[i][j] = std::move(via);
      }
    }
  }
  return weights;
}

std::optional<QSpace> t0_space_from_weights(std::vector<Point> points, std::vector<std::vector<Rational>> weights) {
  auto closed = min_plus_closure(std::move(weights));
  const auto n = closed.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (closed[i][j].is_zero() && closed[j][i].is_zero()) return std::nullopt;
    }
  }
  DistanceMatrix matrix(n, std::vector<Real>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) matrix[i][j] = Real(std::move(closed[i][j]));
  }
  return QSpace::finite(std::move(points), std::move(matrix), NumericPolicy::exact(), /*t0=*/true);
}

namespace {

QSpace draw_space(const GeneratorSeed& g, std::mt19937_64& rng) {
  if (g.size < 2) throw std::invalid_argument("generator size must be at least 2");
  if (g.weight_lo.sign() < 0 || g.weight_hi < g.weight_lo) {
    throw std::invalid_argument("generator weight range must satisfy 0 <= lo <= hi");
  }
  std::vector<Point> points;
  for (std::size_t i = 0; i < g.size; ++i) points.push_back("p" + std::to_string(i));

  const Rational step = (g.weight_hi - g.weight_lo) / kWeightSteps;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<std::vector<Rational>> w(g.size, std::vector<Rational>(g.size, Rational(0)));
    for (std::size_t i = 0; i < g.size; ++i) {
      for (std::size_t j = 0; j < g.size; ++j) {
        if (i != j) w[i][j] = g.weight_lo + step * static_cast<long>(draw(rng, kWeightSteps + 1));
      }
    }
    if (auto space = t0_space_from_weights(points, std::move(w))) return *space;
  }
  throw GenerationError("T0 generation failed after " + std::to_string(kRetryBudget) + " attempts (seed " +
                            std::to_string(g.seed) + ")",
                        g.seed);
}

}  // namespace

QSpace random_t0_qspace(const GeneratorSeed& g) {
  std::mt19937_64 rng(g.seed);
  return draw_space(g, rng);
}

GeneratedSystem random_weakly_contractive_system(const GeneratorSeed& g, const ComparisonFunction& gamma) {
  std::mt19937_64 rng(g.seed);
  QSpace space = draw_space(g, rng);
  const auto pts = space.points();
  const std::size_t sink_index = draw(rng, pts.size());
  const Point sink = pts[sink_index];

  for (const auto& row : space.matrix()) {
    for (const auto& t : row) {
      const Real value = gamma(t);
      if (value.is_negative() || t < value) {
        throw std::invalid_argument("comparison function leaves [0, t] at t = " + t.str());
      }
    }
  }

  std::vector<SetValuedMap::Entry> table;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == sink_index) {
      table.emplace_back(pts[i], PointSet::singleton(sink));
      continue;
    }
    std::vector<Point> image;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == sink_index || draw(rng, 3) == 0) image.push_back(pts[j]);
    }
    table.emplace_back(pts[i], PointSet(std::move(image)));
  }
  return {std::move(space), SetValuedMap::from_table(std::move(table)), sink};
}

}  // namespace qpm
