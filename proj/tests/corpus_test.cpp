// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qpm/corpus.hpp"
#include "qpm/io.hpp"

using namespace qpm;

namespace {

// d(x, y) = y - x if y >= x, 2(x - y) otherwise, on raw rationals.
Rational example_d(const Rational& x, const Rational& y) { return y >= x ? Rational(y - x) : Rational(2 * (x - y)); }

Rational pow2_inverse(unsigned n) { return Rational(1) / Rational(boost::multiprecision::cpp_int(1) << n); }

}  // namespace

TEST(ExampleTest, PointNames) {
  EXPECT_EQ(dyadic_point(0), "Dyadic(0)");
  EXPECT_EQ(zero_point(), "Zero");
  EXPECT_EQ(dyadic_value(dyadic_point(3)), Rational(1, 8));
  EXPECT_EQ(dyadic_value(zero_point()), Rational(0));
  EXPECT_FALSE(dyadic_value("Dyadic(-1)").has_value());
  EXPECT_FALSE(dyadic_value("Dyadic(01)").has_value());
  EXPECT_FALSE(dyadic_value("zero").has_value());
}

TEST(ExampleTest, OracleDistancesMatchFormula) {
  const auto sys = paper_example_space();
  EXPECT_FALSE(sys.space.has_finite_universe());
  EXPECT_TRUE(sys.space.left_k_complete());
  for (unsigned i = 0; i < 8; ++i) {
    for (unsigned j = 0; j < 8; ++j) {
      EXPECT_EQ(sys.space.d(dyadic_point(i), dyadic_point(j)).rational(),
                example_d(pow2_inverse(i), pow2_inverse(j)));
    }
    EXPECT_EQ(sys.space.d(dyadic_point(i), zero_point()).rational(), 2 * pow2_inverse(i));
    EXPECT_EQ(sys.space.d(zero_point(), dyadic_point(i)).rational(), pow2_inverse(i));
  }
  EXPECT_EQ(sys.map(dyadic_point(2)), PointSet({dyadic_point(3), zero_point()}));
  EXPECT_EQ(sys.map(zero_point()), PointSet::singleton(zero_point()));
  EXPECT_FALSE(sys.space.contains("Dyadic(x)"));
}

TEST(ExampleTest, TruncationAgreesWithOracle) {
  const auto full = paper_example_space();
  for (unsigned n : {1u, 3u, 10u}) {
    const auto sys = paper_example_truncated(n);
    ASSERT_EQ(sys.space.points().size(), n + 2);
    EXPECT_EQ(sys.space.points().back(), zero_point());
    for (const auto& x : sys.space.points()) {
      for (const auto& y : sys.space.points()) EXPECT_EQ(sys.space.d(x, y), full.space.d(x, y));
      if (x != dyadic_point(n)) EXPECT_EQ(sys.map(x), full.map(x));
    }
    EXPECT_EQ(sys.map(dyadic_point(n)), PointSet::singleton(zero_point()));
  }
  EXPECT_THROW(paper_example_truncated(0), std::invalid_argument);
}

TEST(ExampleTest, TruncatedSpacePassesAxioms) {
  const auto report = check_axioms(paper_example_truncated(10).space, true);
  EXPECT_EQ(report.identity.status, AxiomStatus::Pass);
  EXPECT_EQ(report.triangle.status, AxiomStatus::Pass);
  EXPECT_EQ(report.t0.status, AxiomStatus::Pass);
}

TEST(ExampleTest, SmallestTruncationIsCertified) {
  const auto sys = paper_example_truncated(1);
  const auto result = verify_weak_contraction(sys.space, sys.map, sys.gamma, ContractionMode::Forward);
  ASSERT_TRUE(std::holds_alternative<ContractionCertificate>(result));
  for (const auto& [x, y] : std::get<ContractionCertificate>(result).witnesses) EXPECT_EQ(y, zero_point());
}

TEST(ClosureTest, AlreadyClosedIsUnchanged) {
  const std::vector<std::vector<Rational>> w = {{0, 1}, {0, 0}};
  EXPECT_EQ(min_plus_closure(w), w);
}

TEST(ClosureTest, ShortcutIsTaken) {
  const std::vector<std::vector<Rational>> w = {{0, 1, 5}, {5, 0, 1}, {5, 5, 0}};
  const auto c = min_plus_closure(w);
  EXPECT_EQ(c[0][2], Rational(2));
  EXPECT_EQ(c[1][0], Rational(5));
}

TEST(ClosureTest, T0FailureIsReported) {
  EXPECT_FALSE(t0_space_from_weights({"a", "b"}, {{0, 0}, {0, 0}}).has_value());
  EXPECT_TRUE(t0_space_from_weights({"a", "b"}, {{0, 1}, {0, 0}}).has_value());
}

TEST(GeneratorTest, DegenerateWeightRangeExhaustsRetries) {
  GeneratorSeed g{1, 3, 0, 0};
  try {
    random_t0_qspace(g);
    FAIL() << "expected GenerationError";
  } catch (const GenerationError& e) {
    EXPECT_EQ(e.seed(), 1u);
  }
}

TEST(GeneratorTest, RejectsBadParameters) {
  EXPECT_THROW(random_t0_qspace({0, 1}), std::invalid_argument);
  EXPECT_THROW(random_t0_qspace({0, 4, 3, 1}), std::invalid_argument);
  EXPECT_THROW(random_t0_qspace({0, 4, -1, 1}), std::invalid_argument);
}

TEST(GeneratorTest, GammaMustStayBelowIdentity) {
  const auto too_big = ComparisonFunction::user_function([](const Real& t) { return t + t; });
  EXPECT_THROW(random_weakly_contractive_system({0, 4}, too_big), std::invalid_argument);
}

class GeneratorPropertyTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GeneratorPropertyTest, SameSeedSameDocument) {
  const GeneratorSeed g{GetParam(), 3 + GetParam() % 8};
  const auto gamma = ComparisonFunction::linear(Rational(1, 2));
  const auto a = random_weakly_contractive_system(g, gamma);
  const auto b = random_weakly_contractive_system(g, gamma);
  EXPECT_EQ(a.sink, b.sink);
  EXPECT_EQ(io::system_to_json({a.space, a.map, gamma}).dump(), io::system_to_json({b.space, b.map, gamma}).dump());
  const auto other = random_weakly_contractive_system({GetParam() + 1000, g.size}, gamma);
  EXPECT_NE(io::space_to_json(a.space).dump(), io::space_to_json(other.space).dump());
}

TEST_P(GeneratorPropertyTest, ClosureMatchesPathEnumeration) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = 2 + rng() % 5;
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = i == j ? Rational(0) : Rational(static_cast<long>(rng() % 20), 3);
  }
  const auto c = min_plus_closure(w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) EXPECT_EQ(c[i][j], oracle::shortest_path(w, i, j)) << i << "," << j;
      EXPECT_LE(c[i][j], w[i][j]);
    }
  }
}

TEST_P(GeneratorPropertyTest, GeneratedSystemShape) {
  const auto gamma = ComparisonFunction::linear(Rational(1, 2));
  const auto sys = random_weakly_contractive_system({GetParam(), 2 + GetParam() % 11}, gamma);
  const auto report = check_axioms(sys.space, true);
  EXPECT_EQ(report.identity.status, AxiomStatus::Pass);
  EXPECT_EQ(report.triangle.status, AxiomStatus::Pass);
  EXPECT_EQ(report.t0.status, AxiomStatus::Pass);
  EXPECT_EQ(sys.map(sys.sink), PointSet::singleton(sys.sink));
  for (const auto& x : sys.space.points()) EXPECT_TRUE(sys.map(x).contains(sys.sink));
  const auto starts = enumerate_startpoints(sys.space, sys.map);
  EXPECT_NE(std::find(starts.begin(), starts.end(), sys.sink), starts.end());
  EXPECT_TRUE(std::holds_alternative<ContractionCertificate>(
      verify_weak_contraction(sys.space, sys.map, gamma, ContractionMode::Forward)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, GeneratorPropertyTest, ::testing::Range<std::uint64_t>(0, 40));
