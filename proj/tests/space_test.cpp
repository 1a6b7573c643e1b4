// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qpm/corpus.hpp"
#include "qpm/space.hpp"

using namespace qpm;

namespace {

Real q(long p, long den = 1) { return Real(Rational(p, den)); }

QSpace two_point(Real ab, Real ba) {
  return QSpace::finite({"a", "b"}, {{q(0), ab}, {ba, q(0)}}, NumericPolicy::exact(), true);
}

const Point kOne = dyadic_point(0);
const Point kHalf = dyadic_point(1);
const Point kQuarter = dyadic_point(2);
const Point kZero = zero_point();

}  // namespace

TEST(PointSetTest, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(PointSet(std::vector<Point>{}), std::invalid_argument);
  EXPECT_THROW(PointSet({"a", "a"}), std::invalid_argument);
  PointSet s({"b", "a"});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains("a"));
  EXPECT_EQ(s.members().front(), "b");
}

TEST(QSpaceTest, RejectsMalformedMatrices) {
  EXPECT_THROW(QSpace::finite({"a", "b"}, {{q(0), q(1)}}), std::invalid_argument);
  EXPECT_THROW(QSpace::finite({"a", "b"}, {{q(0), q(1)}, {q(0)}}), std::invalid_argument);
  EXPECT_THROW(QSpace::finite({"a", "a"}, {{q(0), q(0)}, {q(0), q(0)}}), std::invalid_argument);
  EXPECT_THROW(QSpace::finite({"a"}, {{q(-1)}}), std::invalid_argument);
  EXPECT_THROW(QSpace::finite({}, {}), std::invalid_argument);
}

TEST(QSpaceTest, UnknownPointThrows) {
  const auto s = two_point(q(1), q(0));
  EXPECT_THROW(s.d("a", "zz"), std::out_of_range);
  EXPECT_FALSE(s.contains("zz"));
  EXPECT_FALSE(s.index_of("zz").has_value());
}

TEST(QSpaceTest, OracleSpaceHasNoUniverse) {
  const auto sys = paper_example_space();
  EXPECT_FALSE(sys.space.has_finite_universe());
  EXPECT_THROW(sys.space.points(), std::logic_error);
  EXPECT_THROW(check_axioms(sys.space, true), std::logic_error);
  EXPECT_THROW(sys.space.d("Dyadic(x)", kZero), std::out_of_range);
  EXPECT_TRUE(sys.space.left_k_complete());
}

TEST(CheckAxiomsTest, TwoPointAsymmetricSpacePasses) {
  const auto report = check_axioms(two_point(q(1), q(0)), true);
  EXPECT_EQ(report.identity.status, AxiomStatus::Pass);
  EXPECT_EQ(report.triangle.status, AxiomStatus::Pass);
  EXPECT_EQ(report.t0.status, AxiomStatus::Pass);
  EXPECT_TRUE(report.ok());
}

TEST(CheckAxiomsTest, NonzeroDiagonalFailsIdentity) {
  const auto s = QSpace::finite({"a", "b"}, {{q(1, 2), q(1)}, {q(1), q(0)}});
  const auto report = check_axioms(s, false);
  EXPECT_EQ(report.identity.status, AxiomStatus::Fail);
  EXPECT_EQ(report.identity.witness, std::vector<Point>{"a"});
  EXPECT_EQ(report.t0.status, AxiomStatus::Skipped);
}

TEST(CheckAxiomsTest, TriangleViolationReportsTriple) {
  // d(a,c) = 5 > d(a,b) + d(b,c) = 2; everything else large enough.
  const auto s = QSpace::finite({"a", "b", "c"}, {{q(0), q(1), q(5)}, {q(5), q(0), q(1)}, {q(5), q(5), q(0)}});
  const auto report = check_axioms(s, false);
  EXPECT_EQ(report.triangle.status, AxiomStatus::Fail);
  EXPECT_EQ(report.triangle.witness, (std::vector<Point>{"a", "b", "c"}));
}

TEST(CheckAxiomsTest, T0ViolationReportsPair) {
  const auto s = QSpace::finite({"a", "b"}, {{q(0), q(0)}, {q(0), q(0)}});
  const auto report = check_axioms(s, true);
  EXPECT_TRUE(report.identity.ok());
  EXPECT_TRUE(report.triangle.ok());
  EXPECT_EQ(report.t0.status, AxiomStatus::Fail);
  EXPECT_EQ(report.t0.witness, (std::vector<Point>{"a", "b"}));
}

TEST(CheckAxiomsTest, SampledCheckOnOracleSpace) {
  const auto sys = paper_example_space();
  const std::vector<Point> sample = {kOne, kHalf, kQuarter, dyadic_point(7), kZero};
  const auto report = check_axioms_sampled(sys.space, sample, true);
  EXPECT_EQ(report.identity.status, AxiomStatus::SampledPass);
  EXPECT_EQ(report.triangle.status, AxiomStatus::SampledPass);
  EXPECT_EQ(report.t0.status, AxiomStatus::SampledPass);
}

TEST(CheckAxiomsTest, FloatModeUsesTolerance) {
  const auto s = QSpace::finite({"a", "b", "c"}, {{q(0), q(1), q(2)}, {q(1), q(0), q(1)}, {q(2), q(1), q(0)}},
                                NumericPolicy::floating());
  EXPECT_TRUE(check_axioms(s, true).ok());
  const auto off = QSpace::finite({"a", "b"}, {{Real(1e-12), q(1)}, {q(1), q(0)}}, NumericPolicy::floating());
  EXPECT_TRUE(check_axioms(off, true).identity.ok());
}

TEST(ConjugateTest, SwapsArguments) {
  const auto c = two_point(q(1), q(0)).conjugate();
  EXPECT_EQ(c.d("a", "b"), q(0));
  EXPECT_EQ(c.d("b", "a"), q(1));
  EXPECT_EQ(c.numeric().mode, Arithmetic::Exact);
}

TEST(ConjugateTest, SymmetricSpaceIsFixed) {
  const auto s = two_point(q(3), q(3));
  const auto c = s.conjugate();
  for (const auto& x : s.points()) {
    for (const auto& y : s.points()) EXPECT_EQ(c.d(x, y), s.d(x, y));
  }
}

TEST(ConjugateTest, OracleConjugate) {
  const auto sys = paper_example_space();
  const auto c = sys.space.conjugate();
  EXPECT_EQ(c.d(kOne, kHalf), sys.space.d(kHalf, kOne));
  EXPECT_EQ(c.conjugate().d(kOne, kHalf), sys.space.d(kOne, kHalf));
}

TEST(SymmetrizeTest, TakesPairwiseMax) {
  const auto s = two_point(q(1), q(0)).symmetrize();
  EXPECT_EQ(s.d("a", "b"), q(1));
  EXPECT_EQ(s.d("b", "a"), q(1));
  EXPECT_TRUE(check_metric_axioms(s).ok());
  EXPECT_EQ(check_metric_axioms(two_point(q(1), q(0))).symmetry.status, AxiomStatus::Fail);
}

TEST(SymmetrizeTest, ExampleSpaceValue) {
  // d(1/2, 1) = 1 - 1/2 and d(1, 1/2) = 2 * (1 - 1/2): max is 1.
  const auto s = paper_example_space().space.symmetrize();
  EXPECT_EQ(s.d(kHalf, kOne), q(1));
  EXPECT_EQ(s.d(kOne, kHalf), q(1));
}

TEST(DistanceTest, PointToSetAndSetToPoint) {
  const auto s = two_point(q(1), q(0));
  EXPECT_EQ(dist_point_set(s, "a", PointSet({"a", "b"})), q(0));

  const auto ex = paper_example_space().space;
  const PointSet image({kHalf, kZero});
  EXPECT_EQ(dist_point_set(ex, kOne, image), q(1));     // min{2*(1/2), 2*1}
  EXPECT_EQ(dist_set_point(ex, image, kOne), q(1, 2));  // min{1 - 1/2, 1 - 0}
}

TEST(HausdorffTest, ExampleValues) {
  const auto ex = paper_example_space().space;
  EXPECT_EQ(hausdorff(ex, PointSet({kZero, kQuarter}), PointSet({kHalf})).value(), q(1, 2));
  EXPECT_EQ(hausdorff(ex, PointSet({kOne}), PointSet({kHalf, kZero})).value(), q(2));
  EXPECT_EQ(hausdorff(ex, PointSet({kOne, kZero}), PointSet({kOne, kZero})).value(), q(0));
}

TEST(HausdorffTest, SingletonShortcuts) {
  const auto ex = paper_example_space().space;
  const PointSet b({kHalf, kQuarter, kZero});
  Real fwd(0);
  Real bwd(0);
  for (const auto& p : b) {
    fwd = max(fwd, ex.d(kOne, p));
    bwd = max(bwd, ex.d(p, kOne));
  }
  EXPECT_EQ(hausdorff(ex, PointSet::singleton(kOne), b).value(), fwd);
  EXPECT_EQ(hausdorff(ex, b, PointSet::singleton(kOne)).value(), bwd);
}

TEST(BallTest, StrictInequality) {
  const auto s = two_point(q(1), q(0));
  EXPECT_FALSE(ball_contains(s, "a", q(1), "b"));
  EXPECT_TRUE(ball_contains(s, "a", q(1, 1000), "a"));
  EXPECT_TRUE(ball_contains(s, "b", q(1, 1000), "a"));
  EXPECT_THROW(ball_contains(s, "a", q(0), "a"), std::invalid_argument);

  const auto ex = paper_example_space().space;
  EXPECT_TRUE(ball_contains(ex, kZero, q(3, 10), kQuarter));
}

// Property tests over generated spaces.

class SpacePropertyTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SpacePropertyTest, HausdorffMatchesBruteForceAndLaws) {
  const std::uint64_t seed = GetParam();
  const auto space = random_t0_qspace({seed, 3 + seed % 6});
  const auto m = oracle::to_rational_matrix(space);
  const auto conj = space.conjugate();
  std::mt19937_64 rng(seed * 7919 + 1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ia = oracle::random_subset(rng, m.size());
    const auto ib = oracle::random_subset(rng, m.size());
    const auto ic = oracle::random_subset(rng, m.size());
    const auto a = oracle::as_point_set(space, ia);
    const auto b = oracle::as_point_set(space, ib);
    const auto c = oracle::as_point_set(space, ic);

    const auto hab = hausdorff(space, a, b);
    EXPECT_EQ(hab.value().rational(), oracle::hausdorff(m, ia, ib));
    EXPECT_TRUE(hausdorff(space, a, a).value().is_zero());
    EXPECT_LE(hausdorff(space, a, c), hab + hausdorff(space, b, c));
    EXPECT_EQ(hausdorff(conj, a, b), hausdorff(space, b, a));
  }
}

TEST_P(SpacePropertyTest, TransformsAgreePointwise) {
  const std::uint64_t seed = GetParam();
  const auto space = random_t0_qspace({seed, 2 + seed % 9});
  const auto conj = space.conjugate();
  const auto twice = conj.conjugate();
  const auto sym = space.symmetrize();
  for (const auto& x : space.points()) {
    for (const auto& y : space.points()) {
      EXPECT_TRUE(twice.d(x, y).identical(space.d(x, y)));
      EXPECT_EQ(sym.d(x, y), max(space.d(x, y), conj.d(x, y)));
    }
  }
  EXPECT_TRUE(check_metric_axioms(sym).ok());
}

TEST_P(SpacePropertyTest, PointSetDistanceIsAttainedMinimum) {
  const std::uint64_t seed = GetParam();
  const auto space = random_t0_qspace({seed, 4});
  std::mt19937_64 rng(seed);
  const auto set = oracle::as_point_set(space, oracle::random_subset(rng, 4));
  for (const auto& x : space.points()) {
    const Real v = dist_point_set(space, x, set);
    bool attained = false;
    for (const auto& a : set) {
      EXPECT_LE(v, space.d(x, a));
      attained = attained || v == space.d(x, a);
    }
    EXPECT_TRUE(attained);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SpacePropertyTest, ::testing::Range<std::uint64_t>(0, 25));
