#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace noricert {
namespace {

ChartPoint pt(const Rational& z1, const Rational& z2) { return {ComplexRational(z1), ComplexRational(z2)}; }

const Rational kHalf = make_rational(1, 2);

TEST(ChartMembership, Examples) {
  const Rational r = make_rational(1, 5);
  EXPECT_TRUE(chart_membership(pt(r / 2, Rational(0)), r, 0));
  EXPECT_FALSE(chart_membership(pt(r / 2, Rational(0)), r, 1));
  EXPECT_TRUE(chart_membership(pt(make_rational(1, 16), make_rational(1, 4)), kHalf, 1));
  EXPECT_THROW(chart_membership(pt(Rational(0), Rational(0)), r, 0), std::invalid_argument);
  EXPECT_THROW(chart_membership(pt(r, r), r, -1), std::invalid_argument);
}

TEST(ChartMembership, OpenSetsExcludeBoundaries) {
  // |z1| = r|z2|^k exactly
  EXPECT_FALSE(chart_membership(pt(make_rational(1, 8), make_rational(1, 4)), kHalf, 1));
  // |z2|^{k+2} = r|z1| exactly
  EXPECT_FALSE(chart_membership(pt(make_rational(1, 8), make_rational(1, 4)), kHalf, 0));
}

TEST(ChartCover, ZeroSecondCoordinate) {
  const Rational r = make_rational(1, 5);
  for (const Rational& z1 : {make_rational(1, 10), make_rational(1, 1000), make_rational(199, 1000)}) {
    const auto c = chart_cover_indices(pt(z1, Rational(0)), r, 8);
    EXPECT_TRUE(c.in_region);
    EXPECT_EQ(c.indices, (std::vector<long>{0}));
  }
}

TEST(ChartCover, SharedEndpointAndInteriorWitness) {
  // |z2| = 1/4 = r^2 sits on the region boundary: flagged, empty
  const auto edge = chart_cover_indices(pt(make_rational(1, 8), make_rational(1, 4)), kHalf, 8);
  EXPECT_FALSE(edge.in_region);
  EXPECT_TRUE(edge.indices.empty());
  // at |z1| = 1/8 the point is in neither open interval I_0, I_1
  EXPECT_FALSE(chart_membership(pt(make_rational(1, 8), make_rational(1, 4)), kHalf, 0));
  EXPECT_FALSE(chart_membership(pt(make_rational(1, 8), make_rational(1, 4)), kHalf, 1));
  // |z1| = 3/16 lies in I_0 = (1/8, 1/2) only
  std::vector<long> hit;
  for (long k = 0; k <= 8; ++k)
    if (chart_membership(pt(make_rational(3, 16), make_rational(1, 4)), kHalf, k)) hit.push_back(k);
  EXPECT_EQ(hit, (std::vector<long>{0}));
  // the same witness strictly inside the region
  const auto inner = chart_cover_indices(pt(make_rational(3, 16), make_rational(1, 5)), kHalf, 8);
  EXPECT_TRUE(inner.in_region);
  EXPECT_EQ(inner.indices, (std::vector<long>{0}));
}

TEST(ChartCover, OutsideRegionIsFlagged) {
  const Rational r = make_rational(1, 5);
  EXPECT_FALSE(chart_cover_indices(pt(r, Rational(0)), r, 4).in_region);
  EXPECT_FALSE(chart_cover_indices(pt(Rational(0), make_rational(1, 100)), r, 4).in_region);
}

TEST(ChartCover, NonemptyContiguousOnRandomPoints) {
  for (const Rational& r : {make_rational(1, 5), kHalf, make_rational(9, 10)}) {
    RationalSampler rng(4242);
    for (int s = 0; s < 10000; ++s) {
      ChartPoint p;
      p.z1 = rng.in_disk(r);
      // spread |z2| over many scales so high indices occur
      p.z2 = s % 2 == 0 ? rng.in_disk(r * r) : rng.with_modulus(rng.log_modulus(2, 24) * r * r / 2);
      const auto c = chart_cover_indices(p, r, 200);
      ASSERT_TRUE(c.in_region);
      ASSERT_FALSE(c.indices.empty()) << to_string(p.z1) << " " << to_string(p.z2);
      EXPECT_TRUE(c.contiguous());
      for (long k : c.indices) EXPECT_TRUE(chart_membership(p, r, k));
    }
  }
}

TEST(ChartCover, EarlyStopMatchesFullScan) {
  const Rational r = make_rational(1, 5);
  RationalSampler rng(7);
  for (int s = 0; s < 500; ++s) {
    ChartPoint p{rng.in_disk(r), rng.in_disk(r * r)};
    std::vector<long> full;
    for (long k = 0; k <= 30; ++k)
      if (chart_membership(p, r, k)) full.push_back(k);
    EXPECT_EQ(chart_cover_indices(p, r, 30).indices, full);
  }
}

TEST(ConeCondition, Examples) {
  const Rational rho = kHalf;
  for (long k : {0L, 1L, 3L}) EXPECT_TRUE(cone_condition(pt(Rational(0), make_rational(1, 3)), k, rho));
  for (long k : {1L, 2L}) EXPECT_FALSE(cone_condition(pt(make_rational(1, 10), Rational(0)), k, rho));
  EXPECT_TRUE(cone_condition(pt(make_rational(49, 100), Rational(0)), 0, rho));
  EXPECT_FALSE(cone_condition(pt(kHalf, Rational(0)), 0, rho));
  EXPECT_FALSE(cone_condition(pt(make_rational(51, 100), Rational(0)), 0, rho));
}

TEST(ConeCondition, ShrinkingFirstCoordinateKeepsKZeroCone) {
  RationalSampler rng(11);
  for (int s = 0; s < 2000; ++s) {
    const ComplexRational z1 = rng.in_disk(Rational(1));
    const Rational t = rng.uniform_open(Rational(0), Rational(1));
    const ChartPoint a{z1, ComplexRational()}, b{z1 * ComplexRational(t), ComplexRational()};
    if (cone_condition(a, 0, kHalf)) {
      EXPECT_TRUE(cone_condition(b, 0, kHalf));
    }
    EXPECT_EQ(cone_condition(a, 0, kHalf), abs2(z1) < kHalf * kHalf);
  }
}

TEST(ChartVerdicts, ConeImpliesChart) {
  RationalSampler rng(5);
  const Rational r = make_rational(1, 5);
  for (int s = 0; s < 500; ++s) {
    ChartPoint p{rng.in_disk(r), rng.in_disk(r * r)};
    for (const auto& v : chart_verdicts(p, r, kHalf, 6)) {
      if (v.in_cone) {
        EXPECT_TRUE(v.in_chart);
      }
    }
  }
}

TEST(Disjointness, Examples) {
  const auto a = disjointness_search(kHalf, 0, 2, 10000, 1);
  EXPECT_TRUE(a.ok());
  EXPECT_GT(a.in_first, 0u);
  EXPECT_GT(a.in_second, 0u);
  EXPECT_EQ(a.chain_checked, a.in_first);
  const auto b = disjointness_search(kHalf, 0, 1, 100, 1);
  EXPECT_TRUE(b.declined);
  EXPECT_FALSE(b.ok());
  const auto c = disjointness_search(Rational(1), 1, 3, 10000, 2);
  EXPECT_TRUE(c.ok());
  EXPECT_FALSE(disjointness_search(Rational(2), 0, 2, 10, 1).ok());
}

TEST(Disjointness, ExhaustiveGridAgrees) {
  // membership depends on the moduli only; scan a 100 x 100 grid of them
  const Rational r(1);
  std::size_t both = 0, first = 0, second = 0;
  for (long a = 1; a <= 100; ++a)
    for (long b = 1; b <= 100; ++b) {
      const ChartPoint p = pt(make_rational(a, 101), make_rational(b, 101));
      const bool in1 = chart_membership(p, r, 1), in3 = chart_membership(p, r, 3);
      first += in1;
      second += in3;
      both += in1 && in3;
    }
  EXPECT_EQ(both, 0u);
  EXPECT_GT(first, 0u);
  EXPECT_GT(second, 0u);
}

TEST(Disjointness, SeededSearchIsDeterministic) {
  const auto a = disjointness_search(make_rational(1, 5), 1, 4, 3000, 77);
  const auto b = disjointness_search(make_rational(1, 5), 1, 4, 3000, 77);
  EXPECT_EQ(a.in_first, b.in_first);
  EXPECT_EQ(a.in_second, b.in_second);
}

TEST(Disjointness, AllPairsUpToSixModerateSampling) {
  for (long j = 0; j <= 6; ++j)
    for (long k = j + 2; k <= 6; ++k) {
      const auto rep = disjointness_search(make_rational(1, 5), j, k, 2000, 100 + static_cast<std::uint64_t>(7 * j + k));
      EXPECT_TRUE(rep.ok()) << j << " " << k;
    }
}

TEST(Overlap, Examples) {
  const Rational r = make_rational(1, 5);
  EXPECT_TRUE(overlap_predicate(ComplexRational(), ComplexRational(), r));
  EXPECT_FALSE(overlap_predicate(ComplexRational(r), ComplexRational(), r));
  const ComplexRational q(make_rational(1, 4));
  EXPECT_TRUE(overlap_predicate(q, q, kHalf));
  EXPECT_EQ(abs2(q * q * q), make_rational(1, 64 * 64));
}

TEST(Overlap, PolydiskEquivalence) {
  const auto rep = overlap_polydisk_check(make_rational(1, 5), 10000, 3);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.inside + rep.outside, 10000u);
  EXPECT_GT(rep.base_checked, 9000u);
  EXPECT_TRUE(overlap_polydisk_check(Rational(1), 10, 3).declined);
}

TEST(NegativeDefinite, Examples) {
  EXPECT_TRUE(negative_definite({-3, 2, 2, -3}));
  EXPECT_FALSE(negative_definite({-2, 2, 2, -2}));
  EXPECT_TRUE(negative_definite({-1, 0, 0, -1}));
  EXPECT_THROW(negative_definite({-1, 1, 0, -1}), std::invalid_argument);
}

TEST(NegativeDefinite, AgreesWithEigenvalueSigns) {
  // eigenvalues (t +- sqrt(t^2 - 4 det)) / 2: both negative iff the larger
  // one is, i.e. t < 0 and sqrt(disc) < -t
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> e(-6, 6);
  int positives = 0;
  for (int s = 0; s < 100; ++s) {
    const long a = e(rng), b = e(rng), d = e(rng);
    const long t = a + d, det = a * d - b * b, disc = t * t - 4 * det;
    ASSERT_GE(disc, 0);
    const bool oracle = t < 0 && disc < t * t;
    EXPECT_EQ(negative_definite({a, b, b, d}), oracle) << a << " " << b << " " << d;
    positives += oracle;
  }
  EXPECT_GT(positives, 0);
}

}  // namespace
}  // namespace noricert
