#include "latmink/counting.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace latmink;
using namespace latmink::testing;

namespace {

Body random_ellipsoid(SplitMix64& rng, std::size_t n, bool centered) {
  IntMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) l(i, j) = i == j ? rng.between(1, 3) : rng.between(-2, 2);
  const Rational d(rng.between(1, 16));
  RationalMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t r = 0; r < n; ++r) s += Rational(l(r, i) * l(r, j));
      q(i, j) = s / d;
    }
  RationalVector c(n, Rational(0));
  if (!centered)
    for (auto& x : c) {
      const long long den = rng.between(1, 4);
      x = Rational(rng.between(-den, den), den);
    }
  return ellipsoid(q, c);
}

Body random_polytope(SplitMix64& rng, std::size_t n) {
  for (;;) {
    std::vector<std::vector<long long>> pts;
    for (std::size_t i = 0; i < n + 1; ++i) {
      std::vector<long long> p(n);
      for (auto& c : p) c = rng.between(-2, 2);
      pts.push_back(p);
      for (auto& c : p) c = -c;
      pts.push_back(p);
    }
    try {
      return vpoly(n, pts);
    } catch (const std::invalid_argument&) {
    }
  }
}

}  // namespace

TEST(Counting, FixedExamples) {
  EXPECT_EQ(count(cube(2)), (LatticeCount{9, 1, 8}));
  EXPECT_EQ(count(box2(1, 3)), (LatticeCount{21, 5, 16}));
  EXPECT_EQ(count(ellipsoid(RationalMatrix::identity(2), {Rational(0), Rational(0)})), (LatticeCount{5, 1, 4}));
  EXPECT_EQ(count(origin_ball(2, 2)), (LatticeCount{9, 5, 4}));
  EXPECT_EQ(count(cube(3)), (LatticeCount{27, 1, 26}));
  EXPECT_EQ(count(crosspolytope(3)), (LatticeCount{7, 1, 6}));
  EXPECT_EQ(interior_lattice_points(box2(1, 3)), (PointSet{{0, -2}, {0, -1}, {0, 0}, {0, 1}, {0, 2}}));
}

TEST(Counting, PolytopesMatchHullOracle) {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(2);
    const Body k = random_polytope(rng, n);
    const auto oracle = oracle_points(k);
    std::vector<LatticePoint> a, b;
    for (const auto& p : oracle) {
      a.push_back(p.x);
      if (p.interior) b.push_back(p.x);
    }
    EXPECT_EQ(lattice_points(k), PointSet(a));
    EXPECT_EQ(interior_lattice_points(k), PointSet(b));
    EXPECT_EQ(count(k), oracle_count(k));
  }
}

TEST(Counting, HPolytopeMatchesVPolytope) {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    SymmetricHPolytope h{2, {}};
    h.constraints.push_back({{1, 0}, Rational(rng.between(1, 9), rng.between(1, 3))});
    h.constraints.push_back({{0, 1}, Rational(rng.between(1, 9), rng.between(1, 3))});
    h.constraints.push_back({{rng.between(-2, 2), 1}, Rational(rng.between(2, 9), rng.between(1, 2))});
    const Body k = Body::hpolytope(h);
    EXPECT_EQ(count(k), oracle_count(k));
  }
}

TEST(Counting, EllipsoidsMatchQuadraticScan) {
  SplitMix64 rng(57);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng.below(2);
    const Body k = random_ellipsoid(rng, n, trial % 2 == 0);
    EXPECT_EQ(count(k), oracle_count(k)) << trial;
  }
}

TEST(Counting, VisitsInLexicographicOrder) {
  std::vector<LatticePoint> seen;
  for_each_lattice_point(crosspolytope(3), [&](const LatticePoint& x, bool) { seen.push_back(x); });
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen.size(), 7u);
}

TEST(SuccessiveMinima, FixedExamples) {
  const auto slab = successive_minima(box2(1, 3));
  ASSERT_EQ(slab.values.size(), 2u);
  EXPECT_EQ(slab.values[0], GaugeValue::from_rational(Rational(1, 3)));
  EXPECT_EQ(slab.values[1], GaugeValue::from_rational(1));
  EXPECT_EQ(slab.witnesses[0], (LatticePoint{0, 1}));
  EXPECT_EQ(slab.witnesses[1], (LatticePoint{1, 0}));
  const Body disk = origin_ball(2, 2);
  EXPECT_EQ(lambda1(disk), GaugeValue::sqrt_of(Rational(1, 2)));
  const Body thin = box_hpolytope({Rational(1, 10), Rational(1, 10)});
  EXPECT_EQ(lambda1(thin), GaugeValue::from_rational(10));
  EXPECT_THROW(successive_minima(thin, {Integer(4)}), std::runtime_error);
  EXPECT_THROW(successive_minima(ellipsoid(RationalMatrix::identity(2), {Rational(1, 2), Rational(0)})),
               std::invalid_argument);
}

TEST(SuccessiveMinima, Lambda1MatchesOracleAndWitnessesAreIndependent) {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(2);
    const Body k = trial % 2 ? random_polytope(rng, n) : random_ellipsoid(rng, n, true);
    const auto m = successive_minima(k);
    ASSERT_EQ(m.values.size(), n);
    EXPECT_EQ(m.values[0], oracle_lambda1(k));
    EXPECT_TRUE(std::is_sorted(m.values.begin(), m.values.end()));
    EXPECT_TRUE(linearly_independent(m.witnesses));
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(oracle_gauge(k, m.witnesses[i]), m.values[i]);
  }
}
