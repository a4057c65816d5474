#include "latmink/lp.hpp"
#include "latmink/polytope.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace latmink;
using namespace latmink::testing;

namespace {

// Minimum over the basic feasible solutions of A x = b, x >= 0.
std::optional<Rational> basic_solution_minimum(const LinearProgram& lp) {
  const std::size_t m = lp.a.rows(), n = lp.a.cols();
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1u << j)) cols.push_back(j);
    RationalMatrix basis(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) basis(i, k) = lp.a(i, cols[k]);
    const auto xb = solve(basis, lp.b);
    if (!xb) continue;
    bool feasible = true;
    Rational obj = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if ((*xb)[k].sign() < 0) feasible = false;
      obj += lp.c[cols[k]] * (*xb)[k];
    }
    if (feasible && (!best || obj < *best)) best = obj;
  }
  return best;
}

RationalVector rv(std::initializer_list<long long> xs) {
  RationalVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Simplex, MatchesBasicSolutionEnumeration) {
  SplitMix64 rng(17);
  int solved = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t m = 1 + rng.below(3), n = m + 1 + rng.below(3);
    LinearProgram lp{RationalMatrix(m, n), RationalVector(m), RationalVector(n)};
    for (std::size_t j = 0; j < n; ++j) lp.a(0, j) = 1;  // keeps the region bounded
    lp.b[0] = rng.between(0, 6);
    for (std::size_t i = 1; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) lp.a(i, j) = rng.between(-3, 3);
      lp.b[i] = rng.between(-4, 4);
    }
    for (auto& c : lp.c) c = Rational(rng.between(-5, 5));
    if (rank(lp.a) < m) continue;
    const auto expected = basic_solution_minimum(lp);
    const auto got = solve_lp(lp);
    if (!expected) {
      EXPECT_EQ(got.status, LpStatus::kInfeasible);
      continue;
    }
    ++solved;
    ASSERT_EQ(got.status, LpStatus::kOptimal);
    EXPECT_EQ(got.objective, *expected);
    EXPECT_EQ(lp.a * got.x, lp.b);
    for (const auto& x : got.x) EXPECT_GE(x.sign(), 0);
  }
  EXPECT_GT(solved, 100);
}

TEST(Simplex, DetectsUnboundedness) {
  LinearProgram lp{RationalMatrix(1, 2), rv({1}), rv({-1, 0})};
  lp.a(0, 0) = 1;
  lp.a(0, 1) = -1;
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kUnbounded);
}

TEST(Polytope, CubeFacetsAndVertices) {
  std::vector<RationalVector> pts;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) pts.push_back(rv({a, b, c}));
  pts.push_back(rv({0, 0, 0}));
  const auto facets = enumerate_facets(pts);
  ASSERT_EQ(facets.size(), 6u);
  for (const auto& f : facets) {
    EXPECT_EQ(f.inequality.offset, 1);
    EXPECT_EQ(f.vertices.size(), 4u);
  }
  std::vector<Halfspace> hs;
  for (const auto& f : facets) hs.push_back(f.inequality);
  const auto verts = enumerate_vertices(hs, 3);
  EXPECT_EQ(verts.size(), 8u);
  EXPECT_EQ(triangulated_volume(pts, facets), 8);
  EXPECT_EQ(extreme_point_indices(pts).size(), 8u);
}

TEST(Polytope, PolygonVolumeMatchesShoelace) {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RationalVector> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(rv({rng.between(-4, 4), rng.between(-4, 4)}));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (affine_dim(std::span<const RationalVector>(pts)) < 2) continue;
    const auto facets = enumerate_facets(pts);
    std::vector<RationalVector> extreme;
    for (auto i : extreme_point_indices(pts)) extreme.push_back(pts[i]);
    EXPECT_EQ(triangulated_volume(pts, facets), shoelace_area(extreme));
    EXPECT_EQ(facets.size(), extreme.size());
  }
}

TEST(Polytope, HullMembershipAgreesWithFacets) {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RationalVector> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(rv({rng.between(-3, 3), rng.between(-3, 3), rng.between(-3, 3)}));
    if (affine_dim(std::span<const RationalVector>(pts)) < 3) continue;
    const auto facets = enumerate_facets(pts);
    for (int probe = 0; probe < 20; ++probe) {
      const RationalVector x{Rational(rng.between(-7, 7), 2), Rational(rng.between(-7, 7), 2),
                             Rational(rng.between(-7, 7), 2)};
      bool in = true, strict = true;
      for (const auto& f : facets) {
        const int s = f.inequality.slack(x).sign();
        in = in && s >= 0;
        strict = strict && s > 0;
      }
      const auto m = hull_membership(pts, x);
      EXPECT_EQ(m.contained, in);
      EXPECT_EQ(m.interior, strict);
    }
  }
}

TEST(Polytope, ConicGaugeAndRanges) {
  const std::vector<RationalVector> cross{rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})};
  EXPECT_EQ(*conic_gauge(cross, rv({2, -3})), 5);
  EXPECT_FALSE(conic_gauge(std::vector<RationalVector>{rv({1, 0})}, rv({0, 1})).has_value());
  // |x + y| <= 1, |x - y| <= 3
  std::vector<Halfspace> hs{{{1, 1}, 1}, {{-1, -1}, 1}, {{1, -1}, 3}, {{-1, 1}, 3}};
  const auto r = fourier_motzkin_range(hs, 2, 0);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->lower, -2);
  EXPECT_EQ(r->upper, 2);
  std::vector<Halfspace> half{{{1, 0}, 1}};
  EXPECT_FALSE(fourier_motzkin_range(half, 2, 1).has_value());
  EXPECT_EQ(Halfspace::from_rational({Rational(1, 2), Rational(-1, 3)}, Rational(1, 6)),
            (Halfspace{{3, -2}, 1}));
}
