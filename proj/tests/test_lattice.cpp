#include "latmink/lattice.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace latmink;
using latmink::testing::cofactor_det;
using latmink::testing::random_unimodular;

namespace {

IntMatrix random_matrix(SplitMix64& rng, std::size_t r, std::size_t c, int range) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.between(-range, range);
  return m;
}

}  // namespace

TEST(LatticePoint, OrderAndArithmetic) {
  const LatticePoint a{1, 2}, b{1, 3};
  EXPECT_LT(a, b);
  EXPECT_EQ((a + b).str(), "(2,5)");
  EXPECT_EQ((b - a), (LatticePoint{0, 1}));
  EXPECT_EQ(-a, (LatticePoint{-1, -2}));
  EXPECT_EQ(Integer(3) * a, (LatticePoint{3, 6}));
  EXPECT_TRUE(LatticePoint::zero(3).is_zero());
  EXPECT_EQ(LatticePoint::unit(3, 1), (LatticePoint{0, 1, 0}));
}

TEST(PointSet, SortedAndDeduplicated) {
  const PointSet u{{1, 0}, {0, 0}, {1, 0}};
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[0], (LatticePoint{0, 0}));
  EXPECT_TRUE(u.contains({1, 0}));
  EXPECT_EQ(u.translated({1, 1}), (PointSet{{1, 1}, {2, 1}}));
  EXPECT_EQ(u.negated(), (PointSet{{-1, 0}, {0, 0}}));
}

TEST(Congruence, ResidueClasses) {
  EXPECT_TRUE(congruent({1, -2}, {4, 1}, 3));
  EXPECT_FALSE(congruent({1, -2}, {4, 2}, 3));
  EXPECT_THROW(congruent({1}, {1, 2}, 3), std::invalid_argument);
  EXPECT_THROW(congruent({1}, {1}, 1), std::invalid_argument);
  EXPECT_EQ(residue_class({-1, 5}, 3).representative, (LatticePoint{2, 2}));
}

TEST(AffineStructure, RankAndCollinearity) {
  EXPECT_TRUE(is_collinear(PointSet{{0, 0}, {1, 1}, {3, 3}}));
  EXPECT_FALSE(is_collinear(PointSet{{0, 0}, {1, 1}, {3, 2}}));
  EXPECT_EQ(affine_dim(PointSet{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), 2u);
  EXPECT_THROW(affine_dim(PointSet{}), std::invalid_argument);
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  const std::vector<LatticePoint> v{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  EXPECT_FALSE(linearly_independent(v));
}

TEST(Determinant, MatchesCofactorExpansion) {
  SplitMix64 rng(1);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const IntMatrix m = random_matrix(rng, n, n, 4);
    const Integer d = determinant(m);
    EXPECT_EQ(d, cofactor_det(m));
    EXPECT_EQ(determinant(to_rational(m)), Rational(d));
  }
}

TEST(Unimodular, InverseIsExact) {
  SplitMix64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.below(3);
    const IntMatrix a = random_unimodular(rng, n, 10);
    ASSERT_TRUE(is_unimodular(a));
    EXPECT_EQ(a * inverse_unimodular(a), IntMatrix::identity(n));
  }
  EXPECT_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_THROW(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST(RationalSolve, SolutionSatisfiesSystem) {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const IntMatrix m = random_matrix(rng, n, n, 5);
    RationalVector b(n);
    for (auto& x : b) x = Rational(rng.between(-9, 9));
    const auto x = solve(to_rational(m), b);
    if (determinant(m) == 0) {
      EXPECT_FALSE(x.has_value());
      EXPECT_FALSE(inverse(to_rational(m)).has_value());
    } else {
      ASSERT_TRUE(x.has_value());
      EXPECT_EQ(m * *x, b);
      EXPECT_EQ(to_rational(m) * *inverse(to_rational(m)), RationalMatrix::identity(n));
    }
  }
}

TEST(SmithForm, TransformsAndDivisibility) {
  SplitMix64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
    const IntMatrix a = random_matrix(rng, r, c, 6);
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.left * a * s.right, s.diagonal);
    EXPECT_TRUE(is_unimodular(s.left));
    EXPECT_TRUE(is_unimodular(s.right));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.diagonal(i, j), 0);
    const auto f = s.invariant_factors();
    EXPECT_EQ(f.size(), rank(a));
    for (std::size_t i = 0; i + 1 < f.size(); ++i) EXPECT_EQ(f[i + 1] % f[i], 0);
    if (r == c) {
      Integer prod = 1;
      for (const auto& x : f) prod *= x;
      EXPECT_EQ(f.size() == r ? prod : Integer(0), abs(determinant(a)));
    }
  }
}

TEST(MatrixText, RoundTrip) {
  const IntMatrix a{{0, -1}, {12, 3}};
  EXPECT_EQ(format_matrix(a), "[[0,-1],[12,3]]");
  EXPECT_EQ(parse_matrix(format_matrix(a)), a);
  EXPECT_THROW(parse_matrix("[[1,2],[3]]"), std::invalid_argument);
}
