#include "latmink/corpus.hpp"
#include "latmink/theorems.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace latmink;
using namespace latmink::testing;

namespace {

std::vector<RationalVector> sorted_vertices(std::span<const RationalVector> v) {
  std::vector<RationalVector> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RationalVector> mapped(const IntMatrix& a, std::span<const RationalVector> v) {
  std::vector<RationalVector> out;
  for (const auto& x : v) out.push_back(a * x);
  std::sort(out.begin(), out.end());
  return out;
}

// All 2x2 matrices with entries in [-3, 3] and determinant +-1. Any map
// from a polygon in [-2, 2]^2 onto a slab parallelepiped has an inverse with
// entries of absolute value at most 2, so this list is exhaustive for it.
std::vector<IntMatrix> small_unimodular_2x2() {
  std::vector<IntMatrix> out;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d)
          if (a * d - b * c == 1 || a * d - b * c == -1) out.push_back(IntMatrix{{a, b}, {c, d}});
  return out;
}

std::optional<Integer> oracle_slab_ell(const Body& k, const std::vector<IntMatrix>& maps) {
  if (!k.is_polytope() || k.vertices().size() != 4) return std::nullopt;
  for (long long ell = 1; ell <= 4; ++ell) {
    const auto target = sorted_vertices(slab_parallelepiped(2, ell).vertices());
    for (const auto& a : maps)
      if (mapped(a, k.vertices()) == target) return Integer(ell);
  }
  return std::nullopt;
}

}  // namespace

TEST(BoundFormulas, MatchHandEvaluation) {
  EXPECT_EQ(bound_main(2, 1), 9);
  EXPECT_EQ(bound_main(2, 3), 15);
  EXPECT_EQ(bound_main(3, 1), 27);
  EXPECT_EQ(c_bound(2, 1), 6);
  EXPECT_EQ(c_bound(3, 0), 8);
  EXPECT_EQ(c_bound(1, 7), 2);
  EXPECT_EQ(remark_sc_bound(2, 3), 24);
  EXPECT_EQ(remark_sc_bound(2, 1), Rational(8, 3) + 16);
  EXPECT_EQ(remark_sc_bound(3, 9), 80);
  EXPECT_EQ(bound_minkowski_volume(3), 8);
  EXPECT_EQ(bound_minkowski_discrete(2), 9);
  EXPECT_EQ(helly_number(3), 8);
  EXPECT_EQ(bound_bhw(2, GaugeValue::from_rational(Rational(1, 2))), 25);
  EXPECT_EQ(bound_bhw_strictly_convex(2, GaugeValue::sqrt_of(Rational(1, 2))), 17);
  EXPECT_EQ(bound_sc_general(2, 5), 15);
  EXPECT_EQ(bound_sc_general(2, 1), 7);
  EXPECT_EQ(bound_sc_general(2, 0), 4);
  EXPECT_EQ(bound_sc_symmetric(2, 5), 23);
  EXPECT_EQ(bound_van_der_corput(2, 5), 12);
  EXPECT_EQ(bound_combined(2, 3), 25);
  EXPECT_EQ(bound_bhw_conjecture({GaugeValue::from_rational(Rational(1, 3)), GaugeValue::from_rational(1)}), 21);
}

TEST(BoundFormulas, PropertySweep) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (long long i = 0; i <= 40; ++i) {
      const Integer p2 = pow_int(2, static_cast<unsigned>(n)), p3 = pow_int(3, static_cast<unsigned>(n));
      EXPECT_EQ(bound_main(n, i), p3 / 3 * (i + 2));
      EXPECT_EQ(bound_combined(n, i), pow_int(i + 2, static_cast<unsigned>(n)));
      EXPECT_EQ(bound_sc_symmetric(n, i), p2 * (i + 1) - 1);
      EXPECT_EQ(bound_van_der_corput(n, i), p2 / 2 * (i + 1));
      EXPECT_EQ(bound_sc_general(n, i), c_bound(n, i) + i);
      EXPECT_EQ(c_bound(n, i), 2 * (p2 / 2 - 1) * ((2 * (i + 1) + 2) / 3) + 2);
    }
  for (long long num = 1; num <= 30; ++num)
    for (long long den = 1; den <= 7; ++den) {
      const GaugeValue l1 = GaugeValue::from_rational(Rational(num, den));
      const Rational q = Rational(2 * den, num);
      EXPECT_EQ(bound_bhw(3, l1), pow_int((q + 1).floor(), 3));
      EXPECT_EQ(bound_bhw_strictly_convex(3, l1), 2 * pow_int(q.ceil(), 3) - 1);
    }
}

TEST(MainTheorem, Examples) {
  const auto slab = verify_main(box2(1, 2));
  EXPECT_EQ(slab.counts, (LatticeCount{15, 3, 12}));
  EXPECT_EQ(slab.bound, 15);
  EXPECT_TRUE(slab.satisfied);
  EXPECT_TRUE(slab.equality);
  ASSERT_TRUE(slab.certificate.has_value());
  EXPECT_EQ(slab.certificate->ell, 2);

  const auto diamond = verify_main(scaled(crosspolytope(2), 2));
  EXPECT_EQ(diamond.counts, (LatticeCount{13, 5, 8}));
  EXPECT_EQ(diamond.bound, 21);
  EXPECT_TRUE(diamond.satisfied);
  EXPECT_FALSE(diamond.equality);

  const auto sheared = verify_main(unimodular_image(IntMatrix{{1, 0}, {1, 1}}, cube(2)));
  EXPECT_EQ(sheared.counts.total, 9);
  EXPECT_EQ(sheared.bound, 9);
  EXPECT_TRUE(sheared.equality);
  ASSERT_TRUE(sheared.certificate.has_value());
  EXPECT_EQ(sheared.certificate->ell, 1);
  EXPECT_EQ(sheared.certificate->transform, (IntMatrix{{1, 0}, {-1, 1}}));

  EXPECT_THROW(verify_main(ellipsoid(RationalMatrix::identity(2), {Rational(1, 2), Rational(0)})),
               std::invalid_argument);
}

TEST(EqualityCase, Examples) {
  const auto c3 = equality_parallelepiped(box2(1, 3));
  ASSERT_TRUE(c3.has_value());
  EXPECT_EQ(c3->ell, 3);
  EXPECT_EQ(c3->transform, IntMatrix::identity(2));
  const Body gen = vpoly(2, {{1, 4}, {-1, -4}, {1, -2}, {-1, 2}});
  const auto cg = equality_parallelepiped(gen);
  ASSERT_TRUE(cg.has_value());
  EXPECT_EQ(cg->ell, 3);
  EXPECT_TRUE(certificate_holds(gen, *cg));
  EXPECT_FALSE(equality_parallelepiped(crosspolytope(2)).has_value());
  EXPECT_FALSE(equality_parallelepiped(scaled(cube(2), 2)).has_value());
}

TEST(EqualityCase, AgreesWithExhaustiveMatrixSearchOnPolygons) {
  const auto maps = small_unimodular_2x2();
  for (int r = 1; r <= 2; ++r) {
    const Corpus c = gen_symmetric_polygons(r);
    for (const auto& e : c.bodies) {
      const auto cert = equality_parallelepiped(e.body);
      const auto ell = oracle_slab_ell(e.body, maps);
      ASSERT_EQ(cert.has_value(), ell.has_value()) << e.id;
      if (!cert) continue;
      EXPECT_EQ(cert->ell, *ell) << e.id;
      EXPECT_TRUE(certificate_holds(e.body, *cert));
      EXPECT_EQ(mapped(cert->transform, e.body.vertices()),
                sorted_vertices(slab_parallelepiped(2, cert->ell).vertices()));
      const auto report = verify_main(e.body);
      EXPECT_TRUE(report.equality) << e.id;
    }
  }
}

TEST(EqualityCase, RecoversEllFromRandomImages) {
  SplitMix64 rng(91);
  for (std::size_t n = 2; n <= 4; ++n)
    for (long long ell = 1; ell <= 3; ++ell)
      for (int t = 0; t < 8; ++t) {
        const Body k = unimodular_image(random_unimodular(rng, n, 8), slab_parallelepiped(n, ell));
        const auto cert = equality_parallelepiped(k);
        ASSERT_TRUE(cert.has_value());
        EXPECT_EQ(cert->ell, ell);
        EXPECT_TRUE(certificate_holds(k, *cert));
        if (n <= 3) EXPECT_TRUE(verify_main(k).equality);
      }
}

TEST(ClassicalChecks, Examples) {
  const auto mv = verify_minkowski_volume(cube(2));
  EXPECT_EQ(mv.bound, 4);
  EXPECT_TRUE(mv.equality);
  EXPECT_FALSE(verify_minkowski_volume(crosspolytope(2)).equality);
  EXPECT_EQ(verify_minkowski_volume(crosspolytope(2)).measured, GaugeValue::from_rational(2));
  EXPECT_TRUE(verify_minkowski_volume(vpoly(2, {{1, 0}, {-1, 0}, {1, 2}, {-1, -2}})).equality);
  EXPECT_THROW(verify_minkowski_volume(box2(1, 2)), std::invalid_argument);

  const auto md = verify_minkowski_discrete(cube(3));
  EXPECT_TRUE(md.equality);
  ASSERT_TRUE(md.certificate.has_value());
  EXPECT_EQ(md.certificate->ell, 1);

  const auto bhw = verify_bhw(scaled(cube(2), 2));
  EXPECT_EQ(bhw.bound, 25);
  EXPECT_TRUE(bhw.equality);
  EXPECT_TRUE(verify_bhw(cube(3)).equality);
  const auto disk = verify_bhw_sc(origin_ball(2, 2));
  EXPECT_EQ(disk.bound, 17);
  EXPECT_TRUE(disk.satisfied);
  EXPECT_THROW(verify_bhw_sc(cube(2)), std::invalid_argument);

  EXPECT_TRUE(verify_vdc(box2(1, 3)).equality);
  EXPECT_TRUE(verify_vdc(cube(2)).equality);
  EXPECT_FALSE(verify_vdc(crosspolytope(2)).equality);

  EXPECT_TRUE(verify_lambda1_interior(box2(1, 3)).equality);
  EXPECT_TRUE(verify_lambda1_interior(cube(2)).equality);
  const auto l2 = verify_lambda1_interior(scaled(cube(2), 2));
  EXPECT_FALSE(l2.equality);
  EXPECT_EQ(l2.bound, 10);

  EXPECT_TRUE(verify_combined(cube(2)).equality);
  EXPECT_EQ(verify_combined(box2(1, 2)).bound, 25);
  EXPECT_TRUE(verify_combined(cube(3)).equality);

  EXPECT_TRUE(verify_bhw_conjecture(cube(2)).satisfied);
  EXPECT_TRUE(verify_bhw_conjecture(box2(1, 3)).equality);
  EXPECT_EQ(verify_bhw_conjecture(crosspolytope(2)).bound, 9);
}

TEST(StrictlyConvex, Examples) {
  const auto unit = verify_sc_symmetric(origin_ball(2, 1));
  EXPECT_EQ(unit.counts, (LatticeCount{5, 1, 4}));
  EXPECT_EQ(unit.bound, 7);
  const auto two = verify_sc_symmetric(origin_ball(2, 2));
  EXPECT_EQ(two.counts, (LatticeCount{9, 5, 4}));
  EXPECT_EQ(two.bound, 23);
  RationalMatrix q = RationalMatrix::identity(2);
  q(0, 0) = Rational(1, 9);
  const Body stretched = ellipsoid(q, {Rational(0), Rational(0)});
  const auto st = verify_sc_symmetric(stretched);
  EXPECT_EQ(st.counts.total, 9);
  EXPECT_EQ(st.counts.interior, 5);
  EXPECT_EQ(st.bound, 23);
  EXPECT_EQ(verify_sc_general(origin_ball(2, 2)).bound, 15);
  EXPECT_EQ(verify_sc_general(origin_ball(2, 1)).bound, 7);
  const Body off = ellipsoid(RationalMatrix{{2, 0}, {0, 2}}, {Rational(1, 2), Rational(1, 2)});
  const auto g = verify_sc_general(off);
  EXPECT_EQ(g.counts, (LatticeCount{4, 0, 4}));
  EXPECT_EQ(g.bound, 4);
  EXPECT_TRUE(g.equality);
  EXPECT_THROW(verify_sc_general(cube(2)), std::invalid_argument);
  EXPECT_THROW(verify_sc_symmetric(off), std::invalid_argument);
}

TEST(Witnesses, Examples) {
  const auto w = congruence_witnesses(box2(1, 2), 3);
  const auto it = std::find_if(w.begin(), w.end(), [](const CongruenceWitness& c) {
    return c.v == LatticePoint{0, 2} && c.w == LatticePoint{0, -1};
  });
  ASSERT_NE(it, w.end());
  EXPECT_EQ(it->witness, (LatticePoint{0, 1}));
  EXPECT_TRUE(it->interior);
  EXPECT_TRUE(congruence_witnesses(cube(2), 3).empty());
  const auto w2 = congruence_witnesses(scaled(cube(2), 2), 2);
  const auto it2 = std::find_if(w2.begin(), w2.end(), [](const CongruenceWitness& c) {
    return c.v == LatticePoint{2, 0} && c.w == LatticePoint{0, 0};
  });
  ASSERT_NE(it2, w2.end());
  EXPECT_EQ(it2->witness, (LatticePoint{1, 0}));
  EXPECT_TRUE(it2->interior);
  EXPECT_THROW(congruence_witnesses(cube(2), 1), std::invalid_argument);
}

TEST(Witnesses, PairsAreExactlyTheSameClassPairs) {
  SplitMix64 rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    const Body k = unimodular_image(random_unimodular(rng, 2), box2(1, rng.between(1, 4)));
    const auto pts = lattice_points(k);
    std::size_t expected = 0;
    for (const auto& v : pts)
      for (const auto& x : pts)
        if (x < v && congruent(v, x, 3)) ++expected;
    const auto w = congruence_witnesses(k, 3);
    EXPECT_EQ(w.size(), expected);
    for (const auto& c : w) {
      EXPECT_EQ(Integer(3) * c.witness, c.v - c.w);
      EXPECT_TRUE(contains_interior(k, c.witness));
    }
  }
}

TEST(Reports, FormatIsKeyValue) {
  const std::string line = format_report(verify_main(box2(1, 3)));
  EXPECT_NE(line.find("check=main"), std::string::npos);
  EXPECT_NE(line.find("total=21"), std::string::npos);
  EXPECT_NE(line.find("interior=5"), std::string::npos);
  EXPECT_NE(line.find("equality=true"), std::string::npos);
  EXPECT_NE(line.find("ell=3"), std::string::npos);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(parse_check("bhw-sc"), Check::kBhwStrictlyConvex);
  EXPECT_FALSE(parse_check("nope").has_value());
  for (Check c : all_checks()) EXPECT_EQ(parse_check(check_name(c)), c);
}
