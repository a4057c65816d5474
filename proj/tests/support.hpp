#pragma once

// Generators and brute-force oracles shared by the test binaries. The
// oracles avoid the code paths they check: lattice points are found by
// scanning a padded box with LP hull membership or the raw quadratic form,
// determinants by cofactor expansion, gauges by LP.

#include "latmink/body.hpp"
#include "latmink/counting.hpp"
#include "latmink/polytope.hpp"
#include "latmink/random.hpp"

#include <functional>
#include <vector>

namespace latmink::testing {

/// Product of random elementary operations; entries stay small.
inline IntMatrix random_unimodular(SplitMix64& rng, std::size_t n, int steps = 6) {
  IntMatrix a = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n);
    if (i == j) j = (j + 1) % n;
    switch (rng.below(3)) {
      case 0: {
        const Integer f = rng.between(-1, 1);
        for (std::size_t c = 0; c < n; ++c) a(i, c) += f * a(j, c);
        break;
      }
      case 1:
        a.swap_rows(i, j);
        break;
      default:
        for (std::size_t c = 0; c < n; ++c) a(i, c) = -a(i, c);
    }
  }
  return a;
}

inline Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = a(r, cc);
    const Integer term = a(0, c) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

inline Rational quadratic(const RationalEllipsoid& e, const RationalVector& x) {
  const std::size_t n = x.size();
  Rational q = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q += (x[i] - e.center[i]) * e.form(i, j) * (x[j] - e.center[j]);
  return q;
}

/// Rough integer radius r with every point of an ellipsoid inside c +- r:
/// sqrt(trace(Q^-1)) bounds every semi-axis.
inline Integer ellipsoid_radius(const RationalEllipsoid& e) {
  const auto inv = inverse(e.form);
  Rational trace = 0;
  for (std::size_t i = 0; i < e.form.rows(); ++i) trace += (*inv)(i, i);
  return ceil_sqrt(trace) + 1;
}

/// Box scan of [lo, hi] in lexicographic order.
inline void for_each_in_box(const std::vector<Integer>& lo, const std::vector<Integer>& hi,
                            const std::function<void(const LatticePoint&)>& visit) {
  const std::size_t n = lo.size();
  std::vector<Integer> x = lo;
  for (;;) {
    visit(LatticePoint(x));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

struct OraclePoint {
  LatticePoint x;
  bool interior;
};

/// Every lattice point of K, by scanning a box padded by 2 with hull LPs
/// (polytopes) or the quadratic form (ellipsoids).
inline std::vector<OraclePoint> oracle_points(const Body& k) {
  const std::size_t n = k.dim();
  std::vector<Integer> lo(n), hi(n);
  if (k.is_polytope()) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = k.vertices()[0][i].floor();
      hi[i] = k.vertices()[0][i].ceil();
      for (const auto& v : k.vertices()) {
        lo[i] = std::min(lo[i], v[i].floor());
        hi[i] = std::max(hi[i], v[i].ceil());
      }
    }
  } else {
    const auto& e = std::get<RationalEllipsoid>(k.representation());
    const Integer r = ellipsoid_radius(e);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = e.center[i].floor() - r;
      hi[i] = e.center[i].ceil() + r;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] -= 2;
    hi[i] += 2;
  }
  std::vector<OraclePoint> out;
  for_each_in_box(lo, hi, [&](const LatticePoint& p) {
    const RationalVector x = to_rational(p);
    if (k.is_polytope()) {
      const auto m = hull_membership(k.vertices(), x);
      if (m.contained) out.push_back({p, m.interior});
    } else {
      const Rational q = quadratic(std::get<RationalEllipsoid>(k.representation()), x);
      if (q <= 1) out.push_back({p, q < 1});
    }
  });
  return out;
}

inline LatticeCount oracle_count(const Body& k) {
  LatticeCount c{0, 0, 0};
  for (const auto& p : oracle_points(k)) {
    ++c.total;
    if (p.interior) ++c.interior;
  }
  c.boundary = c.total - c.interior;
  return c;
}

/// Gauge of a 0-symmetric body at x != 0: conic LP over the vertices, or the
/// quadratic form.
inline GaugeValue oracle_gauge(const Body& k, const LatticePoint& p) {
  const RationalVector x = to_rational(p);
  if (k.is_polytope()) return GaugeValue::from_rational(*conic_gauge(k.vertices(), x));
  return GaugeValue::sqrt_of(quadratic(std::get<RationalEllipsoid>(k.representation()), x));
}

/// min gauge over the nonzero lattice points of the smallest t K (t = 1, 2,
/// 4, ...) that holds any.
inline GaugeValue oracle_lambda1(const Body& k) {
  for (Rational t = 1;; t *= 2) {
    std::optional<GaugeValue> best;
    for (const auto& p : oracle_points(scaled(k, t)))
      if (!p.x.is_zero()) {
        const GaugeValue g = oracle_gauge(k, p.x);
        if (!best || g < *best) best = g;
      }
    if (best) return *best;
  }
}

/// Area of a convex polygon given its vertices in any order.
inline Rational shoelace_area(std::vector<RationalVector> v) {
  RationalVector c(2, Rational(0));
  for (const auto& p : v) {
    c[0] += p[0] / Rational(static_cast<long long>(v.size()));
    c[1] += p[1] / Rational(static_cast<long long>(v.size()));
  }
  auto half = [&](const RationalVector& p) { return (p[1] > c[1] || (p[1] == c[1] && p[0] > c[0])) ? 0 : 1; };
  std::sort(v.begin(), v.end(), [&](const RationalVector& a, const RationalVector& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]) > 0;
  });
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return twice / 2;
}

inline Body origin_ball(std::size_t n, const Rational& radius_squared) {
  RationalMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) q(i, i) = radius_squared.inverse();
  return ellipsoid(q, RationalVector(n, Rational(0)));
}

inline Body box2(long long a, long long b) { return box_hpolytope({Rational(a), Rational(b)}); }

inline Body vpoly(std::size_t dim, const std::vector<std::vector<long long>>& pts) {
  VPolytope p{dim, {}};
  for (const auto& v : pts) {
    RationalVector r;
    for (long long c : v) r.emplace_back(c);
    p.vertices.push_back(r);
  }
  return Body::vpolytope(p);
}

}  // namespace latmink::testing
