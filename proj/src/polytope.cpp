#include "latmink/polytope.hpp"

#include "latmink/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace latmink {

namespace {

Rational dot(std::span<const Integer> a, const RationalVector& x) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) s += Rational(a[i]) * x[i];
  return s;
}

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::as_const(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Integral normal of the hyperplane through the given points (generalized
// cross product of the difference vectors); all zero when degenerate.
std::vector<Integer> hyperplane_normal(std::span<const RationalVector> pts, std::span<const std::size_t> idx) {
  const std::size_t n = pts[idx[0]].size();
  IntMatrix diffs(n - 1, n);
  for (std::size_t r = 1; r < idx.size(); ++r) {
    RationalVector d(n);
    Integer scale = 1;
    for (std::size_t j = 0; j < n; ++j) {
      d[j] = pts[idx[r]][j] - pts[idx[0]][j];
      scale = lcm(scale, d[j].den());
    }
    for (std::size_t j = 0; j < n; ++j) diffs(r - 1, j) = d[j].num() * (scale / d[j].den());
  }
  std::vector<Integer> normal(n);
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == k) continue;
        minor(r, cc++) = diffs(r, c);
      }
    Integer d = determinant(minor);
    normal[k] = (k % 2 == 0) ? d : Integer(-d);
  }
  return normal;
}

}  // namespace

Halfspace Halfspace::from_rational(const RationalVector& normal, const Rational& offset) {
  Integer scale = offset.den();
  for (const auto& a : normal) scale = lcm(scale, a.den());
  Halfspace h;
  h.normal.resize(normal.size());
  Integer g = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    h.normal[i] = normal[i].num() * (scale / normal[i].den());
    g = gcd(g, h.normal[i]);
  }
  h.offset = offset.num() * (scale / offset.den());
  g = gcd(g, h.offset);
  if (g > 1) {
    for (auto& a : h.normal) a /= g;
    h.offset /= g;
  }
  return h;
}

Rational Halfspace::slack(const RationalVector& x) const { return Rational(offset) - dot(normal, x); }

Integer Halfspace::slack(const LatticePoint& x) const {
  Integer s = offset;
  for (std::size_t i = 0; i < normal.size(); ++i) s -= normal[i] * x[i];
  return s;
}

std::strong_ordering operator<=>(const Halfspace& a, const Halfspace& b) {
  auto cmp = [](const Integer& x, const Integer& y) {
    return x < y ? std::strong_ordering::less : (x > y ? std::strong_ordering::greater : std::strong_ordering::equal);
  };
  for (std::size_t i = 0; i < std::min(a.normal.size(), b.normal.size()); ++i)
    if (auto c = cmp(a.normal[i], b.normal[i]); c != 0) return c;
  if (auto c = a.normal.size() <=> b.normal.size(); c != 0) return c;
  return cmp(a.offset, b.offset);
}

std::vector<Facet> enumerate_facets(std::span<const RationalVector> vertices) {
  if (vertices.empty()) throw std::invalid_argument("enumerate_facets: no points");
  const std::size_t n = vertices.front().size();
  if (affine_dim(vertices) != n) throw std::invalid_argument("enumerate_facets: points are not full-dimensional");

  std::set<Halfspace> seen;
  std::vector<Facet> facets;
  for_each_subset(vertices.size(), n, [&](const std::vector<std::size_t>& idx) {
    std::vector<Integer> normal = hyperplane_normal(vertices, idx);
    if (std::all_of(normal.begin(), normal.end(), [](const Integer& a) { return a.is_zero(); })) return;
    const Rational level = dot(normal, vertices[idx[0]]);
    int side = 0;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const Rational s = dot(normal, vertices[i]);
      if (s == level) {
        on.push_back(i);
        continue;
      }
      const int c = s < level ? -1 : 1;
      if (side == 0) side = c;
      else if (side != c) return;
    }
    RationalVector rn(normal.begin(), normal.end());
    Rational off = level;
    if (side > 0) {
      for (auto& a : rn) a = -a;
      off = -off;
    }
    Halfspace h = Halfspace::from_rational(rn, off);
    if (!seen.insert(h).second) return;
    facets.push_back(Facet{std::move(h), std::move(on)});
  });
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.inequality < b.inequality; });
  return facets;
}

std::vector<RationalVector> enumerate_vertices(std::span<const Halfspace> halfspaces, std::size_t dim) {
  std::set<RationalVector> found;
  for_each_subset(halfspaces.size(), dim, [&](const std::vector<std::size_t>& idx) {
    RationalMatrix a(dim, dim);
    RationalVector b(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) a(r, c) = Rational(halfspaces[idx[r]].normal[c]);
      b[r] = Rational(halfspaces[idx[r]].offset);
    }
    auto x = solve(a, b);
    if (!x) return;
    for (const auto& h : halfspaces)
      if (h.slack(*x).sign() < 0) return;
    found.insert(std::move(*x));
  });
  return {found.begin(), found.end()};
}

namespace {

using Simplex = std::vector<std::size_t>;

void pulling_triangulation(std::span<const RationalVector> vertices, std::span<const Facet> facets,
                           const std::vector<std::size_t>& face, std::size_t dim, std::vector<Simplex>& out) {
  if (dim == 0) {
    out.push_back({face.front()});
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& f : facets) {
    std::vector<std::size_t> meet;
    std::set_intersection(face.begin(), face.end(), f.vertices.begin(), f.vertices.end(), std::back_inserter(meet));
    if (meet.size() < dim || std::binary_search(meet.begin(), meet.end(), apex)) continue;
    if (meet.size() == face.size()) continue;
    std::vector<RationalVector> pts;
    pts.reserve(meet.size());
    for (auto i : meet) pts.push_back(vertices[i]);
    if (affine_dim(pts) != dim - 1) continue;
    subfaces.insert(std::move(meet));
  }
  for (const auto& sub : subfaces) {
    std::vector<Simplex> lower;
    pulling_triangulation(vertices, facets, sub, dim - 1, lower);
    for (auto& s : lower) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

Rational triangulated_volume(std::span<const RationalVector> vertices, std::span<const Facet> facets) {
  if (vertices.empty()) throw std::invalid_argument("triangulated_volume: no vertices");
  const std::size_t n = vertices.front().size();
  std::vector<std::size_t> all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<Simplex> simplices;
  pulling_triangulation(vertices, facets, all, n, simplices);

  Rational total;
  for (const auto& s : simplices) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = vertices[s[r + 1]][c] - vertices[s[0]][c];
    total += determinant(m).abs();
  }
  return total / Rational(factorial(static_cast<unsigned>(n)));
}

HullMembership hull_membership(std::span<const RationalVector> points, const RationalVector& x) {
  const std::size_t p = points.size();
  const std::size_t n = x.size();
  // Columns: t, mu_1..mu_p with l_i = t + mu_i.
  LinearProgram lp;
  lp.a = RationalMatrix(n + 1, p + 1);
  lp.b.assign(n + 1, Rational(0));
  lp.c.assign(p + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational sum;
    for (std::size_t i = 0; i < p; ++i) {
      lp.a(j, i + 1) = points[i][j];
      sum += points[i][j];
    }
    lp.a(j, 0) = sum;
    lp.b[j] = x[j];
  }
  lp.a(n, 0) = Rational(static_cast<long long>(p));
  for (std::size_t i = 0; i < p; ++i) lp.a(n, i + 1) = 1;
  lp.b[n] = 1;
  lp.c[0] = -1;
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::kOptimal) return {};
  return HullMembership{true, r.x[0].sign() > 0};
}

std::vector<std::size_t> extreme_point_indices(std::span<const RationalVector> points) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<RationalVector> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (others.empty() || !hull_membership(others, points[i]).contained) out.push_back(i);
  }
  return out;
}

std::optional<Rational> conic_gauge(std::span<const RationalVector> points, const RationalVector& x) {
  const std::size_t p = points.size();
  const std::size_t n = x.size();
  LinearProgram lp;
  lp.a = RationalMatrix(n, p);
  lp.b = x;
  lp.c.assign(p, Rational(1));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < p; ++i) lp.a(j, i) = points[i][j];
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  return r.objective;
}

namespace {

// a.x <= b with a primitive integral; the offset stays rational.
struct Inequality {
  std::vector<Integer> normal;
  Rational offset;
};

void insert_tightest(std::map<std::vector<Integer>, Rational>& system, std::vector<Integer> normal, Rational offset) {
  Integer g = 0;
  for (const auto& a : normal) g = gcd(g, a);
  if (g.is_zero()) {
    if (offset.sign() < 0) throw std::invalid_argument("fourier_motzkin_range: empty system");
    return;
  }
  if (g != 1) {
    for (auto& a : normal) a /= g;
    offset /= Rational(g);
  }
  auto [it, inserted] = system.emplace(std::move(normal), offset);
  if (!inserted && offset < it->second) it->second = offset;
}

constexpr std::size_t kMaxEliminationSize = 50000;

}  // namespace

std::optional<CoordinateRange> fourier_motzkin_range(std::span<const Halfspace> halfspaces, std::size_t dim,
                                                     std::size_t axis) {
  std::map<std::vector<Integer>, Rational> system;
  for (const auto& h : halfspaces) insert_tightest(system, h.normal, Rational(h.offset));

  for (std::size_t k = 0; k < dim; ++k) {
    if (k == axis) continue;
    std::vector<Inequality> pos, neg;
    std::map<std::vector<Integer>, Rational> next;
    for (const auto& [a, b] : system) {
      if (a[k].sign() > 0) pos.push_back({a, b});
      else if (a[k].sign() < 0) neg.push_back({a, b});
      else insert_tightest(next, a, b);
    }
    if (pos.size() * neg.size() + next.size() > kMaxEliminationSize)
      throw std::length_error("fourier_motzkin_range: elimination too large");
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const Integer wp = -q.normal[k];
        const Integer wq = p.normal[k];
        std::vector<Integer> a(dim);
        for (std::size_t j = 0; j < dim; ++j) a[j] = wp * p.normal[j] + wq * q.normal[j];
        insert_tightest(next, std::move(a), Rational(wp) * p.offset + Rational(wq) * q.offset);
      }
    system = std::move(next);
  }

  std::optional<Rational> lower, upper;
  for (const auto& [a, b] : system) {
    const Integer& c = a[axis];
    Rational bound = b / Rational(c);
    if (c.sign() > 0) {
      if (!upper || bound < *upper) upper = bound;
    } else if (!lower || bound > *lower) {
      lower = bound;
    }
  }
  if (!lower || !upper) return std::nullopt;
  if (*lower > *upper) throw std::invalid_argument("fourier_motzkin_range: empty system");
  return CoordinateRange{*lower, *upper};
}

}  // namespace latmink
