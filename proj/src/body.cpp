#include "latmink/body.hpp"

#include <algorithm>
#include <stdexcept>

namespace latmink {

struct Body::State {
  Representation rep;
  std::size_t dim = 0;
  bool zero_symmetric = false;
  bool strictly_convex = false;
  std::vector<RationalVector> vertices;
  std::vector<Facet> facets;
  std::vector<Halfspace> halfspaces;
};

namespace {

constexpr std::size_t kMaxPolytopeDim = 4;

Rational quadratic_form(const RationalMatrix& q, const RationalVector& x) {
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!x[j].is_zero() && !q(i, j).is_zero()) row += q(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

RationalVector negate(RationalVector v) {
  for (auto& x : v) x = -x;
  return v;
}

void check_dim(const Body& k, std::size_t n) {
  if (k.dim() != n) throw std::invalid_argument("dimension mismatch between body and point");
}

}  // namespace

Body Body::hpolytope(SymmetricHPolytope p) {
  const std::size_t n = p.dim;
  if (n == 0) throw std::invalid_argument("hpolytope: dimension must be positive");
  IntMatrix normals(p.constraints.size(), n);
  auto state = std::make_shared<State>();
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& c = p.constraints[i];
    if (c.normal.size() != n) throw std::invalid_argument("hpolytope: constraint of wrong dimension");
    if (std::all_of(c.normal.begin(), c.normal.end(), [](const Integer& a) { return a.is_zero(); }))
      throw std::invalid_argument("hpolytope: zero constraint normal");
    if (c.bound.sign() <= 0) throw std::invalid_argument("hpolytope: constraint bound must be positive");
    for (std::size_t j = 0; j < n; ++j) normals(i, j) = c.normal[j];
    RationalVector a(c.normal.begin(), c.normal.end());
    state->halfspaces.push_back(Halfspace::from_rational(a, c.bound));
    state->halfspaces.push_back(Halfspace::from_rational(negate(a), c.bound));
  }
  if (rank(normals) != n) throw std::invalid_argument("hpolytope: constraint system is unbounded");
  if (n <= kMaxPolytopeDim) {
    state->vertices = enumerate_vertices(state->halfspaces, n);
    state->facets = enumerate_facets(state->vertices);
  }
  state->dim = n;
  state->zero_symmetric = true;
  state->rep = std::move(p);
  return Body(std::move(state));
}

Body Body::vpolytope_from_extreme_points(std::size_t dim, std::vector<RationalVector> vertices) {
  auto state = std::make_shared<State>();
  std::sort(vertices.begin(), vertices.end());
  state->facets = enumerate_facets(vertices);
  for (const auto& f : state->facets) state->halfspaces.push_back(f.inequality);
  std::vector<RationalVector> negated;
  negated.reserve(vertices.size());
  for (const auto& v : vertices) negated.push_back(negate(v));
  std::sort(negated.begin(), negated.end());
  state->zero_symmetric = negated == vertices;
  state->vertices = vertices;
  state->dim = dim;
  state->rep = VPolytope{dim, std::move(vertices)};
  return Body(std::move(state));
}

Body Body::vpolytope(VPolytope p) {
  const std::size_t n = p.dim;
  if (n == 0 || n > kMaxPolytopeDim) throw std::invalid_argument("vpolytope: dimension must be in [1, 4]");
  for (const auto& v : p.vertices)
    if (v.size() != n) throw std::invalid_argument("vpolytope: vertex of wrong dimension");
  std::sort(p.vertices.begin(), p.vertices.end());
  p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
  if (p.vertices.size() < n + 1 || affine_dim(p.vertices) != n)
    throw std::invalid_argument("vpolytope: points are not full-dimensional");
  std::vector<RationalVector> extreme;
  for (auto i : extreme_point_indices(p.vertices)) extreme.push_back(p.vertices[i]);
  return vpolytope_from_extreme_points(n, std::move(extreme));
}

Body Body::ellipsoid(RationalEllipsoid e) {
  const std::size_t n = e.center.size();
  if (n == 0) throw std::invalid_argument("ellipsoid: dimension must be positive");
  if (e.form.rows() != n || e.form.cols() != n) throw std::invalid_argument("ellipsoid: form has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (e.form(i, j) != e.form(j, i)) throw std::invalid_argument("ellipsoid: form is not symmetric");
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = e.form(i, j);
    if (determinant(minor).sign() <= 0) throw std::invalid_argument("ellipsoid: form is not positive definite");
  }
  auto state = std::make_shared<State>();
  state->dim = n;
  state->strictly_convex = true;
  state->zero_symmetric = std::all_of(e.center.begin(), e.center.end(), [](const Rational& c) { return c.is_zero(); });
  state->rep = std::move(e);
  return Body(std::move(state));
}

BodyKind Body::kind() const { return static_cast<BodyKind>(state_->rep.index()); }
std::size_t Body::dim() const { return state_->dim; }
const Body::Representation& Body::representation() const { return state_->rep; }
bool Body::is_zero_symmetric() const { return state_->zero_symmetric; }
bool Body::is_strictly_convex() const { return state_->strictly_convex; }

bool Body::is_lattice_polytope() const {
  if (!is_polytope()) return false;
  for (const auto& v : vertices())
    if (!std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_integer(); })) return false;
  return true;
}

std::span<const RationalVector> Body::vertices() const {
  if (!is_polytope()) throw std::logic_error("vertices() on a non-polytope");
  if (state_->dim > kMaxPolytopeDim) throw std::logic_error("vertices() needs dimension <= 4");
  return state_->vertices;
}

std::span<const Facet> Body::facets() const {
  if (!is_polytope()) throw std::logic_error("facets() on a non-polytope");
  if (state_->dim > kMaxPolytopeDim) throw std::logic_error("facets() needs dimension <= 4");
  return state_->facets;
}

std::span<const Halfspace> Body::halfspaces() const {
  if (!is_polytope()) throw std::logic_error("halfspaces() on a non-polytope");
  return state_->halfspaces;
}

bool operator==(const Body& a, const Body& b) {
  return a.state_ == b.state_ || a.state_->rep == b.state_->rep;
}

// --- queries ----------------------------------------------------------------

bool contains(const Body& k, const RationalVector& x) {
  check_dim(k, x.size());
  if (k.is_polytope()) {
    for (const auto& h : k.halfspaces())
      if (h.slack(x).sign() < 0) return false;
    return true;
  }
  const auto& e = std::get<RationalEllipsoid>(k.representation());
  RationalVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - e.center[i];
  return quadratic_form(e.form, d) <= Rational(1);
}

bool contains_interior(const Body& k, const RationalVector& x) {
  check_dim(k, x.size());
  if (k.is_polytope()) {
    for (const auto& h : k.halfspaces())
      if (h.slack(x).sign() <= 0) return false;
    return true;
  }
  const auto& e = std::get<RationalEllipsoid>(k.representation());
  RationalVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - e.center[i];
  return quadratic_form(e.form, d) < Rational(1);
}

bool contains(const Body& k, const LatticePoint& x) {
  check_dim(k, x.dim());
  if (k.is_polytope()) {
    for (const auto& h : k.halfspaces())
      if (h.slack(x).sign() < 0) return false;
    return true;
  }
  return contains(k, to_rational(x));
}

bool contains_interior(const Body& k, const LatticePoint& x) {
  check_dim(k, x.dim());
  if (k.is_polytope()) {
    for (const auto& h : k.halfspaces())
      if (h.slack(x).sign() <= 0) return false;
    return true;
  }
  return contains_interior(k, to_rational(x));
}

GaugeValue gauge(const Body& k, const RationalVector& x) {
  check_dim(k, x.size());
  if (!k.is_zero_symmetric()) throw std::invalid_argument("gauge: body is not 0-symmetric");
  if (std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.is_zero(); }))
    throw std::invalid_argument("gauge: zero vector");
  switch (k.kind()) {
    case BodyKind::kHPolytope: {
      Rational best;
      for (const auto& c : std::get<SymmetricHPolytope>(k.representation()).constraints) {
        Rational ax;
        for (std::size_t i = 0; i < x.size(); ++i) ax += Rational(c.normal[i]) * x[i];
        Rational ratio = ax.abs() / c.bound;
        if (ratio > best) best = ratio;
      }
      return GaugeValue::from_rational(best);
    }
    case BodyKind::kVPolytope: {
      auto g = conic_gauge(k.vertices(), x);
      if (!g) throw std::logic_error("gauge: LP infeasible for a 0-symmetric full-dimensional polytope");
      return GaugeValue::from_rational(*g);
    }
    case BodyKind::kEllipsoid:
      return GaugeValue::sqrt_of(quadratic_form(std::get<RationalEllipsoid>(k.representation()).form, x));
  }
  throw std::logic_error("gauge: unknown body kind");
}

GaugeValue gauge(const Body& k, const LatticePoint& x) { return gauge(k, to_rational(x)); }

Rational volume(const Body& k) {
  if (!k.is_polytope()) throw std::invalid_argument("volume: ellipsoid volume is irrational");
  if (k.dim() > kMaxPolytopeDim) throw std::invalid_argument("volume: dimension must be at most 4");
  return triangulated_volume(k.vertices(), k.facets());
}

IntegerBox bounding_box(const Body& k) {
  const std::size_t n = k.dim();
  IntegerBox box{std::vector<Integer>(n), std::vector<Integer>(n)};
  auto from_vertices = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      Rational lo = k.vertices().front()[i], hi = lo;
      for (const auto& v : k.vertices()) {
        if (v[i] < lo) lo = v[i];
        if (v[i] > hi) hi = v[i];
      }
      box.lower[i] = lo.floor();
      box.upper[i] = hi.ceil();
    }
  };
  switch (k.kind()) {
    case BodyKind::kVPolytope:
      from_vertices();
      break;
    case BodyKind::kHPolytope:
      try {
        for (std::size_t i = 0; i < n; ++i) {
          auto range = fourier_motzkin_range(k.halfspaces(), n, i);
          if (!range) throw std::invalid_argument("bounding_box: unbounded constraint system");
          box.lower[i] = range->lower.floor();
          box.upper[i] = range->upper.ceil();
        }
      } catch (const std::length_error&) {
        from_vertices();
      }
      break;
    case BodyKind::kEllipsoid: {
      const auto& e = std::get<RationalEllipsoid>(k.representation());
      auto inv = inverse(e.form);
      for (std::size_t i = 0; i < n; ++i) {
        const Integer reach = ceil_sqrt((*inv)(i, i));
        box.lower[i] = (e.center[i] - Rational(reach)).floor();
        box.upper[i] = (e.center[i] + Rational(reach)).ceil();
      }
      break;
    }
  }
  return box;
}

Body scaled(const Body& k, const Rational& t) {
  if (t.sign() <= 0) throw std::invalid_argument("scaled: factor must be positive");
  switch (k.kind()) {
    case BodyKind::kHPolytope: {
      auto p = std::get<SymmetricHPolytope>(k.representation());
      for (auto& c : p.constraints) c.bound *= t;
      return Body::hpolytope(std::move(p));
    }
    case BodyKind::kVPolytope: {
      auto p = std::get<VPolytope>(k.representation());
      for (auto& v : p.vertices)
        for (auto& x : v) x *= t;
      return Body::vpolytope(std::move(p));
    }
    case BodyKind::kEllipsoid: {
      auto e = std::get<RationalEllipsoid>(k.representation());
      const Rational inv_sq = (t * t).inverse();
      for (std::size_t i = 0; i < e.form.rows(); ++i)
        for (std::size_t j = 0; j < e.form.cols(); ++j) e.form(i, j) *= inv_sq;
      for (auto& c : e.center) c *= t;
      return Body::ellipsoid(std::move(e));
    }
  }
  throw std::logic_error("scaled: unknown body kind");
}

// --- standard bodies --------------------------------------------------------

Body slab_parallelepiped(std::size_t n, const Integer& ell) {
  if (n == 0) throw std::invalid_argument("slab_parallelepiped: dimension must be positive");
  if (ell < 1) throw std::invalid_argument("slab_parallelepiped: ell must be at least 1");
  std::vector<RationalVector> vertices;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RationalVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational half = (i + 1 == n) ? Rational(ell) : Rational(1);
      v[i] = (mask >> i & 1) ? -half : half;
    }
    vertices.push_back(std::move(v));
  }
  return Body::vpolytope(VPolytope{n, std::move(vertices)});
}

Body cube(std::size_t n) { return slab_parallelepiped(n, 1); }

Body crosspolytope(std::size_t n) {
  std::vector<RationalVector> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector v(n);
    v[i] = 1;
    vertices.push_back(v);
    v[i] = -1;
    vertices.push_back(v);
  }
  return Body::vpolytope(VPolytope{n, std::move(vertices)});
}

Body box_hpolytope(const std::vector<Rational>& half_widths) {
  SymmetricHPolytope p;
  p.dim = half_widths.size();
  for (std::size_t i = 0; i < p.dim; ++i) {
    std::vector<Integer> a(p.dim);
    a[i] = 1;
    p.constraints.push_back({std::move(a), half_widths[i]});
  }
  return Body::hpolytope(std::move(p));
}

Body ellipsoid(const RationalMatrix& form, const RationalVector& center) {
  return Body::ellipsoid(RationalEllipsoid{center, form});
}

Body unimodular_image(const IntMatrix& a, const Body& k) {
  if (!a.is_square() || a.rows() != k.dim()) throw std::invalid_argument("unimodular_image: shape mismatch");
  if (!is_unimodular(a)) throw std::invalid_argument("unimodular_image: matrix is not unimodular");
  const IntMatrix inv = inverse_unimodular(a);
  const std::size_t n = k.dim();
  switch (k.kind()) {
    case BodyKind::kHPolytope: {
      // |c.x| <= b on K becomes |c A^{-1} y| <= b on A K.
      auto p = std::get<SymmetricHPolytope>(k.representation());
      for (auto& c : p.constraints) {
        std::vector<Integer> row(n);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i) row[j] += c.normal[i] * inv(i, j);
        c.normal = std::move(row);
      }
      return Body::hpolytope(std::move(p));
    }
    case BodyKind::kVPolytope: {
      std::vector<RationalVector> image;
      for (const auto& v : k.vertices()) image.push_back(a * v);
      return Body::vpolytope_from_extreme_points(n, std::move(image));
    }
    case BodyKind::kEllipsoid: {
      // Q' = A^{-T} Q A^{-1}, c' = A c.
      auto e = std::get<RationalEllipsoid>(k.representation());
      const RationalMatrix r = to_rational(inv);
      RationalMatrix form = r.transpose() * e.form * r;
      return Body::ellipsoid(RationalEllipsoid{a * e.center, std::move(form)});
    }
  }
  throw std::logic_error("unimodular_image: unknown body kind");
}

}  // namespace latmink
