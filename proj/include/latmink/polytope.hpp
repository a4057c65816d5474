#pragma once

// Low-dimensional exact polytope machinery shared by the body representations:
// facet enumeration, vertex enumeration, triangulated volume and LP-based hull
// queries. Everything here is brute force and meant for n <= 4.

#include "latmink/lattice.hpp"

#include <optional>
#include <span>
#include <vector>

namespace latmink {

/// normal . x <= offset, scaled so the entries are coprime integers.
struct Halfspace {
  std::vector<Integer> normal;
  Integer offset;

  /// Scales a rational inequality to primitive integral form.
  static Halfspace from_rational(const RationalVector& normal, const Rational& offset);

  Rational slack(const RationalVector& x) const;  // offset - normal.x
  Integer slack(const LatticePoint& x) const;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend std::strong_ordering operator<=>(const Halfspace& a, const Halfspace& b);
};

struct Facet {
  Halfspace inequality;
  std::vector<std::size_t> vertices;  // indices into the vertex list, ascending
};

/// Every facet of conv(vertices), which must be full-dimensional.
/// Non-extreme input points are tolerated.
std::vector<Facet> enumerate_facets(std::span<const RationalVector> vertices);

/// Vertices of the bounded full-dimensional polyhedron given by halfspaces,
/// sorted lexicographically.
std::vector<RationalVector> enumerate_vertices(std::span<const Halfspace> halfspaces, std::size_t dim);

/// Exact volume by a pulling triangulation over the face lattice derived
/// from the facet-vertex incidences.
Rational triangulated_volume(std::span<const RationalVector> vertices, std::span<const Facet> facets);

struct HullMembership {
  bool contained = false;
  bool interior = false;
};

/// Decides x in conv(points) and x in int conv(points) with one exact LP:
/// maximize t subject to x = sum l_i p_i, sum l_i = 1, l_i >= t >= 0.
/// The interior answer assumes conv(points) is full-dimensional.
HullMembership hull_membership(std::span<const RationalVector> points, const RationalVector& x);

/// Indices of the points that are not convex combinations of the others.
std::vector<std::size_t> extreme_point_indices(std::span<const RationalVector> points);

/// min { sum mu_i : x = sum mu_i p_i, mu >= 0 }, or nullopt if infeasible.
std::optional<Rational> conic_gauge(std::span<const RationalVector> points, const RationalVector& x);

struct CoordinateRange {
  Rational lower;
  Rational upper;
};

/// Exact range of coordinate `axis` over {x : all halfspaces}, by
/// Fourier-Motzkin elimination of the other coordinates. nullopt when
/// unbounded in that coordinate; throws std::invalid_argument when empty.
std::optional<CoordinateRange> fourier_motzkin_range(std::span<const Halfspace> halfspaces, std::size_t dim,
                                                     std::size_t axis);

}  // namespace latmink
