#pragma once

#include "latmink/gauge.hpp"
#include "latmink/lattice.hpp"
#include "latmink/polytope.hpp"

#include <memory>
#include <span>
#include <variant>
#include <vector>

namespace latmink {

/// |normal . x| <= bound
struct SymmetricConstraint {
  std::vector<Integer> normal;
  Rational bound;
  friend bool operator==(const SymmetricConstraint&, const SymmetricConstraint&) = default;
};

struct SymmetricHPolytope {
  std::size_t dim = 0;
  std::vector<SymmetricConstraint> constraints;
  friend bool operator==(const SymmetricHPolytope&, const SymmetricHPolytope&) = default;
};

struct VPolytope {
  std::size_t dim = 0;
  std::vector<RationalVector> vertices;
  friend bool operator==(const VPolytope&, const VPolytope&) = default;
};

/// { x : (x - center)^T form (x - center) <= 1 }
struct RationalEllipsoid {
  RationalVector center;
  RationalMatrix form;
  friend bool operator==(const RationalEllipsoid&, const RationalEllipsoid&) = default;
};

enum class BodyKind { kHPolytope, kVPolytope, kEllipsoid };

/// Per-coordinate integer bounds; every point of the body lies inside.
struct IntegerBox {
  std::vector<Integer> lower;
  std::vector<Integer> upper;
  friend bool operator==(const IntegerBox&, const IntegerBox&) = default;
};

/// A full-dimensional convex body in one of three exact representations.
/// Validated on construction and immutable afterwards; copies share state.
///
/// Polytopes carry both their vertex list and an irredundant facet list,
/// computed once when the body is built (brute force, n <= 4). V-polytope
/// vertex lists are canonical: extreme points only, sorted lexicographically.
class Body {
 public:
  using Representation = std::variant<SymmetricHPolytope, VPolytope, RationalEllipsoid>;

  /// Throws std::invalid_argument unless every normal is nonzero, every
  /// bound positive and the normals span R^n.
  static Body hpolytope(SymmetricHPolytope p);
  /// Throws std::invalid_argument unless the points span R^n, n <= 4.
  static Body vpolytope(VPolytope p);
  /// Throws std::invalid_argument unless form is symmetric positive definite.
  static Body ellipsoid(RationalEllipsoid e);

  BodyKind kind() const;
  std::size_t dim() const;
  const Representation& representation() const;

  bool is_zero_symmetric() const;
  bool is_strictly_convex() const;
  bool is_polytope() const { return kind() != BodyKind::kEllipsoid; }
  /// Polytope whose vertices are all lattice points.
  bool is_lattice_polytope() const;

  /// Polytopes only (throws std::logic_error otherwise).
  std::span<const RationalVector> vertices() const;
  std::span<const Facet> facets() const;
  /// The inequalities used for membership: the two sides of every stored
  /// constraint for H-polytopes, the facets for V-polytopes.
  std::span<const Halfspace> halfspaces() const;

  friend bool operator==(const Body& a, const Body& b);

 private:
  struct State;
  explicit Body(std::shared_ptr<const State> s) : state_(std::move(s)) {}
  static Body vpolytope_from_extreme_points(std::size_t dim, std::vector<RationalVector> vertices);
  friend Body unimodular_image(const IntMatrix& a, const Body& k);

  std::shared_ptr<const State> state_;
};

// --- queries ----------------------------------------------------------------

/// Throw std::invalid_argument on dimension mismatch.
bool contains(const Body& k, const RationalVector& x);
bool contains_interior(const Body& k, const RationalVector& x);
bool contains(const Body& k, const LatticePoint& x);
bool contains_interior(const Body& k, const LatticePoint& x);

/// min { l > 0 : x in l K } for 0-symmetric K and x != 0.
/// Exact LP for V-polytopes; throws std::invalid_argument otherwise.
GaugeValue gauge(const Body& k, const RationalVector& x);
GaugeValue gauge(const Body& k, const LatticePoint& x);

/// Exact volume of a polytope of dimension <= 4; ellipsoids and larger
/// dimensions throw std::invalid_argument.
Rational volume(const Body& k);

IntegerBox bounding_box(const Body& k);

/// t K for rational t > 0.
Body scaled(const Body& k, const Rational& t);

// --- standard bodies --------------------------------------------------------

Body cube(std::size_t n);  // [-1,1]^n as a V-polytope
/// C_{n-1} x [-ell, ell] as a V-polytope; ell >= 1.
Body slab_parallelepiped(std::size_t n, const Integer& ell);
Body crosspolytope(std::size_t n);  // conv{+-e_i}
/// The H-polytope prod [-h_i, h_i].
Body box_hpolytope(const std::vector<Rational>& half_widths);
Body ellipsoid(const RationalMatrix& form, const RationalVector& center);
/// A K for unimodular A; throws std::invalid_argument otherwise.
Body unimodular_image(const IntMatrix& a, const Body& k);

}  // namespace latmink
