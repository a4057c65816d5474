#pragma once

#include "latmink/body.hpp"

#include <functional>
#include <vector>

namespace latmink {

struct LatticeCount {
  Integer total;
  Integer interior;
  Integer boundary;
  friend bool operator==(const LatticeCount&, const LatticeCount&) = default;
};

/// Calls visit(x, interior) for every lattice point x of K in lexicographic
/// order. Polytopes are enumerated fiber by fiber along the last coordinate,
/// with the fiber bounds read off the integral facet inequalities; ellipsoids
/// by scanning the bounding box.
void for_each_lattice_point(const Body& k, const std::function<void(const LatticePoint&, bool)>& visit);

PointSet lattice_points(const Body& k);
PointSet interior_lattice_points(const Body& k);
LatticeCount count(const Body& k);

struct SuccessiveMinima {
  std::vector<GaugeValue> values;       // lambda_1 <= ... <= lambda_n
  std::vector<LatticePoint> witnesses;  // witness i has gauge values[i]
};

struct MinimaOptions {
  Integer max_scale = 64;
};

/// Scans t K for t = 1, 2, 4, ... until it holds n independent lattice
/// points, then selects witnesses greedily by gauge. Equal gauges go to the
/// shorter vector, then to the lexicographically greater one, so +e_i beats
/// -e_i.
/// Throws std::invalid_argument for non-symmetric K and std::runtime_error
/// when t would exceed max_scale.
SuccessiveMinima successive_minima(const Body& k, const MinimaOptions& options = {});
GaugeValue lambda1(const Body& k, const MinimaOptions& options = {});

}  // namespace latmink
