#pragma once

#include "latmink/body.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace latmink {

struct CorpusEntry {
  std::string id;
  Body body;
};

/// Bodies sorted by id.
struct Corpus {
  std::string id;
  std::string provenance;  // generator name, parameters and seed
  std::vector<CorpusEntry> bodies;
};

/// Every 0-symmetric convex lattice polygon with vertices in [-r, r]^2,
/// 1 <= r <= 3. Vertices in the upper half-plane are chained by angle with
/// strict left turns, so each polygon appears exactly once.
Corpus gen_symmetric_polygons(int radius);

struct RandomPolytopeOptions {
  std::size_t dim = 3;  // 3 or 4
  int radius = 2;       // 1..4
  std::size_t count = 100;
  std::uint64_t seed = 0;
  bool include_standards = false;
};

/// conv(S u -S) for random S of n to n+3 points of [-r, r]^n, redrawn until
/// full-dimensional. Standards: cube, crosspolytope, slab parallelepipeds
/// with ell = 2, 3.
Corpus gen_random_symmetric_polytopes(const RandomPolytopeOptions& options);

struct EllipsoidOptions {
  std::size_t dim = 2;  // 2 or 3
  std::size_t count = 100;
  std::uint64_t seed = 0;
  bool centered = true;
  bool include_standards = false;
};

/// Form L^T L / d with L upper triangular, diagonal in [1, 3], off-diagonal
/// in [-2, 2] and d in [1, 16]. General centers have coordinates p/q with
/// 1 <= q <= 4 and |p| <= q. Standards: x^2 + y^2 <= 1, x^2 + y^2 <= 2 and
/// x^2/9 + y^2 <= 1 (and the first two in dimension 3).
Corpus gen_ellipsoids(const EllipsoidOptions& options);

/// One "<body id>.body" file per body plus "corpus.meta".
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir);
Corpus read_corpus(const std::filesystem::path& dir);

}  // namespace latmink
