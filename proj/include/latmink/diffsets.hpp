#pragma once

#include "latmink/lattice.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace latmink {

PointSet difference_set(const PointSet& u);  // throws std::invalid_argument on empty input

struct SumsetResult {
  PointSet sum;
  bool lower_bound_holds = false;  // |U+V| >= |U| + |V| - 1
};
SumsetResult sumset(const PointSet& u, const PointSet& v);

/// (d+1)|U| - d(d+1)/2 where d is the affine dimension of U.
Integer fhu_bound(const PointSet& u);
/// 3k-3 for even k, 3k-2 for odd k; k >= 3.
Integer planar_min_bound(std::size_t k);

/// { anchor + i*step_s + j*step_t : 0 <= i < width, 0 <= j < height }
struct APDescriptor {
  LatticePoint anchor;
  LatticePoint step_s;
  LatticePoint step_t;
  std::size_t width = 0;
  std::size_t height = 0;

  PointSet points() const;
  friend bool operator==(const APDescriptor&, const APDescriptor&) = default;
};

/// A description of U as a progression of type (k, l), if any. The anchor is
/// the least point that works; among its step pairs a positively oriented
/// one wins, then the lexicographically least (step_s, step_t). When k == 1 (l == 1) the unused step is
/// the lexicographically least signed unit vector independent of the other.
std::optional<APDescriptor> is_ap_of_type(const PointSet& u, std::size_t k, std::size_t l);

struct IncompleteAP {
  APDescriptor ap;
  LatticePoint missing;
  friend bool operator==(const IncompleteAP&, const IncompleteAP&) = default;
};

/// U together with one extra vertex x forms a progression of type (k, l).
/// Candidates are x = a + b - c for a, b, c in U; when several completions
/// exist the one with the shortest steps (|s|^2 + |t|^2) wins, ties going to
/// the lexicographically least x.
std::optional<IncompleteAP> is_incomplete_ap(const PointSet& u, std::size_t k, std::size_t l);

namespace verdict {
struct CollinearInput {};
struct ExactAP {
  APDescriptor ap;
};
struct Incomplete {
  IncompleteAP ap;
};
struct GridThreeByThree {
  APDescriptor ap;
};
/// |U-U| meets the planar bound but U lies in none of the three
/// progression families.
struct UnmatchedEquality {};
struct NotExtremal {
  Integer excess;
};
}  // namespace verdict

using DiffSetVerdict = std::variant<verdict::CollinearInput, verdict::ExactAP, verdict::Incomplete,
                                    verdict::GridThreeByThree, verdict::UnmatchedEquality, verdict::NotExtremal>;

struct DiffSetClassification {
  Integer difference_count;  // |U-U|
  Integer bound;             // planar_min_bound(|U|); 0 for collinear input
  DiffSetVerdict verdict;

  bool is_equality_family() const;
  /// "ExactAP(2,2)", "IncompleteAP(3,2)", "GridThreeByThree",
  /// "UnmatchedEquality", "NotExtremal(+4)", "CollinearInput"
  std::string verdict_name() const;
};

/// Throws std::invalid_argument when |U| < 3, and std::logic_error when
/// |U-U| undercuts the planar bound or two families match at once.
DiffSetClassification classify_extremal(const PointSet& u);

struct MinDiffsetSearch {
  Integer min_value;
  std::vector<PointSet> minimizers;  // translated so the least point is the origin; sorted
};

/// Exhaustive scan of the non-collinear k-subsets of [0, R]^2.
/// Guarded by 3 <= k <= 9, 1 <= R <= 3 and k <= (R+1)^2 (std::invalid_argument).
MinDiffsetSearch brute_force_min_diffset(std::size_t k, std::size_t grid_radius);

}  // namespace latmink
