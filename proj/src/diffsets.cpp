#include "latmink/diffsets.hpp"

#include "latmink/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace latmink {

namespace {

std::vector<LatticePoint> signed_units(std::size_t n) {
  std::vector<LatticePoint> units;
  for (std::size_t i = 0; i < n; ++i) {
    units.push_back(LatticePoint::unit(n, i));
    units.push_back(-LatticePoint::unit(n, i));
  }
  std::sort(units.begin(), units.end());
  return units;
}

std::vector<LatticePoint> step_candidates(const PointSet& u, const LatticePoint& anchor, std::size_t terms) {
  if (terms == 1) return signed_units(anchor.dim());
  std::vector<LatticePoint> steps;
  for (const auto& v : u)
    if (v != anchor) steps.push_back(v - anchor);
  std::sort(steps.begin(), steps.end());
  return steps;
}

bool independent(const LatticePoint& s, const LatticePoint& t) {
  const LatticePoint pair[] = {s, t};
  return linearly_independent(pair);
}

bool positively_oriented(const LatticePoint& s, const LatticePoint& t) {
  return s.dim() == 2 && s[0] * t[1] - s[1] * t[0] > 0;
}

Integer squared_length(const LatticePoint& v) {
  Integer s;
  for (const auto& c : v.coords()) s += c * c;
  return s;
}

std::vector<RationalVector> to_rational(const PointSet& u) {
  std::vector<RationalVector> out;
  out.reserve(u.size());
  for (const auto& p : u) out.push_back(latmink::to_rational(p));
  return out;
}

}  // namespace

PointSet difference_set(const PointSet& u) {
  if (u.empty()) throw std::invalid_argument("difference_set: empty set");
  std::vector<LatticePoint> diffs;
  diffs.reserve(u.size() * u.size());
  for (const auto& a : u)
    for (const auto& b : u) diffs.push_back(a - b);
  return PointSet(std::move(diffs));
}

SumsetResult sumset(const PointSet& u, const PointSet& v) {
  if (u.empty() || v.empty()) throw std::invalid_argument("sumset: empty set");
  if (u.dim() != v.dim()) throw std::invalid_argument("sumset: dimension mismatch");
  std::vector<LatticePoint> sums;
  sums.reserve(u.size() * v.size());
  for (const auto& a : u)
    for (const auto& b : v) sums.push_back(a + b);
  SumsetResult r{PointSet(std::move(sums)), false};
  r.lower_bound_holds = r.sum.size() + 1 >= u.size() + v.size();
  return r;
}

Integer fhu_bound(const PointSet& u) {
  const Integer d = affine_dim(u);
  return (d + 1) * Integer(u.size()) - d * (d + 1) / 2;
}

Integer planar_min_bound(std::size_t k) {
  if (k < 3) throw std::invalid_argument("planar_min_bound: k must be at least 3");
  const Integer kk(k);
  return k % 2 == 0 ? 3 * kk - 3 : 3 * kk - 2;
}

PointSet APDescriptor::points() const {
  std::vector<LatticePoint> pts;
  for (std::size_t j = 0; j < height; ++j)
    for (std::size_t i = 0; i < width; ++i) pts.push_back(anchor + Integer(i) * step_s + Integer(j) * step_t);
  return PointSet(std::move(pts));
}

std::optional<APDescriptor> is_ap_of_type(const PointSet& u, std::size_t k, std::size_t l) {
  if (k == 0 || l == 0 || u.size() != k * l || u.dim() < 2) return std::nullopt;
  for (const auto& anchor : u) {
    const auto s_steps = step_candidates(u, anchor, k);
    const auto t_steps = step_candidates(u, anchor, l);
    std::optional<APDescriptor> best;
    for (const auto& s : s_steps) {
      for (const auto& t : t_steps) {
        if (!independent(s, t)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < l && ok; ++j) {
          LatticePoint p = anchor + Integer(j) * t;
          for (std::size_t i = 0; i < k && ok; ++i, p += s) ok = u.contains(p);
        }
        if (!ok) continue;
        if (!best || (positively_oriented(s, t) && !positively_oriented(best->step_s, best->step_t)))
          best = APDescriptor{anchor, s, t, k, l};
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<IncompleteAP> is_incomplete_ap(const PointSet& u, std::size_t k, std::size_t l) {
  if (k == 0 || l == 0 || u.empty() || u.size() + 1 != k * l || u.dim() < 2) return std::nullopt;
  std::vector<LatticePoint> candidates;
  for (const auto& a : u)
    for (const auto& b : u)
      for (const auto& c : u) {
        LatticePoint x = a + b - c;
        if (!u.contains(x)) candidates.push_back(std::move(x));
      }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const auto hull = to_rational(u);
  std::optional<IncompleteAP> best;
  Integer best_score;
  for (const auto& x : candidates) {
    std::vector<LatticePoint> completed(u.begin(), u.end());
    completed.push_back(x);
    auto ap = is_ap_of_type(PointSet(std::move(completed)), k, l);
    if (!ap) continue;
    const Integer score = squared_length(ap->step_s) + squared_length(ap->step_t);
    if (best && score >= best_score) continue;
    if (hull_membership(hull, latmink::to_rational(x)).contained) continue;
    best = IncompleteAP{std::move(*ap), x};
    best_score = score;
  }
  return best;
}

bool DiffSetClassification::is_equality_family() const {
  return std::holds_alternative<verdict::ExactAP>(verdict) || std::holds_alternative<verdict::Incomplete>(verdict) ||
         std::holds_alternative<verdict::GridThreeByThree>(verdict);
}

std::string DiffSetClassification::verdict_name() const {
  struct Namer {
    static std::string type(const APDescriptor& ap) {
      return "(" + std::to_string(ap.width) + "," + std::to_string(ap.height) + ")";
    }
    std::string operator()(const verdict::CollinearInput&) const { return "CollinearInput"; }
    std::string operator()(const verdict::ExactAP& v) const { return "ExactAP" + type(v.ap); }
    std::string operator()(const verdict::Incomplete& v) const { return "IncompleteAP" + type(v.ap.ap); }
    std::string operator()(const verdict::GridThreeByThree&) const { return "GridThreeByThree"; }
    std::string operator()(const verdict::UnmatchedEquality&) const { return "UnmatchedEquality"; }
    std::string operator()(const verdict::NotExtremal& v) const { return "NotExtremal(+" + v.excess.str() + ")"; }
  };
  return std::visit(Namer{}, verdict);
}

DiffSetClassification classify_extremal(const PointSet& u) {
  if (u.size() < 3) throw std::invalid_argument("classify_extremal: need at least 3 points");
  DiffSetClassification c;
  c.difference_count = difference_set(u).size();
  if (is_collinear(u)) {
    c.verdict = verdict::CollinearInput{};
    return c;
  }
  const std::size_t k = u.size();
  c.bound = planar_min_bound(k);
  if (c.difference_count < c.bound)
    throw std::logic_error("classify_extremal: |U-U| below the planar bound for a non-collinear set");
  if (c.difference_count > c.bound) {
    c.verdict = verdict::NotExtremal{c.difference_count - c.bound};
    return c;
  }
  if (k % 2 == 0) {
    if (auto ap = is_ap_of_type(u, k / 2, 2))
      c.verdict = verdict::ExactAP{std::move(*ap)};
    else
      c.verdict = verdict::UnmatchedEquality{};
    return c;
  }
  auto incomplete = is_incomplete_ap(u, (k + 1) / 2, 2);
  auto grid = k == 9 ? is_ap_of_type(u, 3, 3) : std::nullopt;
  if (incomplete && grid) throw std::logic_error("classify_extremal: two equality families match");
  if (incomplete)
    c.verdict = verdict::Incomplete{std::move(*incomplete)};
  else if (grid)
    c.verdict = verdict::GridThreeByThree{std::move(*grid)};
  else
    c.verdict = verdict::UnmatchedEquality{};
  return c;
}

MinDiffsetSearch brute_force_min_diffset(std::size_t k, std::size_t grid_radius) {
  if (k < 3 || k > 9) throw std::invalid_argument("brute_force_min_diffset: k must lie in [3, 9]");
  if (grid_radius < 1 || grid_radius > 3)
    throw std::invalid_argument("brute_force_min_diffset: grid radius must lie in [1, 3]");
  const std::size_t side = grid_radius + 1;
  if (k > side * side) throw std::invalid_argument("brute_force_min_diffset: more points than grid cells");

  std::vector<LatticePoint> grid;
  for (std::size_t x = 0; x < side; ++x)
    for (std::size_t y = 0; y < side; ++y)
      grid.push_back(LatticePoint({static_cast<long long>(x), static_cast<long long>(y)}));

  MinDiffsetSearch result;
  bool found = false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  const std::size_t m = grid.size();
  for (;;) {
    std::vector<LatticePoint> pts;
    for (auto i : idx) pts.push_back(grid[i]);
    PointSet u(std::move(pts));
    if (!is_collinear(u)) {
      const Integer d = difference_set(u).size();
      if (!found || d < result.min_value) {
        found = true;
        result.min_value = d;
        result.minimizers.clear();
      }
      if (d == result.min_value) result.minimizers.push_back(u.translated(-u[0]));
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(result.minimizers.begin(), result.minimizers.end(),
            [](const PointSet& a, const PointSet& b) { return a.points() < b.points(); });
  result.minimizers.erase(std::unique(result.minimizers.begin(), result.minimizers.end()), result.minimizers.end());
  return result;
}

}  // namespace latmink
