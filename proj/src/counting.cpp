#include "latmink/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace latmink {

namespace {

using Visitor = std::function<void(const LatticePoint&, bool)>;

// Lattice points of { x : a.x <= scale * offset for every halfspace }.
class FiberEnumerator {
 public:
  FiberEnumerator(std::span<const Halfspace> halfspaces, const Integer& scale, const IntegerBox& box,
                  const Visitor& visit)
      : hs_(halfspaces), box_(box), visit_(visit), x_(LatticePoint::zero(box.lower.size())) {
    residual_.reserve(hs_.size());
    for (const auto& h : hs_) residual_.push_back(h.offset * scale);
  }

  void run() { descend(0); }

 private:
  void descend(std::size_t axis) {
    const std::size_t n = x_.dim();
    if (axis + 1 == n) {
      last_fiber();
      return;
    }
    for (Integer v = box_.lower[axis]; v <= box_.upper[axis]; ++v) {
      x_[axis] = v;
      for (std::size_t h = 0; h < hs_.size(); ++h) residual_[h] -= hs_[h].normal[axis] * v;
      descend(axis + 1);
      for (std::size_t h = 0; h < hs_.size(); ++h) residual_[h] += hs_[h].normal[axis] * v;
    }
  }

  void last_fiber() {
    const std::size_t axis = x_.dim() - 1;
    std::optional<Integer> lo, hi, ilo, ihi;
    bool interior_possible = true;
    auto tighten_lo = [](std::optional<Integer>& b, Integer v) {
      if (!b || v > *b) b = std::move(v);
    };
    auto tighten_hi = [](std::optional<Integer>& b, Integer v) {
      if (!b || v < *b) b = std::move(v);
    };
    for (std::size_t h = 0; h < hs_.size(); ++h) {
      const Integer& a = hs_[h].normal[axis];
      const Integer& r = residual_[h];
      if (a.is_zero()) {
        if (r < 0) return;
        if (r == 0) interior_possible = false;
      } else if (a > 0) {
        tighten_hi(hi, floor_div(r, a));
        tighten_hi(ihi, ceil_div(r, a) - 1);
      } else {
        tighten_lo(lo, ceil_div(r, a));
        tighten_lo(ilo, floor_div(r, a) + 1);
      }
    }
    if (!lo || !hi) throw std::logic_error("fiber enumeration: unbounded fiber");
    for (Integer v = *lo; v <= *hi; ++v) {
      x_[axis] = v;
      const bool interior = interior_possible && ilo && ihi && v >= *ilo && v <= *ihi;
      visit_(x_, interior);
    }
  }

  std::span<const Halfspace> hs_;
  const IntegerBox& box_;
  const Visitor& visit_;
  LatticePoint x_;
  std::vector<Integer> residual_;
};

IntegerBox scaled_box(const IntegerBox& box, const Integer& t) {
  IntegerBox out = box;
  for (auto& v : out.lower) v *= t;
  for (auto& v : out.upper) v *= t;
  return out;
}

// Lattice points of an ellipsoid. Each fiber along the last coordinate is an
// interval whose ends are located from the exact quadratic and then
// confirmed by membership tests; strict convexity makes every point
// strictly between two points of the body interior.
class EllipsoidEnumerator {
 public:
  EllipsoidEnumerator(const RationalEllipsoid& e, const IntegerBox& box, const Visitor& visit)
      : e_(e), box_(box), visit_(visit), x_(LatticePoint::zero(box.lower.size())), d_(box.lower.size()) {}

  void run() { descend(0); }

 private:
  void descend(std::size_t axis) {
    if (axis + 1 == x_.dim()) {
      last_fiber();
      return;
    }
    for (Integer v = box_.lower[axis]; v <= box_.upper[axis]; ++v) {
      x_[axis] = v;
      d_[axis] = Rational(v) - e_.center[axis];
      descend(axis + 1);
    }
  }

  Rational form_value(const Integer& last) {
    d_.back() = Rational(last) - e_.center.back();
    Rational s;
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i].is_zero()) continue;
      Rational row;
      for (std::size_t j = 0; j < d_.size(); ++j)
        if (!d_[j].is_zero()) row += e_.form(i, j) * d_[j];
      s += d_[i] * row;
    }
    return s;
  }

  void last_fiber() {
    const std::size_t n = x_.dim();
    const std::size_t last = n - 1;
    const Rational& q = e_.form(last, last);
    Rational beta, gamma;
    for (std::size_t j = 0; j < last; ++j) {
      beta += e_.form(last, j) * d_[j];
      for (std::size_t i = 0; i < last; ++i) gamma += e_.form(i, j) * d_[i] * d_[j];
    }
    // q y^2 + 2 beta y + gamma <= 1 for y = x_n - c_n.
    const Rational disc = beta * beta - q * (gamma - Rational(1));
    if (disc.sign() < 0) return;
    const Rational mid = e_.center[last] - beta / q;
    const Integer reach = floor_sqrt(disc / (q * q));
    const Integer lo0 = mid.ceil() - reach - 1;
    Integer hi = mid.floor() + reach + 1;
    while (hi >= lo0 && form_value(hi) > Rational(1)) --hi;
    if (hi < lo0) return;
    Integer lo = lo0;
    while (form_value(lo) > Rational(1)) ++lo;
    for (Integer v = lo; v <= hi; ++v) {
      x_[last] = v;
      bool interior = v != lo && v != hi;
      if (!interior) interior = form_value(v) < Rational(1);
      visit_(x_, interior);
    }
  }

  const RationalEllipsoid& e_;
  const IntegerBox& box_;
  const Visitor& visit_;
  LatticePoint x_;
  RationalVector d_;
};

// Lattice points of t K.
void enumerate_scaled(const Body& k, const Integer& t, const Visitor& visit) {
  if (k.is_polytope()) {
    const IntegerBox box = scaled_box(bounding_box(k), t);
    FiberEnumerator(k.halfspaces(), t, box, visit).run();
    return;
  }
  const Body tk = t == 1 ? k : scaled(k, Rational(t));
  const IntegerBox box = bounding_box(tk);
  EllipsoidEnumerator(std::get<RationalEllipsoid>(tk.representation()), box, visit).run();
}

// max over the inequalities a.x <= b of a.x / b; the gauge of a
// 0-symmetric polytope, whose offsets are all positive.
GaugeValue polytope_gauge(std::span<const Halfspace> hs, const LatticePoint& x) {
  Rational best;
  for (const auto& h : hs) {
    Integer ax;
    for (std::size_t i = 0; i < x.dim(); ++i) ax += h.normal[i] * x[i];
    if (ax.sign() <= 0) continue;
    Rational ratio(ax, h.offset);
    if (ratio > best) best = ratio;
  }
  return GaugeValue::from_rational(best);
}

}  // namespace

void for_each_lattice_point(const Body& k, const Visitor& visit) { enumerate_scaled(k, 1, visit); }

PointSet lattice_points(const Body& k) {
  std::vector<LatticePoint> pts;
  for_each_lattice_point(k, [&](const LatticePoint& x, bool) { pts.push_back(x); });
  return PointSet(std::move(pts));
}

PointSet interior_lattice_points(const Body& k) {
  std::vector<LatticePoint> pts;
  for_each_lattice_point(k, [&](const LatticePoint& x, bool interior) {
    if (interior) pts.push_back(x);
  });
  return PointSet(std::move(pts));
}

LatticeCount count(const Body& k) {
  LatticeCount c;
  for_each_lattice_point(k, [&](const LatticePoint&, bool interior) {
    ++c.total;
    if (interior) ++c.interior;
  });
  c.boundary = c.total - c.interior;
  return c;
}

SuccessiveMinima successive_minima(const Body& k, const MinimaOptions& options) {
  if (!k.is_zero_symmetric()) throw std::invalid_argument("successive_minima: body is not 0-symmetric");
  const std::size_t n = k.dim();
  for (Integer t = 1; t <= options.max_scale; t *= 2) {
    std::vector<LatticePoint> pts;
    enumerate_scaled(k, t, [&](const LatticePoint& x, bool) {
      if (!x.is_zero()) pts.push_back(x);
    });
    if (pts.size() < n) continue;
    IntMatrix m(pts.size(), n);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = pts[i][j];
    if (rank(m) < n) continue;
    struct Ranked {
      GaugeValue gauge;
      Integer length;
      LatticePoint point;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(pts.size());
    for (auto& p : pts) {
      GaugeValue g = k.is_polytope() ? polytope_gauge(k.halfspaces(), p) : gauge(k, p);
      Integer length;
      for (const auto& c : p.coords()) length += c * c;
      ranked.push_back({std::move(g), std::move(length), std::move(p)});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
      if (a.gauge != b.gauge) return a.gauge < b.gauge;
      if (a.length != b.length) return a.length < b.length;
      return a.point > b.point;
    });
    SuccessiveMinima result;
    for (const auto& [g, length, p] : ranked) {
      result.witnesses.push_back(p);
      if (!linearly_independent(result.witnesses)) {
        result.witnesses.pop_back();
        continue;
      }
      result.values.push_back(g);
      if (result.witnesses.size() == n) return result;
    }
    throw std::logic_error("successive_minima: greedy selection fell short of full rank");
  }
  throw std::runtime_error("successive_minima: scale cap exceeded before finding " + std::to_string(n) +
                           " independent lattice points");
}

GaugeValue lambda1(const Body& k, const MinimaOptions& options) { return successive_minima(k, options).values.front(); }

}  // namespace latmink
