#include "latmink/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace latmink {

LatticePoint::LatticePoint(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

LatticePoint LatticePoint::unit(std::size_t dim, std::size_t axis) {
  LatticePoint p = zero(dim);
  p.coords_.at(axis) = 1;
  return p;
}

bool LatticePoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c.is_zero(); });
}

LatticePoint LatticePoint::operator-() const {
  LatticePoint r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& o) {
  if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& o) {
  if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LatticePoint operator*(const Integer& s, LatticePoint p) {
  for (auto& c : p.coords_) c *= s;
  return p;
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (a.coords_[i] > b.coords_[i]) return std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

std::string LatticePoint::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].str();
  }
  return s + ")";
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  std::size_t h = p.dim();
  for (const auto& c : p.coords()) h = h * 1000003u ^ std::hash<Integer>{}(c);
  return h;
}

RationalVector to_rational(const LatticePoint& p) {
  return RationalVector(p.coords().begin(), p.coords().end());
}

std::optional<LatticePoint> to_lattice_point(const RationalVector& v) {
  std::vector<Integer> coords;
  coords.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_integer()) return std::nullopt;
    coords.push_back(x.num());
  }
  return LatticePoint(std::move(coords));
}

std::string format_vector(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// --- matrices ---------------------------------------------------------------

namespace {

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return multiply(a, b); }

LatticePoint operator*(const IntMatrix& a, const LatticePoint& x) {
  if (a.cols() != x.dim()) throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<Integer> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return LatticePoint(std::move(y));
}

RationalVector operator*(const IntMatrix& a, const RationalVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  RationalVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) y[i] += Rational(a(i, j)) * x[j];
  return y;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  RationalVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) y[i] += a(i, j) * x[j];
  return y;
}

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

std::string format_matrix(const IntMatrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ",";
      s += a(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

IntMatrix parse_matrix(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("bad matrix literal: '" + std::string(text) + "'"); };
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw fail();
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::vector<Integer>> rows;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ',') {
      ++pos;
      continue;
    }
    if (body[pos] != '[') throw fail();
    auto close = body.find(']', pos);
    if (close == std::string_view::npos) throw fail();
    std::string_view row = body.substr(pos + 1, close - pos - 1);
    std::vector<Integer> entries;
    std::size_t start = 0;
    while (start <= row.size()) {
      auto comma = row.find(',', start);
      if (comma == std::string_view::npos) comma = row.size();
      entries.push_back(parse_integer(row.substr(start, comma - start)));
      start = comma + 1;
    }
    rows.push_back(std::move(entries));
    pos = close + 1;
  }
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw fail();
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// --- point sets -------------------------------------------------------------

PointSet::PointSet(std::vector<LatticePoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  for (const auto& p : points_)
    if (p.dim() != points_.front().dim()) throw std::invalid_argument("point set with mixed dimensions");
}

bool PointSet::contains(const LatticePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::translated(const LatticePoint& v) const {
  std::vector<LatticePoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p + v);
  PointSet r;
  r.points_ = std::move(out);  // translation preserves lexicographic order
  return r;
}

PointSet PointSet::negated() const {
  std::vector<LatticePoint> out;
  out.reserve(points_.size());
  for (auto it = points_.rbegin(); it != points_.rend(); ++it) out.push_back(-*it);
  PointSet r;
  r.points_ = std::move(out);
  return r;
}

// --- congruences ------------------------------------------------------------

bool congruent(const LatticePoint& x, const LatticePoint& y, const Integer& m) {
  if (x.dim() != y.dim()) throw std::invalid_argument("congruent: dimension mismatch");
  if (m < 2) throw std::invalid_argument("congruent: modulus must be at least 2");
  for (std::size_t i = 0; i < x.dim(); ++i)
    if ((x[i] - y[i]) % m != 0) return false;
  return true;
}

ResidueClass residue_class(const LatticePoint& x, const Integer& m) {
  if (m < 2) throw std::invalid_argument("residue_class: modulus must be at least 2");
  std::vector<Integer> rep(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Integer r = x[i] % m;
    if (r.sign() < 0) r += m;
    rep[i] = r;
  }
  return ResidueClass{m, LatticePoint(std::move(rep))};
}

// --- rank and dimension -----------------------------------------------------

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& a) {
  // Fraction-free elimination; every intermediate stays integral.
  IntMatrix m = a;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t affine_dim(const PointSet& u) {
  if (u.empty()) throw std::invalid_argument("affine_dim: empty point set");
  IntMatrix diffs(u.size() - 1, u.dim());
  for (std::size_t i = 1; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j) diffs(i - 1, j) = u[i][j] - u[0][j];
  return rank(diffs);
}

bool is_collinear(const PointSet& u) {
  if (u.empty()) throw std::invalid_argument("is_collinear: empty point set");
  return affine_dim(u) <= 1;
}

std::size_t affine_dim(std::span<const RationalVector> points) {
  if (points.empty()) throw std::invalid_argument("affine_dim: empty point list");
  const std::size_t n = points.front().size();
  RationalMatrix diffs(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) diffs(i - 1, j) = points[i][j] - points[0][j];
  return rank(diffs);
}

bool linearly_independent(std::span<const LatticePoint> vectors) {
  if (vectors.empty()) return true;
  IntMatrix m(vectors.size(), vectors.front().dim());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vectors[i][j];
  return rank(m) == vectors.size();
}

// --- determinants and inverses ----------------------------------------------

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Integer(-m(n - 1, n - 1));
}

Rational determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  RationalMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      m.swap_rows(c, piv);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("is_unimodular: non-square matrix");
  Integer d = determinant(a);
  return d == 1 || d == -1;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix m = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    m.swap_rows(c, piv);
    inv.swap_rows(c, piv);
    Rational p = m(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= p;
      inv(c, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (!a.is_square() || a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.rows();
  RationalMatrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    m.swap_rows(c, piv);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j <= n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = m(i, n);
    for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
    x[i] = s / m(i, i);
  }
  return x;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!is_unimodular(a)) throw std::invalid_argument("inverse_unimodular: matrix is not unimodular");
  auto inv = inverse(to_rational(a));
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& v = (*inv)(i, j);
      if (!v.is_integer()) throw std::logic_error("inverse of unimodular matrix is not integral");
      r(i, j) = v.num();
    }
  return r;
}

// --- Smith normal form ------------------------------------------------------

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
    if (!diagonal(i, i).is_zero()) out.push_back(diagonal(i, i));
  return out;
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix s = a;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j).is_zero()) continue;
          if (!best || abs(s(i, j)) < abs(s(best->first, best->second))) best = {i, j};
        }
      if (!best) break;
      if (best->first != t) {
        s.swap_rows(t, best->first);
        left.swap_rows(t, best->first);
      }
      if (best->second != t) {
        s.swap_cols(t, best->second);
        right.swap_cols(t, best->second);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t).is_zero()) continue;
        Integer q = s(i, t) / s(t, t);
        add_row_multiple(s, i, t, -q);
        add_row_multiple(left, i, t, -q);
        if (!s(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j).is_zero()) continue;
        Integer q = s(t, j) / s(t, t);
        add_col_multiple(s, j, t, -q);
        add_col_multiple(right, j, t, -q);
        if (!s(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain on the remaining block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      add_row_multiple(s, t, *offender, 1);
      add_row_multiple(left, t, *offender, 1);
    }
    if (s(t, t).sign() < 0) {
      for (std::size_t j = 0; j < cols; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
    }
  }
  return SmithForm{std::move(s), std::move(left), std::move(right)};
}

}  // namespace latmink
