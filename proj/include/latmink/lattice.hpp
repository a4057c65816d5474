#pragma once

#include "latmink/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace latmink {

/// A point of Z^n. Ordering is lexicographic.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long long> coords);
  static LatticePoint zero(std::size_t dim) { return LatticePoint(std::vector<Integer>(dim)); }
  static LatticePoint unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Integer> coords() const { return coords_; }
  bool is_zero() const;

  LatticePoint operator-() const;
  LatticePoint& operator+=(const LatticePoint& o);
  LatticePoint& operator-=(const LatticePoint& o);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator*(const Integer& s, LatticePoint p);

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) = default;
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);

  /// "(x1,x2,...)"
  std::string str() const;

 private:
  std::vector<Integer> coords_;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

using RationalVector = std::vector<Rational>;

RationalVector to_rational(const LatticePoint& p);
/// Integral point if every coordinate is an integer.
std::optional<LatticePoint> to_lattice_point(const RationalVector& v);
std::string format_vector(const RationalVector& v);

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
LatticePoint operator*(const IntMatrix& a, const LatticePoint& x);
RationalVector operator*(const IntMatrix& a, const RationalVector& x);
RationalVector operator*(const RationalMatrix& a, const RationalVector& x);
RationalMatrix to_rational(const IntMatrix& a);
/// "[[a,b],[c,d]]"
std::string format_matrix(const IntMatrix& a);
/// Inverse of format_matrix; throws std::invalid_argument.
IntMatrix parse_matrix(std::string_view text);

/// A residue class of Z^n modulo m: representative entries lie in [0, m).
struct ResidueClass {
  Integer modulus;
  LatticePoint representative;
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
  friend auto operator<=>(const ResidueClass& a, const ResidueClass& b) {
    if (auto c = a.representative <=> b.representative; c != 0) return c;
    if (a.modulus < b.modulus) return std::strong_ordering::less;
    if (a.modulus > b.modulus) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// A finite set of lattice points of one dimension, kept sorted and deduplicated.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<LatticePoint> points);
  PointSet(std::initializer_list<LatticePoint> points)
      : PointSet(std::vector<LatticePoint>(points)) {}

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  /// Dimension of the points, 0 for the empty set.
  std::size_t dim() const { return points_.empty() ? 0 : points_.front().dim(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
  bool contains(const LatticePoint& p) const;

  PointSet translated(const LatticePoint& v) const;
  PointSet negated() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<LatticePoint> points_;
};

// --- congruences ------------------------------------------------------------

/// x - y lies in m Z^n. Throws std::invalid_argument on dimension mismatch or m < 2.
bool congruent(const LatticePoint& x, const LatticePoint& y, const Integer& m);
ResidueClass residue_class(const LatticePoint& x, const Integer& m);

// --- affine structure -------------------------------------------------------

std::size_t rank(const IntMatrix& a);
std::size_t rank(const RationalMatrix& a);
/// Rank of {u - u0 : u in U}. Throws std::invalid_argument on the empty set.
std::size_t affine_dim(const PointSet& u);
bool is_collinear(const PointSet& u);
std::size_t affine_dim(std::span<const RationalVector> points);
/// The vectors are linearly independent over Q.
bool linearly_independent(std::span<const LatticePoint> vectors);

// --- unimodular machinery ---------------------------------------------------

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);
Rational determinant(const RationalMatrix& a);
bool is_unimodular(const IntMatrix& a);
/// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);
/// Inverse over Q, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);
/// Unique solution of a x = b, or nullopt when a is singular.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

struct SmithForm {
  IntMatrix diagonal;  // S = left * A * right
  IntMatrix left;
  IntMatrix right;
  /// The nonzero diagonal entries, each dividing the next.
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace latmink
