#pragma once

// Exact linear algebra over the rationals: matrices, reduced row-echelon
// forms, canonical subspaces and Pluecker coordinates.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lls {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p" into a canonical rational. Throws InvalidInput on a
/// malformed string or a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  /// Builds a matrix from row vectors, each of which must have length `cols`.
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;

  void append_row(std::span<const Rational> values);
  Matrix transposed() const;
  Matrix select_columns(std::span<const std::size_t> columns) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;

  const std::vector<Rational>& entries() const noexcept { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct Echelon {
  Matrix reduced;                    // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
Echelon row_reduce(Matrix m);

/// The reduced row-echelon form of `m`. Zero rows are kept at the bottom.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Determinant of a square matrix by elimination.
Rational determinant(Matrix square);

/// Rows form a basis (in RREF) of the right kernel {x : m x = 0}.
Matrix kernel(const Matrix& m);

/// A linear subspace of Q^n stored by its canonical RREF basis. Two spans
/// are equal iff their Subspace values compare equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the rows of `generators`.
  static Subspace span(const Matrix& generators);
  /// Takes `basis` as the canonical form without reducing it. Throws
  /// InvalidInput unless it is in reduced row-echelon form with no zero rows.
  static Subspace from_rref(Matrix basis);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return basis_.rows() == 0; }

  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots);

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_from_spanning(std::size_t ambient_dim, const std::vector<Vector>& vectors);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Sorted column indices of a maximal minor.
using ColumnSet = std::vector<std::size_t>;
using PlueckerVector = std::map<ColumnSet, Rational>;

/// All dim(v) x dim(v) minors of the canonical basis, over every column set
/// in lexicographic order, scaled so the first nonzero minor is 1.
PlueckerVector pluecker(const Subspace& v);

/// Calls fn(ColumnSet) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_column_set(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  ColumnSet set(k);
  for (std::size_t i = 0; i < k; ++i) set[i] = i;
  while (true) {
    fn(static_cast<const ColumnSet&>(set));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && set[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++set[i - 1];
    for (std::size_t j = i; j < k; ++j) set[j] = set[j - 1] + 1;
  }
}

}  // namespace lls
