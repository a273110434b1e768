#include "lls/linalg.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "lls/error.hpp"

namespace lls {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty rational literal");
  auto slash = text.find('/');
  auto valid_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                          : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw InvalidInput("malformed rational: " + std::string(text));
  }
  mpz_class p(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class q{std::string(den)};
  if (q == 0) throw InvalidInput("zero denominator: " + std::string(text));
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational c = value;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(0, cols);
  m.entries_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto view = row(r);
  return Vector(view.begin(), view.end());
}

void Matrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) {
    throw DimensionMismatch("row of length " + std::to_string(values.size()) +
                            " appended to matrix with " + std::to_string(cols_) +
                            " columns");
  }
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix m(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) m(r, j) = (*this)(r, columns[j]);
  return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix m(0, cols_);
  for (auto r : rows) m.append_row(row(r));
  return m;
}

Echelon row_reduce(Matrix m) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t j = c; j < cols; ++j) swap(m(pivot, j), m(lead, j));
    if (m(lead, c) != 1) {
      Rational inv = 1 / m(lead, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(lead, j)) != 0) m(lead, j) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      Rational factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(lead, j)) != 0) m(r, j) -= factor * m(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

Matrix rref(const Matrix& m) { return row_reduce(m).reduced; }

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Rational determinant(Matrix a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(a(pivot, c)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = c; j < n; ++j) swap(a(pivot, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      Rational factor = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= factor * a(c, j);
    }
  }
  return det;
}

Matrix kernel(const Matrix& m) {
  Echelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis(0, cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.append_row(v);
  }
  return rref(basis);
}

Subspace::Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix(0, ambient_dim), {});
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(ambient_dim, Matrix::identity(ambient_dim), std::move(pivots));
}

Subspace Subspace::span(const Matrix& generators) {
  Echelon e = row_reduce(generators);
  std::vector<std::size_t> keep(e.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return Subspace(generators.cols(), e.reduced.select_rows(keep), std::move(e.pivots));
}

Subspace Subspace::from_rref(Matrix basis) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::size_t c = pivots.empty() ? 0 : pivots.back() + 1;
    while (c < basis.cols() && sgn(basis(r, c)) == 0) ++c;
    if (c == basis.cols() || basis(r, c) != 1) throw InvalidInput("from_rref: not in reduced row-echelon form");
    for (std::size_t j = 0; j < c; ++j)
      if (sgn(basis(r, j)) != 0) throw InvalidInput("from_rref: not in reduced row-echelon form");
    for (std::size_t other = 0; other < basis.rows(); ++other)
      if (other != r && sgn(basis(other, c)) != 0)
        throw InvalidInput("from_rref: not in reduced row-echelon form");
    pivots.push_back(c);
  }
  const std::size_t ambient = basis.cols();
  return Subspace(ambient, std::move(basis), std::move(pivots));
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient");
  Vector rest(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Rational coeff = rest[pivots_[r]];
    if (sgn(coeff) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(basis_(r, j)) != 0) rest[j] -= coeff * basis_(r, j);
  }
  return std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace subspace_from_spanning(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return Subspace::span(Matrix::from_rows(ambient_dim, vectors));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
  Matrix stacked = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) stacked.append_row(b.basis().row(r));
  return Subspace::span(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("intersect: ambient dimensions differ");
  // a ∩ b = ann(ann(a) + ann(b)), annihilators taken under the standard pairing.
  Matrix annihilators = kernel(a.basis());
  Matrix ann_b = kernel(b.basis());
  for (std::size_t r = 0; r < ann_b.rows(); ++r) annihilators.append_row(ann_b.row(r));
  if (annihilators.rows() == 0) return Subspace::full(a.ambient_dim());
  return Subspace::span(kernel(annihilators));
}

PlueckerVector pluecker(const Subspace& v) {
  PlueckerVector out;
  const Matrix& basis = v.basis();
  std::optional<Rational> scale;
  for_each_column_set(v.ambient_dim(), v.dim(), [&](const ColumnSet& columns) {
    Rational minor = determinant(basis.select_columns(columns));
    if (!scale && sgn(minor) != 0) scale = 1 / minor;
    out.emplace(columns, std::move(minor));
  });
  if (scale)
    for (auto& [columns, value] : out) value *= *scale;
  return out;
}

}  // namespace lls
