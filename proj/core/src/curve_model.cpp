#include "lls/curve_model.hpp"

#include <algorithm>
#include <string>

#include "lls/delta.hpp"
#include "lls/error.hpp"

namespace lls {

CurveModel::CurveModel(int d) : d_(d) {
  if (d < 0) throw InvalidInput("curve model degree must be nonnegative");
}

std::size_t CurveModel::t_coord(int power) const {
  if (power < 0 || power > d_) throw InvalidInput("t power out of range");
  return static_cast<std::size_t>(power);
}

std::size_t CurveModel::s_coord(int power) const {
  if (power < 0 || power > d_) throw InvalidInput("s power out of range");
  return block_dim() + static_cast<std::size_t>(power);
}

namespace {

Subspace coordinate_span(std::size_t dim, int first, int last) {
  Matrix m(0, dim);
  for (int k = std::max(first, 0); k <= last; ++k) {
    Vector row(dim);
    row[static_cast<std::size_t>(k)] = 1;
    m.append_row(row);
  }
  return Subspace::span(m);
}

}  // namespace

Subspace CurveModel::y_flag(int k) const { return coordinate_span(block_dim(), k, d_); }

Subspace CurveModel::z_level(int j) const {
  if (j < 0) return Subspace::zero(block_dim());
  return coordinate_span(block_dim(), d_ - std::min(j, d_), d_);
}

SectionSpace section_space(const CurveModel& model, const Rational& index) {
  if (sgn(index) < 0 || index > model.degree()) {
    throw InvalidInput("section space index " + to_string(index) + " outside [0, " +
                       std::to_string(model.degree()) + "]");
  }
  // Rows are produced directly in reduced row-echelon order.
  const int d = model.degree();
  const bool integral = is_integer(index);
  const int y_first = integral ? static_cast<int>(floor_of(index)) + 1 : static_cast<int>(ceil_of(index));
  const int z_first = d - static_cast<int>(floor_of(index)) + (integral ? 1 : 0);
  Matrix rows((integral ? 1 : 0) + (d + 1 - y_first) + (d + 1 - z_first), model.ambient_dim());
  std::size_t next = 0;
  auto unit = [&](std::size_t coord) { rows(next++, coord) = 1; };
  if (integral) {
    // Kernel of (1, -1)τ^i: the glued section t^i + s^(d-i) plus the split
    // part vanishing at P.
    const int i = y_first - 1;
    rows(next, model.s_coord(d - i)) = 1;
    unit(model.t_coord(i));
  }
  for (int k = y_first; k <= d; ++k) unit(model.t_coord(k));
  for (int k = z_first; k <= d; ++k) unit(model.s_coord(k));
  return {index, Subspace::from_rref(std::move(rows))};
}

Subspace twisted_space_at(const CurveModel& model, const Rational& index, const Rational& x) {
  return act(model.split(), x, section_space(model, index).subspace);
}

bool is_generalized_linear_series(const CurveModel& model, const Subspace& v,
                                  const Rational& index, int expected_r) {
  if (expected_r < 0) return false;
  if (v.ambient_dim() != model.ambient_dim()) return false;
  if (v.dim() != static_cast<std::size_t>(expected_r) + 1) return false;
  return section_space(model, index).subspace.contains(v);
}

}  // namespace lls
