#include "lls/torus.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "lls/error.hpp"

namespace lls {
namespace {

void require_ambient(const TorusSplit& split, const Subspace& v) {
  if (v.ambient_dim() != split.ambient()) {
    throw DimensionMismatch("subspace of ambient dimension " + std::to_string(v.ambient_dim()) +
                            " does not live in W1 ⊕ W2 of dimension " +
                            std::to_string(split.ambient()));
  }
}

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out(to - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

// Rows of an RREF basis whose pivot lies at or beyond `first_column` vanish on
// all earlier columns, so they span V ∩ (span of later coordinates).
Subspace tail_intersection(const Matrix& reduced, const std::vector<std::size_t>& pivots,
                           std::size_t first_column, std::span<const std::size_t> tail_columns) {
  Matrix rows(0, tail_columns.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] < first_column) continue;
    Vector v(tail_columns.size());
    for (std::size_t j = 0; j < tail_columns.size(); ++j) v[j] = reduced(r, first_column + j);
    rows.append_row(v);
  }
  return Subspace::span(rows);
}

}  // namespace

TorusSplit::TorusSplit(std::size_t dim1, std::size_t dim2) : dim1_(dim1), dim2_(dim2) {
  if (dim1 + dim2 == 0) throw InvalidInput("torus split of a zero-dimensional space");
}

Subspace project_first(const TorusSplit& split, const Subspace& v) {
  require_ambient(split, v);
  auto cols = iota(0, split.dim1());
  return Subspace::span(v.basis().select_columns(cols));
}

Subspace project_second(const TorusSplit& split, const Subspace& v) {
  require_ambient(split, v);
  auto cols = iota(split.dim1(), split.ambient());
  return Subspace::span(v.basis().select_columns(cols));
}

Subspace embed_first(const TorusSplit& split, const Subspace& in_w1) {
  return direct_sum(split, in_w1, Subspace::zero(split.dim2()));
}

Subspace embed_second(const TorusSplit& split, const Subspace& in_w2) {
  return direct_sum(split, Subspace::zero(split.dim1()), in_w2);
}

Subspace direct_sum(const TorusSplit& split, const Subspace& in_w1, const Subspace& in_w2) {
  if (in_w1.ambient_dim() != split.dim1() || in_w2.ambient_dim() != split.dim2())
    throw DimensionMismatch("direct_sum: block dimensions do not match the split");
  Matrix m(0, split.ambient());
  for (std::size_t r = 0; r < in_w1.dim(); ++r) {
    Vector row(split.ambient());
    for (std::size_t j = 0; j < split.dim1(); ++j) row[j] = in_w1.basis()(r, j);
    m.append_row(row);
  }
  for (std::size_t r = 0; r < in_w2.dim(); ++r) {
    Vector row(split.ambient());
    for (std::size_t j = 0; j < split.dim2(); ++j) row[split.dim1() + j] = in_w2.basis()(r, j);
    m.append_row(row);
  }
  return Subspace::span(m);
}

Subspace act(const TorusSplit& split, const Rational& x, const Subspace& v) {
  require_ambient(split, v);
  if (sgn(x) == 0) throw InvalidInput("torus action by x = 0");
  Matrix m = v.basis();
  const Rational inv = 1 / x;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < split.dim1(); ++c) m(r, c) *= inv;
  return Subspace::span(m);
}

BlockProfile block_profile(const TorusSplit& split, const Subspace& v) {
  require_ambient(split, v);
  const auto w1_cols = iota(0, split.dim1());
  const auto w2_cols = iota(split.dim1(), split.ambient());

  // V ∩ W2 from the canonical basis directly.
  Subspace iota2 = tail_intersection(v.basis(), v.pivots(), split.dim1(), w2_cols);

  // V ∩ W1 after moving the W2 coordinates to the front.
  std::vector<std::size_t> reordered = w2_cols;
  reordered.insert(reordered.end(), w1_cols.begin(), w1_cols.end());
  Echelon swapped = row_reduce(v.basis().select_columns(reordered));
  Subspace iota1 = tail_intersection(swapped.reduced, swapped.pivots, split.dim2(), w1_cols);

  return BlockProfile{std::move(iota1), std::move(iota2), project_first(split, v),
                      project_second(split, v)};
}

bool is_fixed(const TorusSplit& split, const Subspace& v) {
  BlockProfile p = block_profile(split, v);
  return p.iota1_inv.dim() == p.rho1.dim();
}

Subspace limit(const TorusSplit& split, const Subspace& v, LimitDirection direction) {
  BlockProfile p = block_profile(split, v);
  if (direction == LimitDirection::Zero) return direct_sum(split, p.rho1, p.iota2_inv);
  return direct_sum(split, p.iota1_inv, p.rho2);
}

std::size_t orbit_degree(const TorusSplit& split, const Subspace& v) {
  BlockProfile p = block_profile(split, v);
  return p.rho1.dim() - p.iota1_inv.dim();
}

std::size_t first_block_weight(const TorusSplit& split, const ColumnSet& columns) {
  return static_cast<std::size_t>(
      std::count_if(columns.begin(), columns.end(),
                    [&](std::size_t c) { return split.in_first_block(c); }));
}

std::set<std::pair<std::size_t, std::size_t>> orbit_weight_profile(const TorusSplit& split,
                                                                   const Subspace& v) {
  require_ambient(split, v);
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [columns, value] : pluecker(v)) {
    if (sgn(value) == 0) continue;
    std::size_t w1 = first_block_weight(split, columns);
    out.emplace(w1, columns.size() - w1);
  }
  return out;
}

std::optional<Subspace> orbit_intersection(const TorusSplit& split, const Subspace& v,
                                           const Subspace& w) {
  require_ambient(split, v);
  require_ambient(split, w);
  if (v.dim() != w.dim()) throw InvalidInput("orbit_intersection: dimensions differ");
  BlockProfile pv = block_profile(split, v);
  BlockProfile pw = block_profile(split, w);
  if (pv.iota1_inv.dim() == pv.rho1.dim() || pw.iota1_inv.dim() == pw.rho1.dim())
    throw InvalidInput("orbit_intersection: both points must be nonfixed");

  const bool first_hypothesis = pw.rho1 == pv.iota1_inv;
  const bool second_hypothesis = pw.rho2 == pv.iota2_inv;
  if (!first_hypothesis && !second_hypothesis) {
    throw HypothesisViolation(
        "orbit_intersection requires rho1(w) = iota1^-1(v) or rho2(w) = iota2^-1(v)");
  }
  // Under the first hypothesis the only candidate is the ∞ end of v, under the
  // second the 0 end of v.
  if (first_hypothesis && pv.rho2 == pw.iota2_inv) return direct_sum(split, pv.iota1_inv, pv.rho2);
  if (second_hypothesis && pv.rho1 == pw.iota1_inv) return direct_sum(split, pv.rho1, pv.iota2_inv);
  return std::nullopt;
}

PlueckerVector weight_slice(const TorusSplit& split, const PlueckerVector& coords,
                            std::size_t weight) {
  PlueckerVector out;
  for (const auto& [columns, value] : coords)
    if (first_block_weight(split, columns) == weight) out.emplace(columns, value);
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> weight_range(const TorusSplit& split,
                                                 const PlueckerVector& coords) {
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = 0;
  for (const auto& [columns, value] : coords) {
    if (sgn(value) == 0) continue;
    std::size_t w = first_block_weight(split, columns);
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  return {lo, hi};
}

}  // namespace

PlueckerVector end_point_term(const TorusSplit& split, const Subspace& v,
                              LimitDirection direction) {
  require_ambient(split, v);
  PlueckerVector coords = pluecker(v);
  auto [lo, hi] = weight_range(split, coords);
  return weight_slice(split, coords, direction == LimitDirection::Infinity ? lo : hi);
}

PlueckerVector first_order_term(const TorusSplit& split, const Subspace& v,
                                LimitDirection direction) {
  require_ambient(split, v);
  PlueckerVector coords = pluecker(v);
  auto [lo, hi] = weight_range(split, coords);
  if (direction == LimitDirection::Infinity) return weight_slice(split, coords, lo + 1);
  if (hi == 0) return {};
  return weight_slice(split, coords, hi - 1);
}

bool proportional(const PlueckerVector& a, const PlueckerVector& b) {
  std::optional<Rational> ratio;
  auto value_at = [](const PlueckerVector& p, const ColumnSet& key) -> Rational {
    auto it = p.find(key);
    return it == p.end() ? Rational(0) : it->second;
  };
  std::set<ColumnSet> keys;
  for (const auto& [k, value] : a) keys.insert(k);
  for (const auto& [k, value] : b) keys.insert(k);
  for (const auto& key : keys) {
    Rational x = value_at(a, key);
    Rational y = value_at(b, key);
    if (sgn(x) == 0 && sgn(y) == 0) continue;
    if (sgn(x) == 0 || sgn(y) == 0) return false;
    Rational q = y / x;
    if (!ratio) ratio = q;
    else if (*ratio != q) return false;
  }
  return ratio.has_value();
}

std::size_t pluecker_rank(const std::vector<PlueckerVector>& vectors) {
  std::map<ColumnSet, std::size_t> column_of;
  for (const auto& v : vectors)
    for (const auto& [key, value] : v) column_of.emplace(key, 0);
  std::size_t next = 0;
  for (auto& [key, column] : column_of) column = next++;
  Matrix m(0, column_of.size());
  for (const auto& v : vectors) {
    Vector row(column_of.size());
    for (const auto& [key, value] : v) row[column_of.at(key)] = value;
    m.append_row(row);
  }
  return rank(m);
}

TangentCertificate tangent_certificate(const TorusSplit& split, const Subspace& arriving,
                                       const Subspace& leaving) {
  TangentCertificate cert;
  Subspace point = limit(split, arriving, LimitDirection::Infinity);
  cert.ends_agree = point == limit(split, leaving, LimitDirection::Zero);
  PlueckerVector point_coords = pluecker(point);
  cert.point_matches_terms =
      proportional(end_point_term(split, arriving, LimitDirection::Infinity), point_coords) &&
      proportional(end_point_term(split, leaving, LimitDirection::Zero), point_coords);

  PlueckerVector t_in = first_order_term(split, arriving, LimitDirection::Infinity);
  PlueckerVector t_out = first_order_term(split, leaving, LimitDirection::Zero);
  auto nonzero = [](const PlueckerVector& p) {
    return std::any_of(p.begin(), p.end(), [](const auto& kv) { return sgn(kv.second) != 0; });
  };
  cert.arriving_tangent_nonzero = nonzero(t_in);
  cert.leaving_tangent_nonzero = nonzero(t_out);
  cert.independent = pluecker_rank({point_coords, t_in, t_out}) == 3;
  return cert;
}

}  // namespace lls
