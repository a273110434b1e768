#include "lls/linked_series.hpp"

#include <map>
#include <string>

#include "lls/error.hpp"
#include "lls/torus.hpp"

namespace lls {

void LimitLinearSeries::validate_shape() const {
  if (delta.degree() != model.degree())
    throw InvalidInput("delta is for degree " + std::to_string(delta.degree()) +
                       " but the model has degree " + std::to_string(model.degree()));
  if (r < 0) throw InvalidInput("rank r must be nonnegative");
  if (spaces.size() != delta.size())
    throw InvalidInput("expected " + std::to_string(delta.size()) + " spaces, got " +
                       std::to_string(spaces.size()));
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    if (spaces[k].ambient_dim() != model.ambient_dim())
      throw DimensionMismatch("space at index " + to_string(delta[k]) +
                              " has the wrong ambient dimension");
    if (spaces[k].dim() != static_cast<std::size_t>(r) + 1)
      throw DimensionMismatch("space at index " + to_string(delta[k]) + " has dimension " +
                              std::to_string(spaces[k].dim()) + ", expected r + 1 = " +
                              std::to_string(r + 1));
  }
}

std::string pair_label(const DeltaSet& delta, std::size_t left) {
  return "(" + to_string(delta[left]) + "," + to_string(delta[left + 1]) + ")";
}

namespace {

std::vector<PairReport> pair_reports(const LimitLinearSeries& g) {
  g.validate_shape();
  const TorusSplit split = g.model.split();
  std::vector<BlockProfile> profiles;
  profiles.reserve(g.spaces.size());
  for (const auto& v : g.spaces) profiles.push_back(block_profile(split, v));

  std::vector<PairReport> out;
  for (std::size_t k = 0; k + 1 < profiles.size(); ++k) {
    const BlockProfile& left = profiles[k];
    const BlockProfile& right = profiles[k + 1];
    PairReport p;
    p.left = k;
    p.right = k + 1;
    p.rho2_left_dim = left.rho2.dim();
    p.iota2_right_dim = right.iota2_inv.dim();
    p.z_side_holds = right.iota2_inv.contains(left.rho2);
    p.rho1_right_dim = right.rho1.dim();
    p.iota1_left_dim = left.iota1_inv.dim();
    p.y_side_holds = left.iota1_inv.contains(right.rho1);
    out.push_back(p);
  }
  return out;
}

}  // namespace

SeriesReport check_compatible(const LimitLinearSeries& g) {
  SeriesReport report;
  for (const auto& p : pair_reports(g)) {
    if (p.z_side_holds && p.y_side_holds) continue;
    report.holds = false;
    report.failures.push_back(p);
  }
  return report;
}

SeriesReport check_exact(const LimitLinearSeries& g) {
  SeriesReport report;
  for (auto p : pair_reports(g)) {
    // Given the inclusions, equality is equality of dimensions.
    p.z_side_holds = p.z_side_holds && p.rho2_left_dim == p.iota2_right_dim;
    p.y_side_holds = p.y_side_holds && p.rho1_right_dim == p.iota1_left_dim;
    if (p.z_side_holds && p.y_side_holds) continue;
    report.holds = false;
    report.failures.push_back(p);
  }
  return report;
}

std::vector<std::size_t> membership_failures(const LimitLinearSeries& g) {
  g.validate_shape();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < g.spaces.size(); ++k)
    if (!is_generalized_linear_series(g.model, g.spaces[k], g.delta[k], g.r)) out.push_back(k);
  return out;
}

NumericalData numerical_data(const LimitLinearSeries& g) {
  g.validate_shape();
  const TorusSplit split = g.model.split();
  NumericalData data;
  data.reserve(g.spaces.size());
  for (const auto& v : g.spaces) {
    BlockProfile p = block_profile(split, v);
    NumericalEntry e;
    e.p = static_cast<int>(p.iota2_inv.dim());
    e.q = static_cast<int>(p.iota1_inv.dim());
    e.m = g.r + 1 - e.p - e.q;
    data.push_back(e);
  }
  return data;
}

bool is_exact_via_sum(const NumericalData& data, int r) {
  int total = 0;
  for (const auto& e : data) total += e.m;
  return total == r + 1;
}

bool is_minimal(const NumericalData& data, const DeltaSet& delta) {
  if (data.size() != delta.size()) throw DimensionMismatch("numerical data does not cover delta");
  for (std::size_t k = 0; k < data.size(); ++k)
    if (!delta.is_integer_position(k) && data[k].m <= 0) return false;
  return true;
}

namespace {

void require_exact(const LimitLinearSeries& g, const char* operation) {
  SeriesReport compatible = check_compatible(g);
  if (!compatible.holds)
    throw ValidationFailure(std::string(operation) + ": series is not compatible at pair " +
                            pair_label(g.delta, compatible.failures.front().left));
  SeriesReport exact = check_exact(g);
  if (!exact.holds)
    throw ValidationFailure(std::string(operation) + ": series is not exact at pair " +
                            pair_label(g.delta, exact.failures.front().left));
}

}  // namespace

LimitLinearSeries reduce_minimal(const LimitLinearSeries& g) {
  require_exact(g, "reduce_minimal");
  Reindexing reindex = support_subset(g.delta, numerical_data(g));
  LimitLinearSeries out{g.model, g.r, DeltaSet(g.delta.degree(), reindex.delta), {}};
  for (auto k : reindex.to_original) out.spaces.push_back(g.spaces[k]);
  return out;
}

LimitLinearSeries act_on_series(const LimitLinearSeries& g, const std::vector<Rational>& scalars) {
  g.validate_shape();
  if (scalars.size() != g.spaces.size())
    throw DimensionMismatch("one scalar per index of delta is required");
  LimitLinearSeries out = g;
  const TorusSplit split = g.model.split();
  for (std::size_t k = 0; k < out.spaces.size(); ++k)
    if (!g.delta.is_integer_position(k)) out.spaces[k] = act(split, scalars[k], g.spaces[k]);
  return out;
}

namespace {

// c with act(split, c, a) == b, if any.
std::optional<Rational> scaling_between(const TorusSplit& split, const Subspace& a,
                                        const Subspace& b) {
  if (a == b) return Rational(1);
  if (a.dim() != b.dim() || is_fixed(split, a)) return std::nullopt;
  PlueckerVector pa = pluecker(a);
  PlueckerVector pb = pluecker(b);
  // x∗ scales the minor p_I by x^(-w(I)), w(I) the number of W1 columns.
  std::map<std::size_t, Rational> ratio_by_weight;
  for (const auto& [columns, value] : pa) {
    const Rational& other = pb.at(columns);
    if ((sgn(value) == 0) != (sgn(other) == 0)) return std::nullopt;
    if (sgn(value) == 0) continue;
    ratio_by_weight.emplace(first_block_weight(split, columns), other / value);
  }
  for (const auto& [weight, ratio] : ratio_by_weight) {
    auto next = ratio_by_weight.find(weight + 1);
    if (next == ratio_by_weight.end()) continue;
    Rational c = ratio / next->second;
    if (sgn(c) != 0 && act(split, c, a) == b) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Rational>> torus_equivalence_witness(const LimitLinearSeries& a,
                                                               const LimitLinearSeries& b) {
  a.validate_shape();
  b.validate_shape();
  if (!(a.model == b.model) || a.r != b.r || !(a.delta == b.delta)) return std::nullopt;
  const TorusSplit split = a.model.split();
  std::vector<Rational> witness(a.spaces.size(), Rational(1));
  for (std::size_t k = 0; k < a.spaces.size(); ++k) {
    if (a.delta.is_integer_position(k)) {
      if (!(a.spaces[k] == b.spaces[k])) return std::nullopt;
      continue;
    }
    auto c = scaling_between(split, a.spaces[k], b.spaces[k]);
    if (!c) return std::nullopt;
    witness[k] = *c;
  }
  return witness;
}

bool torus_equivalent(const LimitLinearSeries& a, const LimitLinearSeries& b) {
  return torus_equivalence_witness(a, b).has_value();
}

LimitLinearSeries project_level_one(const LimitLinearSeries& g) {
  require_exact(g, "project_level_one");
  const int d = g.delta.degree();
  LimitLinearSeries out{g.model, g.r, DeltaSet(d, std::vector<int>(static_cast<std::size_t>(d), 1)), {}};
  for (int k = 0; k <= d; ++k) out.spaces.push_back(g.spaces[g.delta.position_of_integer(k)]);
  return out;
}

}  // namespace lls
