#include "lls/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "lls/curve_model.hpp"

namespace lls::oracle {
namespace {

using Columns = std::vector<std::size_t>;

// Fraction-free (Bareiss) determinant.
Rational bareiss_determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Rational sign = 1;
  Rational previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(a[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::size_t start, Columns& current,
             std::vector<Columns>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t c = start; c + (k - current.size()) <= n; ++c) {
    current.push_back(c);
    subsets(n, k, c + 1, current, out);
    current.pop_back();
  }
}

// Nonzero maximal minors of the basis matrix, keyed by column set.
std::map<Columns, Rational> nonzero_minors(const Subspace& v) {
  std::map<Columns, Rational> out;
  std::vector<Columns> all;
  Columns scratch;
  subsets(v.ambient_dim(), v.dim(), 0, scratch, all);
  for (const auto& cols : all) {
    std::vector<std::vector<Rational>> square(v.dim(), std::vector<Rational>(v.dim()));
    for (std::size_t r = 0; r < v.dim(); ++r)
      for (std::size_t j = 0; j < cols.size(); ++j) square[r][j] = v.basis()(r, cols[j]);
    Rational det = bareiss_determinant(std::move(square));
    if (sgn(det) != 0) out.emplace(cols, det);
  }
  return out;
}

std::size_t w1_count(const TorusSplit& split, const Columns& cols) {
  std::size_t n = 0;
  for (auto c : cols) n += c < split.dim1() ? 1 : 0;
  return n;
}

// Coordinate of an arbitrary ordered column tuple: sort with sign, 0 on
// repeated columns or when the sorted set is absent.
Rational tuple_coordinate(const std::map<Columns, Rational>& coords, Columns tuple) {
  int sign = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = 0; j + 1 < tuple.size() - i; ++j)
      if (tuple[j] > tuple[j + 1]) {
        std::swap(tuple[j], tuple[j + 1]);
        sign = -sign;
      }
  for (std::size_t j = 0; j + 1 < tuple.size(); ++j)
    if (tuple[j] == tuple[j + 1]) return 0;
  auto it = coords.find(tuple);
  if (it == coords.end()) return 0;
  return sign * it->second;
}

// The decomposable vector with the given nonzero coordinates, as a subspace.
Subspace reconstruct(std::size_t ambient, std::size_t dim,
                     const std::map<Columns, Rational>& coords) {
  const auto& [pivot_set, pivot_value] = *coords.begin();
  Matrix rows(0, ambient);
  for (std::size_t a = 0; a < dim; ++a) {
    Vector row(ambient);
    for (std::size_t c = 0; c < ambient; ++c) {
      Columns tuple = pivot_set;
      tuple[a] = c;
      row[c] = tuple_coordinate(coords, tuple) / pivot_value;
    }
    rows.append_row(row);
  }
  return Subspace::span(rows);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

// Pairwise distinct nonzero rationals.
std::vector<Rational> distinct_scalars(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Rational> out;
  std::set<std::pair<std::string, std::string>> seen;
  while (out.size() < count) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    if (sgn(x) == 0) continue;
    if (!seen.emplace(x.get_num().get_str(), x.get_den().get_str()).second) continue;
    out.push_back(x);
  }
  return out;
}

}  // namespace

Subspace limit_via_pluecker(const TorusSplit& split, const Subspace& v, LimitDirection direction) {
  if (v.dim() == 0) return v;
  auto minors = nonzero_minors(v);
  std::size_t extreme = direction == LimitDirection::Zero ? 0 : v.dim();
  for (const auto& [cols, value] : minors) {
    std::size_t w = w1_count(split, cols);
    extreme = direction == LimitDirection::Zero ? std::max(extreme, w) : std::min(extreme, w);
  }
  std::map<Columns, Rational> surviving;
  for (const auto& [cols, value] : minors)
    if (w1_count(split, cols) == extreme) surviving.emplace(cols, value);
  return reconstruct(v.ambient_dim(), v.dim(), surviving);
}

std::size_t degree_via_pluecker(const TorusSplit& split, const Subspace& v) {
  if (v.dim() == 0) return 0;
  std::size_t lo = v.dim();
  std::size_t hi = 0;
  for (const auto& [cols, value] : nonzero_minors(v)) {
    std::size_t w = w1_count(split, cols);
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  return hi - lo;
}

SampleReport sample_orbit_check(const ContinuousChain& chain, std::size_t samples_per_component,
                                std::uint64_t seed) {
  SampleReport report;
  const TorusSplit split = chain.model.split();
  for (std::size_t k = 0; k < chain.components.size(); ++k) {
    const ChainComponent& c = chain.components[k];
    auto rng = make_stream(seed, k);
    std::vector<Subspace> points;
    for (const Rational& x : distinct_scalars(samples_per_component, rng)) {
      Subspace point = act(split, x, c.base_space);
      ++report.points_checked;
      if (!twisted_space_at(chain.model, c.index, x).contains(point)) {
        report.passed = false;
        report.failures.push_back("component " + to_string(c.index) + ": point at x = " +
                                  to_string(x) + " leaves the twisted section space");
      }
      points.push_back(std::move(point));
    }
    if (c.kind == ComponentKind::Fixed) {
      for (const auto& p : points) {
        if (!(p == c.base_space)) {
          report.passed = false;
          report.failures.push_back("fixed component " + to_string(c.index) + " moves");
          break;
        }
      }
    } else {
      for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b)
          if (points[a] == points[b]) {
            report.passed = false;
            report.failures.push_back("orbit component " + to_string(c.index) +
                                      " repeats a point");
            a = points.size();
            break;
          }
    }
  }
  return report;
}

std::vector<Subspace> common_orbit_points(const TorusSplit& split, const Subspace& v,
                                          const Subspace& w, std::size_t samples,
                                          std::uint64_t seed) {
  auto closure_sample = [&](const Subspace& base, std::uint64_t stream) {
    auto rng = make_stream(seed, stream);
    std::vector<Subspace> pts;
    for (const Rational& x : distinct_scalars(samples, rng)) pts.push_back(act(split, x, base));
    pts.push_back(limit_via_pluecker(split, base, LimitDirection::Zero));
    pts.push_back(limit_via_pluecker(split, base, LimitDirection::Infinity));
    return pts;
  };
  auto first = closure_sample(v, 0);
  auto second = closure_sample(w, 1);
  std::vector<Subspace> common;
  for (const auto& p : first) {
    if (std::find(second.begin(), second.end(), p) == second.end()) continue;
    if (std::find(common.begin(), common.end(), p) == common.end()) common.push_back(p);
  }
  return common;
}

}  // namespace lls::oracle
