#include "lls/generator.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "lls/curve_model.hpp"
#include "lls/delta.hpp"
#include "lls/error.hpp"

namespace lls::gen {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Vector embed(std::size_t ambient, std::size_t offset, const Vector& local) {
  Vector out(ambient);
  for (std::size_t j = 0; j < local.size(); ++j) out[offset + j] = local[j];
  return out;
}

Vector row_of(const Matrix& m, std::size_t r) {
  Vector v(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) v[c] = m(r, c);
  return v;
}

// Basis of a complement of sub inside super.
std::vector<Vector> complement(const Subspace& sub, const Subspace& super) {
  std::vector<Vector> out;
  Subspace current = sub;
  for (std::size_t r = 0; r < super.dim(); ++r) {
    Vector v = row_of(super.basis(), r);
    if (current.contains(v)) continue;
    current = sum(current, subspace_from_spanning(super.ambient_dim(), {v}));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Rational>> random_invertible(std::size_t n, Rng& rng, bool unit_first_column) {
  for (;;) {
    Matrix z(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) z(a, b) = random_rational(rng);
    if (unit_first_column && n > 0)
      for (std::size_t a = 0; a < n; ++a) z(a, 0) = a == 0 ? 1 : 0;
    if (sgn(determinant(z)) == 0) continue;
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) out[a][b] = z(a, b);
    return out;
  }
}

Subspace random_full_rank(std::size_t rows, std::size_t cols, double density, Rng& rng) {
  std::bernoulli_distribution keep(density);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix m(rows, cols);
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = 0; b < cols; ++b)
        if (keep(rng)) m(a, b) = random_nonzero_rational(rng);
    Subspace s = Subspace::span(m);
    if (s.dim() == rows) return s;
  }
  return random_between(Subspace::zero(cols), Subspace::full(cols), rows, rng);
}

struct SlotShape {
  bool integral = false;
  int index_floor = 0;
  int rho1_max = 0;  // largest possible dim ρ1 inside the section space
  int rho2_max = 0;
  int y_low = 0;     // ρ1 ⊆ t^{≥ y_low}
  int z_low = 0;     // ρ2 ⊆ s^{≥ z_low}
};

std::vector<SlotShape> slot_shapes(const DeltaSet& set) {
  const int d = set.degree();
  std::vector<SlotShape> out;
  for (const Rational& i : set.indices()) {
    SlotShape s;
    s.integral = is_integer(i);
    s.index_floor = static_cast<int>(floor_of(i));
    const int c = static_cast<int>(ceil_of(i));
    s.y_low = c;
    s.z_low = d - s.index_floor;
    s.rho1_max = d + 1 - c;
    s.rho2_max = s.integral ? s.index_floor + 1 : c;
    out.push_back(s);
  }
  return out;
}

// Feasibility of completing a profile from position k with a = Σ_{l≥k} m_l.
class ProfileSearch {
 public:
  ProfileSearch(std::vector<SlotShape> shapes, int r) : shapes_(std::move(shapes)), r_(r) {}

  bool feasible(std::size_t k, int a) {
    if (k == shapes_.size()) return a == 0;
    if (a > shapes_[k].rho1_max) return false;
    auto key = std::make_pair(k, a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    for (int m : candidates(k, a))
      if (feasible(k + 1, a - m)) {
        ok = true;
        break;
      }
    memo_[key] = ok;
    return ok;
  }

  std::vector<int> candidates(std::size_t k, int a) const {
    std::vector<int> out;
    const int lo = shapes_[k].integral ? 0 : 1;
    for (int m = lo; m <= a; ++m)
      if (r_ + 1 - (a - m) <= shapes_[k].rho2_max) out.push_back(m);
    return out;
  }

  std::optional<std::vector<int>> draw(Rng& rng) {
    if (!feasible(0, r_ + 1)) return std::nullopt;
    std::vector<int> m;
    int a = r_ + 1;
    for (std::size_t k = 0; k < shapes_.size(); ++k) {
      auto options = candidates(k, a);
      std::shuffle(options.begin(), options.end(), rng);
      for (int choice : options)
        if (feasible(k + 1, a - choice)) {
          m.push_back(choice);
          a -= choice;
          break;
        }
    }
    return m;
  }

 private:
  std::vector<SlotShape> shapes_;
  int r_;
  std::map<std::pair<std::size_t, int>, bool> memo_;
};

// m vectors of `pool` independent modulo `base`. With `anchor` set, the first
// has coordinate anchor equal to 1 and the rest have it equal to 0.
std::vector<Vector> extension_block(const Subspace& base, const Subspace& pool, std::size_t m,
                                    std::optional<std::size_t> anchor, Rng& rng) {
  std::vector<Vector> out;
  Subspace current = base;
  auto push = [&](Vector v) {
    current = sum(current, subspace_from_spanning(current.ambient_dim(), {v}));
    out.push_back(std::move(v));
  };
  if (anchor && m > 0) {
    Vector v = random_vector_in(pool, rng);
    v[*anchor] = 1;
    push(std::move(v));
  }
  int attempts = 0;
  while (out.size() < m) {
    Vector v = random_vector_in(pool, rng);
    if (anchor) v[*anchor] = 0;
    if (!current.contains(v)) {
      push(std::move(v));
    } else if (++attempts > 64) {
      for (const Vector& c : complement(current, pool)) {
        if (out.size() == m) break;
        Vector w = c;
        if (anchor) w[*anchor] = 0;
        if (!current.contains(w)) push(std::move(w));
      }
      break;
    }
  }
  if (out.size() != m) throw ValidationFailure("extension block does not fit its pool");
  return out;
}

std::optional<LimitLinearSeries> realize_profile(int d, int r, const DeltaSet& set,
                                                 const std::vector<int>& m, Rng& rng) {
  CurveModel model(d);
  const auto shapes = slot_shapes(set);
  const std::size_t n = shapes.size();
  const std::size_t block = model.block_dim();
  std::vector<int> a(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) a[k] = a[k + 1] + m[k];

  std::vector<bool> both_zero(n, false);
  std::bernoulli_distribution quarter(0.25);
  for (std::size_t k = 0; k < n; ++k) {
    const int i = shapes[k].index_floor;
    if (shapes[k].integral && m[k] > 0 && a[k] <= d - i && r + 1 - a[k + 1] <= i)
      both_zero[k] = quarter(rng);
  }

  std::vector<Subspace> big_a(n + 1, Subspace::zero(block));
  std::vector<std::vector<Vector>> ext_a(n);
  for (std::size_t k = n; k-- > 0;) {
    const int i = shapes[k].index_floor;
    const bool glue = shapes[k].integral && m[k] > 0 && !both_zero[k];
    const int low = both_zero[k] ? i + 1 : shapes[k].y_low;
    std::optional<std::size_t> anchor;
    if (glue) anchor = static_cast<std::size_t>(i);
    ext_a[k] = extension_block(big_a[k + 1], model.y_flag(low), static_cast<std::size_t>(m[k]),
                               anchor, rng);
    std::vector<Vector> gens = ext_a[k];
    for (std::size_t row = 0; row < big_a[k + 1].dim(); ++row)
      gens.push_back(row_of(big_a[k + 1].basis(), row));
    big_a[k] = subspace_from_spanning(block, gens);
  }

  std::vector<Subspace> big_b(n + 1, Subspace::zero(block));
  std::vector<std::vector<Vector>> ext_b(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int i = shapes[k].index_floor;
    const bool glue = shapes[k].integral && m[k] > 0 && !both_zero[k];
    const int low = both_zero[k] ? d - i + 1 : shapes[k].z_low;
    std::optional<std::size_t> anchor;
    if (glue) anchor = static_cast<std::size_t>(d - i);
    ext_b[k] = extension_block(big_b[k], model.z_level(d - low), static_cast<std::size_t>(m[k]),
                               anchor, rng);
    std::vector<Vector> gens = ext_b[k];
    for (std::size_t row = 0; row < big_b[k].dim(); ++row)
      gens.push_back(row_of(big_b[k].basis(), row));
    big_b[k + 1] = subspace_from_spanning(block, gens);
  }

  const std::size_t ambient = model.ambient_dim();
  std::vector<Subspace> spaces;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Vector> gens;
    for (std::size_t row = 0; row < big_a[k + 1].dim(); ++row)
      gens.push_back(embed(ambient, 0, row_of(big_a[k + 1].basis(), row)));
    for (std::size_t row = 0; row < big_b[k].dim(); ++row)
      gens.push_back(embed(ambient, block, row_of(big_b[k].basis(), row)));
    const std::size_t mk = static_cast<std::size_t>(m[k]);
    const bool glue = shapes[k].integral && mk > 0 && !both_zero[k];
    auto z = random_invertible(mk, rng, glue);
    for (std::size_t row = 0; row < mk; ++row) {
      Vector v = embed(ambient, 0, ext_a[k][row]);
      for (std::size_t col = 0; col < mk; ++col)
        for (std::size_t j = 0; j < block; ++j) v[block + j] += z[row][col] * ext_b[k][col][j];
      gens.push_back(std::move(v));
    }
    spaces.push_back(subspace_from_spanning(ambient, gens));
  }

  LimitLinearSeries g{model, r, set, std::move(spaces)};
  if (!membership_failures(g).empty() || !check_exact(g).holds) return std::nullopt;
  if (!is_minimal(numerical_data(g), g.delta)) return std::nullopt;
  return g;
}

std::string describe(int d, int r, const std::vector<int>& delta) {
  std::string s = "(d=" + std::to_string(d) + ", r=" + std::to_string(r) + ", delta=[";
  for (std::size_t i = 0; i < delta.size(); ++i)
    s += (i ? "," : "") + std::to_string(delta[i]);
  return s + "])";
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Rational random_rational(Rng& rng, int bound) {
  Rational x(uniform(rng, -bound, bound), uniform(rng, 1, 3));
  x.canonicalize();
  return x;
}

Rational random_nonzero_rational(Rng& rng, int bound) {
  for (;;) {
    Rational x = random_rational(rng, bound);
    if (sgn(x) != 0) return x;
  }
}

Vector random_vector_in(const Subspace& space, Rng& rng) {
  Vector v(space.ambient_dim());
  for (std::size_t r = 0; r < space.dim(); ++r) {
    Rational c = random_rational(rng);
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * space.basis()(r, j);
  }
  return v;
}

Subspace random_between(const Subspace& sub, const Subspace& super, std::size_t k, Rng& rng) {
  if (!super.contains(sub) || k < sub.dim() || k > super.dim())
    throw InvalidInput("random_between: no subspace of the requested dimension");
  Subspace current = sub;
  int attempts = 0;
  while (current.dim() < k) {
    Vector v = random_vector_in(super, rng);
    if (!current.contains(v)) {
      current = sum(current, subspace_from_spanning(current.ambient_dim(), {v}));
    } else if (++attempts > 64) {
      for (const Vector& c : complement(current, super)) {
        if (current.dim() == k) break;
        current = sum(current, subspace_from_spanning(current.ambient_dim(), {c}));
      }
    }
  }
  return current;
}

Subspace subspace_with_profile(const TorusSplit& split, const Subspace& rho1, const Subspace& iota1,
                               const Subspace& rho2, const Subspace& iota2, Rng& rng) {
  if (rho1.ambient_dim() != split.dim1() || iota1.ambient_dim() != split.dim1() ||
      rho2.ambient_dim() != split.dim2() || iota2.ambient_dim() != split.dim2())
    throw DimensionMismatch("subspace_with_profile: block dimensions do not match the split");
  if (!rho1.contains(iota1) || !rho2.contains(iota2))
    throw InvalidInput("subspace_with_profile: iota must lie in rho");
  auto c = complement(iota1, rho1);
  auto dvec = complement(iota2, rho2);
  if (c.size() != dvec.size())
    throw InvalidInput("subspace_with_profile: quotient dimensions differ");
  const std::size_t ambient = split.ambient();
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < iota1.dim(); ++r)
    gens.push_back(embed(ambient, 0, row_of(iota1.basis(), r)));
  for (std::size_t r = 0; r < iota2.dim(); ++r)
    gens.push_back(embed(ambient, split.dim1(), row_of(iota2.basis(), r)));
  auto z = random_invertible(c.size(), rng, false);
  for (std::size_t a = 0; a < c.size(); ++a) {
    Vector v = embed(ambient, 0, c[a]);
    for (std::size_t b = 0; b < dvec.size(); ++b)
      for (std::size_t j = 0; j < split.dim2(); ++j) v[split.dim1() + j] += z[a][b] * dvec[b][j];
    gens.push_back(std::move(v));
  }
  return subspace_from_spanning(ambient, gens);
}

Subspace random_subspace(const TorusSplit& split, std::size_t n, Rng& rng) {
  const std::size_t ambient = split.ambient();
  if (n > ambient) throw InvalidInput("random_subspace: dimension exceeds ambient");
  switch (uniform(rng, 0, 2)) {
    case 0:
      return random_full_rank(n, ambient, 1.0, rng);
    case 1:
      return random_full_rank(n, ambient, 0.3, rng);
    default: {
      // (dim ι1⁻¹, degree, dim ι2⁻¹)
      std::vector<std::array<std::size_t, 3>> shapes;
      for (std::size_t deg = 0; deg <= n; ++deg)
        for (std::size_t a = 0; a + deg <= n; ++a) {
          std::size_t b = n - a - deg;
          if (a + deg <= split.dim1() && b + deg <= split.dim2()) shapes.push_back({a, deg, b});
        }
      auto [a, deg, b] = shapes[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(shapes.size()) - 1))];
      Subspace iota1 = random_between(Subspace::zero(split.dim1()), Subspace::full(split.dim1()), a, rng);
      Subspace rho1 = random_between(iota1, Subspace::full(split.dim1()), a + deg, rng);
      Subspace iota2 = random_between(Subspace::zero(split.dim2()), Subspace::full(split.dim2()), b, rng);
      Subspace rho2 = random_between(iota2, Subspace::full(split.dim2()), b + deg, rng);
      return subspace_with_profile(split, rho1, iota1, rho2, iota2, rng);
    }
  }
}

std::optional<std::vector<int>> random_exact_profile(int d, int r, const std::vector<int>& delta,
                                                     Rng& rng) {
  ProfileSearch search(slot_shapes(DeltaSet(d, delta)), r);
  return search.draw(rng);
}

bool exact_minimal_profile_exists(int d, int r, const std::vector<int>& delta) {
  if (r < 0 || r > d) return false;
  ProfileSearch search(slot_shapes(DeltaSet(d, delta)), r);
  return search.feasible(0, r + 1);
}

std::vector<int> random_feasible_delta(int d, int r, int max_entry, Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> delta(static_cast<std::size_t>(d));
    for (int& e : delta) e = uniform(rng, 1, max_entry);
    if (exact_minimal_profile_exists(d, r, delta)) return delta;
  }
  return std::vector<int>(static_cast<std::size_t>(d), 1);
}

LimitLinearSeries random_exact_lls(int d, int r, const std::vector<int>& delta, std::uint64_t seed) {
  if (d < 0 || d > 8) throw InvalidInput("random_exact_lls: need 0 <= d <= 8");
  if (r < 0 || r > d) throw InvalidInput("random_exact_lls: need 0 <= r <= d");
  DeltaSet set(d, delta);
  constexpr int kAttempts = 16;
  std::vector<int> last_profile;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
    auto m = random_exact_profile(d, r, delta, rng);
    if (!m) throw ValidationFailure("no exact minimal numerical profile fits " + describe(d, r, delta));
    last_profile = *m;
    if (auto g = realize_profile(d, r, set, *m, rng)) return *g;
  }
  std::string profile;
  for (int v : last_profile) profile += (profile.empty() ? "" : ",") + std::to_string(v);
  throw ValidationFailure("retry budget exhausted for " + describe(d, r, delta) + ", last m = [" +
                          profile + "]");
}

LimitLinearSeries pad_with_node(const LimitLinearSeries& g, std::size_t after) {
  if (after + 1 >= g.spaces.size()) throw InvalidInput("pad_with_node: no pair after position");
  if (!check_exact(g).holds) throw InvalidInput("pad_with_node: series is not exact");
  const TorusSplit split = g.model.split();
  Subspace node = limit(split, g.spaces[after], LimitDirection::Infinity);
  const long segment = floor_of(g.delta[after]);  // δ entry number segment + 1
  std::vector<int> delta = g.delta.delta();
  delta[static_cast<std::size_t>(segment)] += 1;
  std::vector<Subspace> spaces = g.spaces;
  spaces.insert(spaces.begin() + static_cast<std::ptrdiff_t>(after + 1), node);
  return LimitLinearSeries{g.model, g.r, DeltaSet(g.delta.degree(), delta), std::move(spaces)};
}

std::optional<LimitLinearSeries> collapse_slot(const LimitLinearSeries& g, std::size_t position,
                                               Rng& rng) {
  if (position >= g.spaces.size()) throw InvalidInput("collapse_slot: position out of range");
  const TorusSplit split = g.model.split();
  const BlockProfile prof = block_profile(split, g.spaces[position]);
  Subspace a_pool = prof.rho1;
  Subspace b_pool = prof.rho2;
  if (g.delta.is_integer_position(position)) {
    const int i = static_cast<int>(floor_of(g.delta[position]));
    a_pool = intersect(a_pool, g.model.y_flag(i + 1));
    b_pool = intersect(b_pool, g.model.z_level(i - 1));
  }
  const int total = g.r + 1;
  const int a_hi = static_cast<int>(prof.rho1.dim());
  const int a_lo = static_cast<int>(prof.iota1_inv.dim());
  const bool has_left = position > 0;
  const bool has_right = position + 1 < g.spaces.size();
  std::vector<int> choices;
  for (int a = a_lo; a <= a_hi; ++a) {
    const int b = total - a;
    if (a > static_cast<int>(a_pool.dim()) || b > static_cast<int>(b_pool.dim())) continue;
    if (b < static_cast<int>(prof.iota2_inv.dim())) continue;
    if (!a_pool.contains(prof.iota1_inv) || !b_pool.contains(prof.iota2_inv)) continue;
    if ((has_left && a != a_hi) || (has_right && a != a_lo)) choices.push_back(a);
  }
  if (choices.empty()) return std::nullopt;
  const int a = choices[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(choices.size()) - 1))];
  Subspace big_a = random_between(prof.iota1_inv, a_pool, static_cast<std::size_t>(a), rng);
  Subspace big_b = random_between(prof.iota2_inv, b_pool, static_cast<std::size_t>(total - a), rng);
  LimitLinearSeries out = g;
  out.spaces[position] = direct_sum(split, big_a, big_b);
  return out;
}

std::optional<OrbitPair> random_orbit_pair(const TorusSplit& split, std::size_t n, bool want_point,
                                           bool mirrored, Rng& rng) {
  std::optional<Subspace> drawn;
  for (int attempt = 0; attempt < 100 && !drawn; ++attempt) {
    Subspace v = random_subspace(split, n, rng);
    if (!is_fixed(split, v)) drawn = v;
  }
  if (!drawn) return std::nullopt;
  const Subspace v = *drawn;
  const BlockProfile p = block_profile(split, v);

  // Non-mirrored roles: (rho1, iota1 of w) fixed by v on the W1 side, the
  // W2 side is free. Mirrored swaps the blocks.
  const Subspace& shared = mirrored ? p.iota2_inv : p.iota1_inv;
  const Subspace& target = mirrored ? p.rho1 : p.rho2;
  const std::size_t free_dim = mirrored ? split.dim1() : split.dim2();
  if (shared.dim() == 0) return std::nullopt;

  Subspace k_space = target;
  if (!want_point) {
    if (target.dim() == 0 || target.dim() == free_dim) return std::nullopt;
    bool found = false;
    for (int attempt = 0; attempt < 32 && !found; ++attempt) {
      k_space = random_between(Subspace::zero(free_dim), Subspace::full(free_dim), target.dim(), rng);
      found = !(k_space == target);
    }
    if (!found) return std::nullopt;
  }
  const std::size_t deg_max = std::min(shared.dim(), free_dim - k_space.dim());
  if (deg_max == 0) return std::nullopt;
  const std::size_t deg = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(deg_max)));
  Subspace shrunk = random_between(Subspace::zero(shared.ambient_dim()), shared, shared.dim() - deg, rng);
  Subspace grown = random_between(k_space, Subspace::full(free_dim), k_space.dim() + deg, rng);

  Subspace w = mirrored ? subspace_with_profile(split, grown, k_space, shared, shrunk, rng)
                        : subspace_with_profile(split, shared, shrunk, grown, k_space, rng);
  return OrbitPair{v, w, mirrored, want_point};
}

}  // namespace lls::gen
