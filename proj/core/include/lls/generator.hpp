#pragma once

// Seeded random instances: subspaces with a prescribed block profile, exact
// minimal series realized from a chosen numerical profile, padded and
// corrupted variants, and orbit pairs for the intersection dichotomy.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lls/linalg.hpp"
#include "lls/linked_series.hpp"
#include "lls/torus.hpp"

namespace lls::gen {

using Rng = std::mt19937_64;

/// Independent stream `stream` of the generator seeded with `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Small rational: numerator in [-bound, bound], denominator in [1, 3].
Rational random_rational(Rng& rng, int bound = 4);
Rational random_nonzero_rational(Rng& rng, int bound = 4);

/// Random element of `space`.
Vector random_vector_in(const Subspace& space, Rng& rng);

/// Random subspace of `super` of dimension k containing `sub`.
Subspace random_between(const Subspace& sub, const Subspace& super, std::size_t k, Rng& rng);

/// A subspace V with ρ1 = rho1, ι1⁻¹ = iota1, ρ2 = rho2, ι2⁻¹ = iota2: the
/// block parts plus the graph of a random isomorphism rho1/iota1 → rho2/iota2.
/// Throws InvalidInput if the quotient dimensions differ or iota ⊄ rho.
Subspace subspace_with_profile(const TorusSplit& split, const Subspace& rho1,
                               const Subspace& iota1, const Subspace& rho2,
                               const Subspace& iota2, Rng& rng);

/// Random n-dimensional subspace, mixing dense, sparse and profile-built draws.
Subspace random_subspace(const TorusSplit& split, std::size_t n, Rng& rng);

/// A numerical profile m with m > 0 off the integers and Σm = r + 1 that some
/// exact series realizes; nullopt when none exists.
std::optional<std::vector<int>> random_exact_profile(int d, int r, const std::vector<int>& delta,
                                                     Rng& rng);
bool exact_minimal_profile_exists(int d, int r, const std::vector<int>& delta);

/// Random δ with entries in [1, max_entry] admitting an exact minimal series.
std::vector<int> random_feasible_delta(int d, int r, int max_entry, Rng& rng);

/// Exact minimal series in the model. Throws InvalidInput unless 0 <= r <= d
/// <= 8, ValidationFailure if no exact minimal profile fits δ.
LimitLinearSeries random_exact_lls(int d, int r, const std::vector<int>& delta, std::uint64_t seed);

/// Inserts the node lim∞ V at position `after` + 1 as an extra non-integer
/// slot (δ grows by one in that segment). Exact stays exact, minimality is lost.
LimitLinearSeries pad_with_node(const LimitLinearSeries& g, std::size_t after);

/// Replaces slot `position` of an exact series by a split space A ⊕ B squeezed
/// between its neighbours, so the result is compatible but not exact at a
/// pair touching `position`. nullopt when no such squeeze exists.
std::optional<LimitLinearSeries> collapse_slot(const LimitLinearSeries& g, std::size_t position,
                                               Rng& rng);

struct OrbitPair {
  Subspace v;
  Subspace w;
  bool mirrored = false;       // hypothesis ρ2(w) = ι2⁻¹(v) instead of ρ1(w) = ι1⁻¹(v)
  bool expect_point = false;
};

/// Nonfixed v, w of equal dimension satisfying one intersection hypothesis.
/// nullopt if the drawn v leaves no room for the requested case.
std::optional<OrbitPair> random_orbit_pair(const TorusSplit& split, std::size_t n, bool want_point,
                                           bool mirrored, Rng& rng);

}  // namespace lls::gen
