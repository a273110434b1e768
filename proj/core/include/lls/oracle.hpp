#pragma once

// Brute-force cross-checks for the torus module and for built chains. The
// code here recomputes minors and weights on its own and shares only the
// Rational, Matrix and Subspace value types with the main path.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lls/chain.hpp"
#include "lls/linalg.hpp"
#include "lls/torus.hpp"

namespace lls::oracle {

/// Limit of x∗v read off from the Pluecker coordinates: x∗ multiplies p_I by
/// x^(-w(I)), so only the extreme weight survives at each end.
Subspace limit_via_pluecker(const TorusSplit& split, const Subspace& v, LimitDirection direction);

/// max - min of w(I) over the nonzero minors.
std::size_t degree_via_pluecker(const TorusSplit& split, const Subspace& v);

struct SampleReport {
  bool passed = true;
  std::size_t points_checked = 0;
  std::vector<std::string> failures;
};

/// For random x: act(x, base) lies in the twisted section space at x∗E_i,
/// distinct x give distinct points on orbit components, and fixed components
/// do not move.
SampleReport sample_orbit_check(const ContinuousChain& chain, std::size_t samples_per_component,
                                std::uint64_t seed);

/// Points shared by two sampled orbit closures: `samples` random points of
/// each orbit plus both Pluecker-computed end points.
std::vector<Subspace> common_orbit_points(const TorusSplit& split, const Subspace& v,
                                          const Subspace& w, std::size_t samples,
                                          std::uint64_t seed);

}  // namespace lls::oracle
