#pragma once

// Level-δ limit linear series in the concrete model: compatibility and
// exactness through block maps, numerical data, minimality, minimal
// reduction, torus equivalence and restriction to level one.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lls/curve_model.hpp"
#include "lls/delta.hpp"
#include "lls/linalg.hpp"

namespace lls {

/// Candidate data (d, r, δ, V⁽ⁱ⁾). `spaces[k]` sits at index delta[k].
/// Construction only checks shapes; the predicates below check the rest.
struct LimitLinearSeries {
  CurveModel model{0};
  int r = 0;
  DeltaSet delta;
  std::vector<Subspace> spaces;

  /// Throws InvalidInput on a degree mismatch between model and δ, a missing
  /// slot, a wrong ambient dimension, unequal dimensions or dim ≠ r + 1.
  void validate_shape() const;

  friend bool operator==(const LimitLinearSeries& a, const LimitLinearSeries& b) {
    return a.model == b.model && a.r == b.r && a.delta == b.delta && a.spaces == b.spaces;
  }
};

struct PairReport {
  std::size_t left = 0;   // position in Δ
  std::size_t right = 0;  // left + 1
  // ρ2(V⁽ⁱ⁾) vs ι2⁻¹(V⁽ʲ⁾)
  std::size_t rho2_left_dim = 0;
  std::size_t iota2_right_dim = 0;
  bool z_side_holds = false;
  // ρ1(V⁽ʲ⁾) vs ι1⁻¹(V⁽ⁱ⁾)
  std::size_t rho1_right_dim = 0;
  std::size_t iota1_left_dim = 0;
  bool y_side_holds = false;
};

struct SeriesReport {
  bool holds = true;
  std::vector<PairReport> failures;  // in Δ order

  std::optional<PairReport> first_failure() const {
    if (failures.empty()) return std::nullopt;
    return failures.front();
  }
};

/// Inclusions ρ2(V⁽ⁱ⁾) ⊆ ι2⁻¹(V⁽ʲ⁾) and ρ1(V⁽ʲ⁾) ⊆ ι1⁻¹(V⁽ⁱ⁾) at every
/// consecutive pair.
SeriesReport check_compatible(const LimitLinearSeries& g);

/// The same conditions with equality. Assumes compatibility.
SeriesReport check_exact(const LimitLinearSeries& g);

/// Every V⁽ⁱ⁾ is a generalized linear series of rank r in Γ(X, L⁽ⁱ⁾).
/// Returns the positions that are not.
std::vector<std::size_t> membership_failures(const LimitLinearSeries& g);

/// p_i = dim ι2⁻¹(V⁽ⁱ⁾), q_i = dim ι1⁻¹(V⁽ⁱ⁾), m_i = r + 1 - p_i - q_i at every
/// index, endpoints included.
NumericalData numerical_data(const LimitLinearSeries& g);

bool is_exact_via_sum(const NumericalData& data, int r);
bool is_minimal(const NumericalData& data, const DeltaSet& delta);

/// Restriction to Δ_N. Throws ValidationFailure on non-exact input.
LimitLinearSeries reduce_minimal(const LimitLinearSeries& g);

/// Action of (c_i) ∈ G_m^Δ: non-integer slots become (c_i, 1)·V⁽ⁱ⁾, integer
/// slots are untouched. `scalars` has one entry per position of Δ.
LimitLinearSeries act_on_series(const LimitLinearSeries& g, const std::vector<Rational>& scalars);

/// Witness scalars c (one per position, 1 on integer slots) with
/// act_on_series(a, c) == b, or nullopt when a and b are not equivalent.
std::optional<std::vector<Rational>> torus_equivalence_witness(const LimitLinearSeries& a,
                                                               const LimitLinearSeries& b);

bool torus_equivalent(const LimitLinearSeries& a, const LimitLinearSeries& b);

/// Restriction to the integer indices 0..d, as a level-(1,...,1) series.
/// Throws ValidationFailure on non-exact input.
LimitLinearSeries project_level_one(const LimitLinearSeries& g);

/// Index label used in reports: "(0,1/2)".
std::string pair_label(const DeltaSet& delta, std::size_t left);

}  // namespace lls
