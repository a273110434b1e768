#pragma once

// The one-dimensional torus acting on Grass(n, W1 ⊕ W2) by x ↦ (x⁻¹·id, id):
// orbit limits, orbit degrees, weight profiles and intersections of orbit
// closures.

#include <cstddef>
#include <optional>
#include <set>
#include <utility>

#include "lls/linalg.hpp"

namespace lls {

/// W = W1 ⊕ W2 with the W1 coordinates first.
class TorusSplit {
 public:
  TorusSplit(std::size_t dim1, std::size_t dim2);

  std::size_t dim1() const noexcept { return dim1_; }
  std::size_t dim2() const noexcept { return dim2_; }
  std::size_t ambient() const noexcept { return dim1_ + dim2_; }
  bool in_first_block(std::size_t column) const noexcept { return column < dim1_; }

  friend bool operator==(const TorusSplit&, const TorusSplit&) = default;

 private:
  std::size_t dim1_;
  std::size_t dim2_;
};

enum class LimitDirection { Zero, Infinity };

/// The four block subspaces of V ⊆ W1 ⊕ W2. The ι⁻¹ parts are reported
/// inside W1 (resp. W2), as are the projections.
struct BlockProfile {
  Subspace iota1_inv;  // V ∩ (W1 ⊕ 0)
  Subspace iota2_inv;  // V ∩ (0 ⊕ W2)
  Subspace rho1;       // projection of V to W1
  Subspace rho2;       // projection of V to W2
};

// Block maps between W1, W2 and W.
Subspace project_first(const TorusSplit& split, const Subspace& v);
Subspace project_second(const TorusSplit& split, const Subspace& v);
Subspace embed_first(const TorusSplit& split, const Subspace& in_w1);
Subspace embed_second(const TorusSplit& split, const Subspace& in_w2);
Subspace direct_sum(const TorusSplit& split, const Subspace& in_w1, const Subspace& in_w2);

/// (x⁻¹·id_W1 ⊕ id_W2)·v in canonical form. Throws InvalidInput for x = 0.
Subspace act(const TorusSplit& split, const Rational& x, const Subspace& v);

BlockProfile block_profile(const TorusSplit& split, const Subspace& v);

bool is_fixed(const TorusSplit& split, const Subspace& v);

/// Limit of x∗v as x → 0 (ρ1 ⊕ ι2⁻¹) or x → ∞ (ι1⁻¹ ⊕ ρ2), computed from the
/// block profile.
Subspace limit(const TorusSplit& split, const Subspace& v, LimitDirection direction);

/// Degree of the orbit closure in the Pluecker embedding; 0 iff v is fixed.
std::size_t orbit_degree(const TorusSplit& split, const Subspace& v);

/// {(#W1 columns, #W2 columns) of I : p_I(v) ≠ 0}.
std::set<std::pair<std::size_t, std::size_t>> orbit_weight_profile(const TorusSplit& split,
                                                                   const Subspace& v);

/// Intersection of the orbit closures of two nonfixed points of equal
/// dimension, under the hypothesis ρ1(w) = ι1⁻¹(v) or ρ2(w) = ι2⁻¹(v).
/// Returns the unique common point, or nullopt when the closures are
/// disjoint. Throws HypothesisViolation when neither block condition holds
/// and InvalidInput when v or w is fixed or the dimensions differ.
std::optional<Subspace> orbit_intersection(const TorusSplit& split, const Subspace& v,
                                           const Subspace& w);

/// Number of W1 columns in a column set.
std::size_t first_block_weight(const TorusSplit& split, const ColumnSet& columns);

/// Pluecker coordinates of v restricted to column sets of the given W1 weight.
PlueckerVector weight_slice(const TorusSplit& split, const PlueckerVector& coords,
                            std::size_t weight);

/// Leading Pluecker term of the orbit of v at the given end; proportional to
/// the Pluecker vector of limit(split, v, direction).
PlueckerVector end_point_term(const TorusSplit& split, const Subspace& v,
                              LimitDirection direction);

/// First-order term of the orbit at the given end: the coefficient of the
/// lowest positive power of the local parameter there. Zero for fixed v.
PlueckerVector first_order_term(const TorusSplit& split, const Subspace& v,
                                LimitDirection direction);

/// Transversality certificate at the point where the orbit closure of
/// `arriving` (its ∞ end) meets that of `leaving` (its 0 end).
struct TangentCertificate {
  bool ends_agree = false;          // lim∞ arriving = lim0 leaving
  bool point_matches_terms = false; // leading terms are the point's coordinates
  bool arriving_tangent_nonzero = false;
  bool leaving_tangent_nonzero = false;
  bool independent = false;         // point and both tangents span a 3-space

  bool ok() const noexcept {
    return ends_agree && point_matches_terms && arriving_tangent_nonzero &&
           leaving_tangent_nonzero && independent;
  }
};

TangentCertificate tangent_certificate(const TorusSplit& split, const Subspace& arriving,
                                       const Subspace& leaving);

/// True iff the two Pluecker vectors are nonzero and proportional.
bool proportional(const PlueckerVector& a, const PlueckerVector& b);

/// Rank of a family of Pluecker-space vectors (missing keys read as 0).
std::size_t pluecker_rank(const std::vector<PlueckerVector>& vectors);

}  // namespace lls
