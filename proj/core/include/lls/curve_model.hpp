#pragma once

// Section spaces of the twist sequence on X = Y ∪ Z, two rational curves
// meeting at P, with L of bidegree (d, 0).
//
// U1 = Γ(Y, L|Y) has basis 1, t, ..., t^d and U2 = Γ(Z, L|Z(dP)) has basis
// 1, s, ..., s^d, where t and s are local coordinates at P. Coordinates of
// U1 ⊕ U2 are t^0..t^d followed by s^0..s^d. Sections of L|Z(jP) are those
// vanishing to order ≥ d - j at P.

#include <cstddef>

#include "lls/linalg.hpp"
#include "lls/torus.hpp"

namespace lls {

class CurveModel {
 public:
  explicit CurveModel(int d);

  int degree() const noexcept { return d_; }
  std::size_t block_dim() const noexcept { return static_cast<std::size_t>(d_) + 1; }
  std::size_t ambient_dim() const noexcept { return 2 * block_dim(); }
  TorusSplit split() const { return TorusSplit(block_dim(), block_dim()); }

  std::size_t t_coord(int power) const;
  std::size_t s_coord(int power) const;

  /// {f ∈ U1 : ord_P f ≥ k}, as a subspace of U1.
  Subspace y_flag(int k) const;
  /// Γ(Z, L|Z(jP)) inside U2: span of s^(d-j), ..., s^d.
  Subspace z_level(int j) const;

  friend bool operator==(const CurveModel&, const CurveModel&) = default;

 private:
  int d_;
};

struct SectionSpace {
  Rational index;
  Subspace subspace;
};

/// Γ(X, L⁽ⁱ⁾) inside U1 ⊕ U2. For non-integer i this is
/// y_flag(⌈i⌉) ⊕ z_level(⌊i⌋); for integer i it is the subspace of
/// y_flag(i) ⊕ z_level(i) where the t^i and s^(d-i) coefficients agree.
/// Throws InvalidInput for i outside [0, d].
SectionSpace section_space(const CurveModel& model, const Rational& index);

/// act(split, x, section_space(model, i)): sections at the point x∗E_i.
Subspace twisted_space_at(const CurveModel& model, const Rational& index, const Rational& x);

/// v ⊆ Γ(X, L⁽ⁱ⁾) and dim v = expected_r + 1. False for expected_r < 0.
bool is_generalized_linear_series(const CurveModel& model, const Subspace& v,
                                  const Rational& index, int expected_r);

}  // namespace lls
