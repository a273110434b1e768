#pragma once

// The ordered index set Δ(δ) = {0, 1/δ1, ..., 1, 1 + 1/δ2, ..., d} and the
// numerical data attached to a level-δ series.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lls/linalg.hpp"

namespace lls {

bool is_integer(const Rational& x);
long floor_of(const Rational& x);
long ceil_of(const Rational& x);

class DeltaSet {
 public:
  DeltaSet() : DeltaSet(0, {}) {}
  /// Throws InvalidInput when delta.size() != d or an entry is < 1.
  DeltaSet(int d, std::vector<int> delta);

  int degree() const noexcept { return d_; }
  const std::vector<int>& delta() const noexcept { return delta_; }
  const std::vector<Rational>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  const Rational& operator[](std::size_t position) const { return indices_[position]; }

  std::optional<std::size_t> position_of(const Rational& index) const;
  bool is_integer_position(std::size_t position) const { return is_integer(indices_[position]); }
  /// Position of the integer index k, 0 <= k <= d.
  std::size_t position_of_integer(int k) const;

  friend bool operator==(const DeltaSet& a, const DeltaSet& b) {
    return a.d_ == b.d_ && a.delta_ == b.delta_;
  }

 private:
  int d_;
  std::vector<int> delta_;
  std::vector<Rational> indices_;
};

DeltaSet build_delta(int d, std::vector<int> delta);

/// Adjacent index pairs (i, j) of Δ in increasing order.
std::vector<std::pair<Rational, Rational>> consecutive_pairs(const DeltaSet& set);

struct NumericalEntry {
  int p = 0;  // dim ι2⁻¹(V⁽ⁱ⁾)
  int q = 0;  // dim ι1⁻¹(V⁽ⁱ⁾)
  int m = 0;  // (r + 1) - p - q

  friend bool operator==(const NumericalEntry&, const NumericalEntry&) = default;
};

/// One entry per position of Δ.
using NumericalData = std::vector<NumericalEntry>;

/// Order isomorphism Δ(δ') → Δ_N ⊆ Δ, fixing the integers.
struct Reindexing {
  std::vector<int> delta;                // δ'
  std::vector<std::size_t> to_original;  // position in Δ(δ') ↦ position in Δ(δ)

  bool is_identity() const;
};

/// Δ_N keeps the integers and every index with m ≠ 0.
Reindexing support_subset(const DeltaSet& set, const NumericalData& data);

}  // namespace lls
