#pragma once

// Continuous linear series built from exact minimal level-δ series: one
// torus-invariant component per index of Δ, glued at fixed points of the
// torus action.

#include <cstddef>
#include <string>
#include <vector>

#include "lls/curve_model.hpp"
#include "lls/delta.hpp"
#include "lls/linalg.hpp"
#include "lls/linked_series.hpp"

namespace lls {

enum class ComponentKind { Fixed, Orbit };

/// Where a component of the chain maps in T: onto the component T_i
/// (integer index) or to the node N_⌈i⌉ (non-integer index, collapsed).
struct ChainTarget {
  enum class Kind { Component, Node };
  Kind kind = Kind::Component;
  int index = 0;

  friend bool operator==(const ChainTarget&, const ChainTarget&) = default;
};

struct ChainComponent {
  Rational index;
  Subspace base_space;  // V⁽ⁱ⁾ at the marked point E_i
  ComponentKind kind = ComponentKind::Fixed;
  ChainTarget target;
  std::size_t degree_in_g = 0;

  friend bool operator==(const ChainComponent&, const ChainComponent&) = default;
};

struct ChainNode {
  std::size_t left = 0;  // component positions, right = left + 1
  std::size_t right = 0;
  Subspace space;        // the glued fixed point

  friend bool operator==(const ChainNode&, const ChainNode&) = default;
};

/// Coefficients of the multivariate Hilbert polynomial u·a + v·b + Σ s_i·c_i + e.
struct HilbertData {
  std::size_t u_coeff = 0;
  std::size_t v_coeff = 0;
  std::vector<std::size_t> s_coeffs;
  std::size_t constant = 0;

  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

struct ContinuousChain {
  CurveModel model{0};
  int r = 0;
  DeltaSet delta;
  std::vector<ChainComponent> components;
  std::vector<ChainNode> nodes;
  HilbertData hilbert;

  friend bool operator==(const ContinuousChain&, const ContinuousChain&) = default;
};

/// Builds the chain of an exact minimal series. Throws GluingFailure naming
/// the first consecutive pair whose limits disagree, ValidationFailure for a
/// non-minimal or non-member input, InvalidInput for malformed shapes.
ContinuousChain build_chain(const LimitLinearSeries& g);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ChainReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Checks gluing, degree, transversality, weight_intervals, membership and
/// nonconstant. Never throws on a well-shaped chain.
ChainReport validate_chain(const ContinuousChain& chain);

/// The level-δ series of base spaces.
LimitLinearSeries evaluate_at_base_points(const ContinuousChain& chain);

/// (Σ degree_in_G, 0, multiplicity of each T_i, 1). Throws ValidationFailure
/// when some T_i is not covered exactly once.
HilbertData hilbert_coefficients(const ContinuousChain& chain);

/// Deterministic DOT digraph of the chain.
std::string emit_dot(const ContinuousChain& chain);

ChainTarget target_for(const Rational& index);

}  // namespace lls
