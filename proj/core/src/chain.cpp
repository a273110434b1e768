#include "lls/chain.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "lls/error.hpp"
#include "lls/torus.hpp"

namespace lls {

ChainTarget target_for(const Rational& index) {
  if (is_integer(index)) return {ChainTarget::Kind::Component, static_cast<int>(floor_of(index))};
  return {ChainTarget::Kind::Node, static_cast<int>(ceil_of(index))};
}

ContinuousChain build_chain(const LimitLinearSeries& g) {
  g.validate_shape();
  if (auto bad = membership_failures(g); !bad.empty())
    throw ValidationFailure("space at index " + to_string(g.delta[bad.front()]) +
                            " is not a rank-" + std::to_string(g.r) +
                            " series in its section space");

  const TorusSplit split = g.model.split();
  ContinuousChain chain{g.model, g.r, g.delta, {}, {}, {}};

  // Gluing is a fold over Δ: the ∞ end of each component must be the 0 end of
  // the next one.
  for (std::size_t k = 0; k + 1 < g.spaces.size(); ++k) {
    Subspace arriving = limit(split, g.spaces[k], LimitDirection::Infinity);
    Subspace leaving = limit(split, g.spaces[k + 1], LimitDirection::Zero);
    if (!(arriving == leaving))
      throw GluingFailure(k, k + 1, "gluing failed at pair " + pair_label(g.delta, k));
    chain.nodes.push_back({k, k + 1, std::move(arriving)});
  }

  for (std::size_t k = 0; k < g.spaces.size(); ++k) {
    ChainComponent c;
    c.index = g.delta[k];
    c.base_space = g.spaces[k];
    c.degree_in_g = orbit_degree(split, g.spaces[k]);
    c.kind = c.degree_in_g == 0 ? ComponentKind::Fixed : ComponentKind::Orbit;
    c.target = target_for(c.index);
    if (c.kind == ComponentKind::Fixed && !is_integer(c.index))
      throw ValidationFailure("series is not minimal: component at index " + to_string(c.index) +
                              " would be constant");
    chain.components.push_back(std::move(c));
  }
  chain.hilbert = hilbert_coefficients(chain);
  return chain;
}

bool ChainReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ChainReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string index_label(const ContinuousChain& chain, std::size_t k) {
  return to_string(chain.components[k].index);
}

CheckResult check_gluing(const ContinuousChain& chain, const TorusSplit& split) {
  CheckResult out{"gluing", true, ""};
  if (chain.nodes.size() + 1 != chain.components.size()) {
    return {"gluing", false, "expected one node per consecutive pair"};
  }
  for (std::size_t n = 0; n < chain.nodes.size(); ++n) {
    const ChainNode& node = chain.nodes[n];
    if (node.left != n || node.right != n + 1) {
      return {"gluing", false, "node " + std::to_string(n) + " does not join consecutive components"};
    }
    const bool left_ok =
        node.space == limit(split, chain.components[n].base_space, LimitDirection::Infinity);
    const bool right_ok =
        node.space == limit(split, chain.components[n + 1].base_space, LimitDirection::Zero);
    if (!left_ok || !right_ok) {
      return {"gluing", false,
              "node between " + index_label(chain, n) + " and " + index_label(chain, n + 1) +
                  " is not the common limit"};
    }
  }
  return out;
}

CheckResult check_degree(const ContinuousChain& chain, const TorusSplit& split) {
  std::size_t total = 0;
  for (const auto& c : chain.components) {
    const std::size_t degree = orbit_degree(split, c.base_space);
    const ComponentKind kind = degree == 0 ? ComponentKind::Fixed : ComponentKind::Orbit;
    if (degree != c.degree_in_g || kind != c.kind) {
      return {"degree", false, "component " + to_string(c.index) + " records degree " +
                                   std::to_string(c.degree_in_g) + ", orbit has degree " +
                                   std::to_string(degree)};
    }
    total += degree;
  }
  if (total != static_cast<std::size_t>(chain.r) + 1) {
    return {"degree", false,
            "degrees sum to " + std::to_string(total) + ", expected r + 1 = " +
                std::to_string(chain.r + 1)};
  }
  HilbertData expected{total, 0, std::vector<std::size_t>(chain.model.block_dim(), 1), 1};
  if (!(chain.hilbert == expected)) return {"degree", false, "recorded Hilbert data is wrong"};
  return {"degree", true, "total degree " + std::to_string(total)};
}

// Extra coordinates for the tangent directions of the two branches of T at a
// node; no Pluecker column set uses these keys.
const ColumnSet kLeftBranch{std::numeric_limits<std::size_t>::max(), 0};
const ColumnSet kRightBranch{std::numeric_limits<std::size_t>::max(), 1};

CheckResult check_transversality(const ContinuousChain& chain, const TorusSplit& split) {
  for (const auto& node : chain.nodes) {
    const ChainComponent& left = chain.components.at(node.left);
    const ChainComponent& right = chain.components.at(node.right);
    const std::string where = "node between " + to_string(left.index) + " and " +
                              to_string(right.index);
    PlueckerVector point = pluecker(node.space);
    if (!proportional(end_point_term(split, left.base_space, LimitDirection::Infinity), point) ||
        !proportional(end_point_term(split, right.base_space, LimitDirection::Zero), point)) {
      return {"transversality", false, where + ": orbit ends do not reach the node"};
    }
    PlueckerVector t_left = first_order_term(split, left.base_space, LimitDirection::Infinity);
    PlueckerVector t_right = first_order_term(split, right.base_space, LimitDirection::Zero);
    // Components over T_i also move in T.
    if (is_integer(left.index)) t_left[kLeftBranch] = 1;
    if (is_integer(right.index)) t_right[kRightBranch] = 1;
    if (pluecker_rank({point, t_left, t_right}) != 3)
      return {"transversality", false, where + ": tangent directions are dependent"};
  }
  return {"transversality", true, ""};
}

CheckResult check_weight_intervals(const ContinuousChain& chain, const TorusSplit& split) {
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  for (const auto& c : chain.components) {
    auto profile = orbit_weight_profile(split, c.base_space);
    std::vector<std::size_t> firsts;
    for (const auto& [w1, w2] : profile) firsts.push_back(w1);
    std::sort(firsts.begin(), firsts.end());
    for (std::size_t k = 1; k < firsts.size(); ++k) {
      if (firsts[k] != firsts[k - 1] + 1)
        return {"weight_intervals", false, "weights of " + to_string(c.index) + " have a gap"};
    }
    if (firsts.empty()) return {"weight_intervals", false, "empty weight profile"};
    intervals.emplace_back(firsts.front(), firsts.back());
  }
  if (intervals.front().second != static_cast<std::size_t>(chain.r) + 1)
    return {"weight_intervals", false, "first interval does not start at r + 1"};
  if (intervals.back().first != 0)
    return {"weight_intervals", false, "last interval does not end at 0"};
  for (std::size_t k = 0; k + 1 < intervals.size(); ++k) {
    if (intervals[k].first != intervals[k + 1].second)
      return {"weight_intervals", false,
              "intervals of " + index_label(chain, k) + " and " + index_label(chain, k + 1) +
                  " do not meet"};
  }
  return {"weight_intervals", true, ""};
}

CheckResult check_membership(const ContinuousChain& chain) {
  if (chain.components.size() != chain.delta.size())
    return {"membership", false, "one component per index of delta is required"};
  for (std::size_t k = 0; k < chain.components.size(); ++k) {
    const ChainComponent& c = chain.components[k];
    if (c.index != chain.delta[k])
      return {"membership", false, "component " + std::to_string(k) + " has the wrong index"};
    if (!(c.target == target_for(c.index)))
      return {"membership", false, "component " + to_string(c.index) + " has the wrong target"};
    if (!is_generalized_linear_series(chain.model, c.base_space, c.index, chain.r))
      return {"membership", false,
              "base space at " + to_string(c.index) + " leaves its section space"};
  }
  return {"membership", true, ""};
}

CheckResult check_nonconstant(const ContinuousChain& chain) {
  for (const auto& c : chain.components) {
    if (!is_integer(c.index) && c.kind == ComponentKind::Fixed)
      return {"nonconstant", false, "component " + to_string(c.index) + " is constant"};
  }
  return {"nonconstant", true, ""};
}

}  // namespace

ChainReport validate_chain(const ContinuousChain& chain) {
  ChainReport report;
  const TorusSplit split = chain.model.split();
  // Later checks assume the components live in the model's ambient space.
  for (const auto& c : chain.components) {
    if (c.base_space.ambient_dim() != chain.model.ambient_dim()) {
      for (const char* name : {"gluing", "degree", "transversality", "weight_intervals",
                               "membership", "nonconstant"})
        report.checks.push_back({name, false, "component outside the model's ambient space"});
      return report;
    }
  }
  if (chain.components.empty()) {
    report.checks.push_back({"membership", false, "chain has no components"});
    return report;
  }
  report.checks.push_back(check_gluing(chain, split));
  report.checks.push_back(check_degree(chain, split));
  report.checks.push_back(check_transversality(chain, split));
  report.checks.push_back(check_weight_intervals(chain, split));
  report.checks.push_back(check_membership(chain));
  report.checks.push_back(check_nonconstant(chain));
  return report;
}

LimitLinearSeries evaluate_at_base_points(const ContinuousChain& chain) {
  LimitLinearSeries g{chain.model, chain.r, chain.delta, {}};
  for (const auto& c : chain.components) g.spaces.push_back(c.base_space);
  return g;
}

HilbertData hilbert_coefficients(const ContinuousChain& chain) {
  HilbertData h;
  h.s_coeffs.assign(chain.model.block_dim(), 0);
  for (const auto& c : chain.components) {
    h.u_coeff += c.degree_in_g;
    if (c.target.kind != ChainTarget::Kind::Component) continue;
    if (c.target.index < 0 || c.target.index > chain.model.degree())
      throw ValidationFailure("component maps onto a nonexistent T_" +
                              std::to_string(c.target.index));
    ++h.s_coeffs[static_cast<std::size_t>(c.target.index)];
  }
  for (std::size_t i = 0; i < h.s_coeffs.size(); ++i) {
    if (h.s_coeffs[i] != 1)
      throw ValidationFailure("T_" + std::to_string(i) + " is covered " +
                              std::to_string(h.s_coeffs[i]) + " times");
  }
  h.constant = 1;
  return h;
}

std::string emit_dot(const ContinuousChain& chain) {
  const TorusSplit split = chain.model.split();
  std::ostringstream out;
  out << "digraph chain {\n  rankdir=LR;\n";
  for (std::size_t k = 0; k < chain.components.size(); ++k) {
    const ChainComponent& c = chain.components[k];
    out << "  c" << k << " [label=\"i=" << to_string(c.index) << "\\n"
        << (c.kind == ComponentKind::Orbit ? "orbit" : "fixed") << "\\ndeg " << c.degree_in_g
        << "\"];\n";
  }
  for (const auto& node : chain.nodes) {
    out << "  c" << node.left << " -> c" << node.right << " [label=\"("
        << project_first(split, node.space).dim() << "," << project_second(split, node.space).dim()
        << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lls
