#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "lls/chain.hpp"
#include "lls/error.hpp"
#include "lls/generator.hpp"
#include "lls/linked_series.hpp"
#include "lls/oracle.hpp"
#include "lls/serialize.hpp"
#include "lls/torus.hpp"

namespace lls::cli {
namespace {

// Commands that enumerate maximal minors refuse larger ambients.
constexpr std::size_t kMinorAmbientCap = 16;

template <typename T>
const T& expect(const InstanceFile& file, const char* what) {
  if (const T* p = std::get_if<T>(&file.payload)) return *p;
  throw InvalidInput(std::string("expected a ") + what + " instance");
}

void cap_ambient(std::size_t ambient) {
  if (ambient > kMinorAmbientCap)
    throw InvalidInput("ambient dimension " + std::to_string(ambient) + " exceeds the cap of " +
                       std::to_string(kMinorAmbientCap) + " for minor enumeration");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

std::vector<int> parse_delta(std::string text) {
  for (char& c : text)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(text);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidInput("delta entry '" + token + "' is not an integer");
    }
    if (used != token.size()) throw InvalidInput("delta entry '" + token + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

int cmd_check(const std::string& path, std::ostream& out) {
  const InstanceFile file = load_instance(path);
  const auto& g = expect<LimitLinearSeries>(file, "level-delta series");
  bool ok = true;
  auto bad = membership_failures(g);
  if (bad.empty()) {
    out << "membership: ok\n";
  } else {
    ok = false;
    out << "membership: failing at index " << to_string(g.delta[bad.front()]) << "\n";
  }
  auto compatible = check_compatible(g);
  if (compatible.holds) {
    out << "compatible: true\n";
  } else {
    ok = false;
    out << "compatible: false, failing pair " << pair_label(g.delta, compatible.failures.front().left)
        << "\n";
  }
  auto exact = check_exact(g);
  if (exact.holds)
    out << "exact: true\n";
  else
    out << "exact: false, failing pair " << pair_label(g.delta, exact.failures.front().left) << "\n";
  out << "minimal: " << (is_minimal(numerical_data(g), g.delta) ? "true" : "false") << "\n";
  return ok ? kExitOk : kExitValidation;
}

int cmd_numerical_data(const std::string& path, std::ostream& out) {
  const InstanceFile file = load_instance(path);
  const auto& g = expect<LimitLinearSeries>(file, "level-delta series");
  auto data = numerical_data(g);
  Json entries = Json::array();
  int total = 0;
  for (std::size_t k = 0; k < data.size(); ++k) {
    entries.push_back(
        Json{{"index", to_string(g.delta[k])}, {"p", data[k].p}, {"q", data[k].q}, {"m", data[k].m}});
    total += data[k].m;
  }
  Json report{{"entries", entries},
              {"sum_m", total},
              {"exact", is_exact_via_sum(data, g.r)},
              {"minimal", is_minimal(data, g.delta)}};
  out << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_reduce(const std::string& path, const std::string& output, std::ostream& out) {
  const InstanceFile file = load_instance(path);
  const auto& g = expect<LimitLinearSeries>(file, "level-delta series");
  write_output(dump_instance(InstanceFile{1, reduce_minimal(g)}), output, out);
  return kExitOk;
}

int cmd_build_chain(const std::string& path, const std::string& dot, const std::string& output,
                    std::ostream& out) {
  const InstanceFile file = load_instance(path);
  const auto& g = expect<LimitLinearSeries>(file, "level-delta series");
  cap_ambient(g.model.ambient_dim());
  ContinuousChain chain = build_chain(g);
  if (!dot.empty()) write_output(emit_dot(chain), dot, out);
  write_output(dump_instance(InstanceFile{1, chain}), output, out);
  return kExitOk;
}

int cmd_limit(const std::string& path, const std::string& at, std::ostream& out) {
  const InstanceFile file = load_instance(path);
  const auto& task = expect<SubspaceTask>(file, "subspace");
  LimitDirection dir = at == "zero" ? LimitDirection::Zero : LimitDirection::Infinity;
  out << to_json(limit(task.split, task.subspace, dir)).dump(2) << "\n";
  return kExitOk;
}

int cmd_degree(const std::string& path, std::ostream& out) {
  const InstanceFile file = load_instance(path);
  const auto& task = expect<SubspaceTask>(file, "subspace");
  out << orbit_degree(task.split, task.subspace) << "\n";
  return kExitOk;
}

int cmd_gen(int d, int r, const std::string& delta, std::uint64_t seed, const std::string& output,
            std::ostream& out) {
  auto g = gen::random_exact_lls(d, r, parse_delta(delta), seed);
  write_output(dump_instance(InstanceFile{1, g}), output, out);
  return kExitOk;
}

struct VerifyLog {
  std::ostream& out;
  bool ok = true;

  void line(const std::string& name, bool passed, const std::string& detail = "") {
    ok = ok && passed;
    out << "check " << name << ": " << (passed ? "pass" : "FAIL");
    if (!detail.empty()) out << " (" << detail << ")";
    out << "\n";
  }
};

void verify_chain(const ContinuousChain& chain, bool oracle, std::size_t samples,
                  std::uint64_t seed, VerifyLog& log) {
  for (const auto& c : validate_chain(chain).checks) log.line(c.name, c.passed, c.detail);
  if (!oracle) return;
  auto sampled = oracle::sample_orbit_check(chain, samples, seed);
  log.line("oracle_samples", sampled.passed,
           sampled.passed ? std::to_string(sampled.points_checked) + " points"
                          : sampled.failures.front());
  const TorusSplit split = chain.model.split();
  bool limits_agree = true;
  for (const auto& c : chain.components) {
    for (auto dir : {LimitDirection::Zero, LimitDirection::Infinity})
      limits_agree = limits_agree && limit(split, c.base_space, dir) ==
                                         oracle::limit_via_pluecker(split, c.base_space, dir);
    limits_agree = limits_agree && orbit_degree(split, c.base_space) ==
                                       oracle::degree_via_pluecker(split, c.base_space);
  }
  log.line("oracle_limits", limits_agree);
}

int cmd_verify(const std::string& path, bool oracle, std::size_t samples, std::uint64_t seed,
               std::ostream& out) {
  InstanceFile file = load_instance(path);
  VerifyLog log{out};
  if (const auto* g = std::get_if<LimitLinearSeries>(&file.payload)) {
    cap_ambient(g->model.ambient_dim());
    log.line("membership", membership_failures(*g).empty());
    auto compatible = check_compatible(*g);
    log.line("compatible", compatible.holds,
             compatible.holds ? "" : "pair " + pair_label(g->delta, compatible.failures.front().left));
    auto exact = check_exact(*g);
    log.line("exact", exact.holds,
             exact.holds ? "" : "pair " + pair_label(g->delta, exact.failures.front().left));
    auto data = numerical_data(*g);
    log.line("minimal", is_minimal(data, g->delta));
    if (log.ok) verify_chain(build_chain(*g), oracle, samples, seed, log);
  } else if (const auto* chain = std::get_if<ContinuousChain>(&file.payload)) {
    cap_ambient(chain->model.ambient_dim());
    verify_chain(*chain, oracle, samples, seed, log);
  } else {
    const auto& task = std::get<SubspaceTask>(file.payload);
    cap_ambient(task.split.ambient());
    const BlockProfile p = block_profile(task.split, task.subspace);
    log.line("profile", p.iota1_inv.dim() + p.rho2.dim() == task.subspace.dim() &&
                            p.rho1.dim() + p.iota2_inv.dim() == task.subspace.dim());
    if (oracle) {
      for (auto dir : {LimitDirection::Zero, LimitDirection::Infinity})
        log.line(dir == LimitDirection::Zero ? "oracle_limit_zero" : "oracle_limit_infty",
                 limit(task.split, task.subspace, dir) ==
                     oracle::limit_via_pluecker(task.split, task.subspace, dir));
      log.line("oracle_degree", orbit_degree(task.split, task.subspace) ==
                                    oracle::degree_via_pluecker(task.split, task.subspace));
    }
  }
  out << (log.ok ? "verify: pass" : "verify: FAIL") << "\n";
  return log.ok ? kExitOk : kExitValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Limit linear series on a two-component nodal curve", "lls"};
  app.require_subcommand(1);

  std::string file, output, dot, at, delta;
  int d = 0, r = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 20;
  bool oracle = false;

  auto* check = app.add_subcommand("check", "Membership, compatibility and exactness report");
  check->add_option("file", file, "lls instance")->required();
  auto* numerical = app.add_subcommand("numerical-data", "Numerical data (p, q, m) as JSON");
  numerical->add_option("file", file, "lls instance")->required();
  auto* reduce = app.add_subcommand("reduce", "Minimal reduction of an exact series");
  reduce->add_option("file", file, "lls instance")->required();
  reduce->add_option("-o,--output", output, "write the result here");
  auto* chain = app.add_subcommand("build-chain", "Build the continuous chain of an exact minimal series");
  chain->add_option("file", file, "lls instance")->required();
  chain->add_option("--dot", dot, "also write a DOT graph to PATH");
  chain->add_option("-o,--output", output, "write the chain here");
  auto* lim = app.add_subcommand("limit", "Limit of the torus orbit of a subspace");
  lim->add_option("file", file, "subspace instance")->required();
  lim->add_option("--at", at, "zero or infty")->required()->check(CLI::IsMember({"zero", "infty"}));
  auto* degree = app.add_subcommand("degree", "Degree of the orbit closure of a subspace");
  degree->add_option("file", file, "subspace instance")->required();
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random exact minimal series");
  gen_cmd->add_option("--d", d, "degree")->required();
  gen_cmd->add_option("--r", r, "rank")->required();
  gen_cmd->add_option("--delta", delta, "delta as 2,1 or [2,1]")->required();
  gen_cmd->add_option("--seed", seed, "64-bit seed");
  gen_cmd->add_option("-o,--output", output, "write the instance here");
  auto* verify = app.add_subcommand("verify", "Run every validator on an instance");
  verify->add_option("file", file, "instance")->required();
  verify->add_flag("--oracle", oracle, "add brute-force oracle checks");
  verify->add_option("--samples", samples, "orbit samples per component");
  verify->add_option("--seed", seed, "oracle sampling seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*check) return cmd_check(file, out);
    if (*numerical) return cmd_numerical_data(file, out);
    if (*reduce) return cmd_reduce(file, output, out);
    if (*chain) return cmd_build_chain(file, dot, output, out);
    if (*lim) return cmd_limit(file, at, out);
    if (*degree) return cmd_degree(file, out);
    if (*gen_cmd) return cmd_gen(d, r, delta, seed, output, out);
    if (*verify) return cmd_verify(file, oracle, samples, seed, out);
  } catch (const GluingFailure& e) {
    err << "lls: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationFailure& e) {
    err << "lls: " << e.what() << "\n";
    return kExitValidation;
  } catch (const HypothesisViolation& e) {
    err << "lls: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvalidInput& e) {
    err << "lls: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace lls::cli
