#include "lls/serialize.hpp"

#include <fstream>
#include <sstream>

#include "lls/error.hpp"

namespace lls {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
  return v.get<long long>();
}

std::size_t count_field(const Json& j, const char* key) {
  long long v = integer_field(j, key);
  if (v < 0) throw InvalidInput(std::string("field \"") + key + "\" must be non-negative");
  return static_cast<std::size_t>(v);
}

std::vector<int> delta_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("delta must be an array of positive integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 1)
      throw InvalidInput("delta must be an array of positive integers");
    out.push_back(e.get<int>());
  }
  return out;
}

const char* kind_name(ComponentKind k) { return k == ComponentKind::Fixed ? "fixed" : "orbit"; }

ComponentKind kind_from(const Json& j) {
  if (j == "fixed") return ComponentKind::Fixed;
  if (j == "orbit") return ComponentKind::Orbit;
  throw InvalidInput("component kind must be \"fixed\" or \"orbit\"");
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput("rational must be a \"p/q\" string or an integer");
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t cols) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  Matrix m(0, cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols)
      throw InvalidInput("matrix row must have " + std::to_string(cols) + " entries");
    Vector v;
    for (const auto& e : row) v.push_back(rational_from_json(e));
    m.append_row(v);
  }
  return m;
}

Json to_json(const Subspace& v) {
  return Json{{"ambient_dim", v.ambient_dim()}, {"basis", to_json(v.basis())}};
}

Subspace subspace_from_json(const Json& j) {
  const std::size_t ambient = count_field(j, "ambient_dim");
  return Subspace::span(matrix_from_json(field(j, "basis"), ambient));
}

Json to_json(const TorusSplit& split) { return Json{{"dim1", split.dim1()}, {"dim2", split.dim2()}}; }

TorusSplit split_from_json(const Json& j) {
  return TorusSplit(count_field(j, "dim1"), count_field(j, "dim2"));
}

Json to_json(const LimitLinearSeries& g) {
  Json spaces = Json::object();
  for (std::size_t k = 0; k < g.spaces.size(); ++k)
    spaces[to_string(g.delta[k])] = to_json(g.spaces[k].basis());
  return Json{{"d", g.model.degree()}, {"r", g.r}, {"delta", g.delta.delta()}, {"spaces", spaces}};
}

LimitLinearSeries series_from_json(const Json& j) {
  const long long d = integer_field(j, "d");
  const long long r = integer_field(j, "r");
  if (d < 0 || d > 64) throw InvalidInput("d out of range");
  if (r < -1 || r > 1024) throw InvalidInput("r out of range");
  LimitLinearSeries g;
  g.model = CurveModel(static_cast<int>(d));
  g.r = static_cast<int>(r);
  g.delta = DeltaSet(static_cast<int>(d), delta_from_json(field(j, "delta")));
  const Json& spaces = field(j, "spaces");
  if (!spaces.is_object()) throw InvalidInput("spaces must be an object keyed by index");
  if (spaces.size() != g.delta.size())
    throw InvalidInput("spaces must have one entry per index of Delta");
  for (const Rational& i : g.delta.indices()) {
    auto it = spaces.find(to_string(i));
    if (it == spaces.end()) throw InvalidInput("no space for index " + to_string(i));
    g.spaces.push_back(Subspace::span(matrix_from_json(*it, g.model.ambient_dim())));
  }
  g.validate_shape();
  return g;
}

Json to_json(const ContinuousChain& chain) {
  Json components = Json::array();
  for (const auto& c : chain.components) {
    components.push_back(Json{
        {"index", to_json(c.index)},
        {"kind", kind_name(c.kind)},
        {"target",
         Json{{"type", c.target.kind == ChainTarget::Kind::Component ? "component" : "node"},
              {"index", c.target.index}}},
        {"degree", c.degree_in_g},
        {"base_space", to_json(c.base_space.basis())}});
  }
  Json nodes = Json::array();
  for (const auto& n : chain.nodes)
    nodes.push_back(Json{{"left", n.left}, {"right", n.right}, {"space", to_json(n.space.basis())}});
  return Json{{"d", chain.model.degree()},
              {"r", chain.r},
              {"delta", chain.delta.delta()},
              {"components", components},
              {"nodes", nodes},
              {"hilbert",
               Json{{"u", chain.hilbert.u_coeff},
                    {"v", chain.hilbert.v_coeff},
                    {"s", chain.hilbert.s_coeffs},
                    {"constant", chain.hilbert.constant}}}};
}

ContinuousChain chain_from_json(const Json& j) {
  const long long d = integer_field(j, "d");
  if (d < 0 || d > 64) throw InvalidInput("d out of range");
  ContinuousChain chain;
  chain.model = CurveModel(static_cast<int>(d));
  chain.r = static_cast<int>(integer_field(j, "r"));
  chain.delta = DeltaSet(static_cast<int>(d), delta_from_json(field(j, "delta")));
  const std::size_t ambient = chain.model.ambient_dim();
  const Json& comps = field(j, "components");
  if (!comps.is_array() || comps.size() != chain.delta.size())
    throw InvalidInput("components must have one entry per index of Delta");
  for (const auto& c : comps) {
    ChainComponent out;
    out.index = rational_from_json(field(c, "index"));
    out.kind = kind_from(field(c, "kind"));
    const Json& target = field(c, "target");
    const Json& type = field(target, "type");
    if (type == "component")
      out.target.kind = ChainTarget::Kind::Component;
    else if (type == "node")
      out.target.kind = ChainTarget::Kind::Node;
    else
      throw InvalidInput("target type must be \"component\" or \"node\"");
    out.target.index = static_cast<int>(integer_field(target, "index"));
    out.degree_in_g = count_field(c, "degree");
    out.base_space = Subspace::span(matrix_from_json(field(c, "base_space"), ambient));
    chain.components.push_back(std::move(out));
  }
  for (std::size_t k = 0; k < chain.components.size(); ++k)
    if (!(chain.components[k].index == chain.delta[k]))
      throw InvalidInput("component indices must list Delta in order");
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) throw InvalidInput("nodes must be an array");
  for (const auto& n : nodes) {
    ChainNode out;
    out.left = count_field(n, "left");
    out.right = count_field(n, "right");
    if (out.right != out.left + 1 || out.right >= chain.components.size())
      throw InvalidInput("node must join consecutive components");
    out.space = Subspace::span(matrix_from_json(field(n, "space"), ambient));
    chain.nodes.push_back(std::move(out));
  }
  const Json& h = field(j, "hilbert");
  chain.hilbert.u_coeff = count_field(h, "u");
  chain.hilbert.v_coeff = count_field(h, "v");
  const Json& s = field(h, "s");
  if (!s.is_array()) throw InvalidInput("hilbert.s must be an array");
  for (const auto& e : s) {
    if (!e.is_number_unsigned()) throw InvalidInput("hilbert.s entries must be non-negative integers");
    chain.hilbert.s_coeffs.push_back(e.get<std::size_t>());
  }
  chain.hilbert.constant = count_field(h, "constant");
  return chain;
}

Json to_json(const SubspaceTask& task) {
  return Json{{"split", to_json(task.split)}, {"subspace", to_json(task.subspace)}};
}

SubspaceTask subspace_task_from_json(const Json& j) {
  SubspaceTask task{split_from_json(field(j, "split")), subspace_from_json(field(j, "subspace"))};
  if (task.subspace.ambient_dim() != task.split.ambient())
    throw InvalidInput("subspace ambient dimension does not match the split");
  return task;
}

Json to_json(const InstanceFile& file) {
  Json out{{"schema_version", file.schema_version}};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LimitLinearSeries>)
          out["kind"] = "lls";
        else if constexpr (std::is_same_v<T, ContinuousChain>)
          out["kind"] = "chain";
        else
          out["kind"] = "subspace";
        out["payload"] = to_json(p);
      },
      file.payload);
  return out;
}

InstanceFile instance_from_json(const Json& j) {
  if (integer_field(j, "schema_version") != InstanceFile::kSchemaVersion)
    throw InvalidInput("unsupported schema_version");
  const Json& kind = field(j, "kind");
  const Json& payload = field(j, "payload");
  if (kind == "lls") return InstanceFile{1, series_from_json(payload)};
  if (kind == "chain") return InstanceFile{1, chain_from_json(payload)};
  if (kind == "subspace") return InstanceFile{1, subspace_task_from_json(payload)};
  throw InvalidInput("kind must be \"lls\", \"chain\" or \"subspace\"");
}

InstanceFile parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed instance: ") + e.what());
  }
}

InstanceFile load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string dump_instance(const InstanceFile& file) { return to_json(file).dump(2) + "\n"; }

void save_instance(const std::filesystem::path& path, const InstanceFile& file) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << dump_instance(file);
}

}  // namespace lls
