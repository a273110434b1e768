#pragma once

// JSON encoding of instances. Rationals are "p/q" strings (or "p"), matrices
// row-major arrays of those, files carry {"schema_version": 1, "kind", "payload"}.

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "lls/chain.hpp"
#include "lls/linalg.hpp"
#include "lls/linked_series.hpp"
#include "lls/torus.hpp"

namespace lls {

using Json = nlohmann::json;

/// A bare subspace together with its block split (limit / degree tasks).
struct SubspaceTask {
  TorusSplit split{1, 0};
  Subspace subspace = Subspace::zero(1);

  friend bool operator==(const SubspaceTask& a, const SubspaceTask& b) {
    return a.split == b.split && a.subspace == b.subspace;
  }
};

using Payload = std::variant<LimitLinearSeries, ContinuousChain, SubspaceTask>;

struct InstanceFile {
  static constexpr int kSchemaVersion = 1;
  int schema_version = kSchemaVersion;
  Payload payload;
};

// All from_json functions throw InvalidInput on malformed or mistyped input.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t cols);
Json to_json(const Subspace& v);
Subspace subspace_from_json(const Json& j);
Json to_json(const TorusSplit& split);
TorusSplit split_from_json(const Json& j);

/// {"d","r","delta","spaces":{"<index>": matrix}}. Shape is validated on load.
Json to_json(const LimitLinearSeries& g);
LimitLinearSeries series_from_json(const Json& j);
Json to_json(const ContinuousChain& chain);
ContinuousChain chain_from_json(const Json& j);
Json to_json(const SubspaceTask& task);
SubspaceTask subspace_task_from_json(const Json& j);

Json to_json(const InstanceFile& file);
InstanceFile instance_from_json(const Json& j);

InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::filesystem::path& path);
std::string dump_instance(const InstanceFile& file);
void save_instance(const std::filesystem::path& path, const InstanceFile& file);

}  // namespace lls
