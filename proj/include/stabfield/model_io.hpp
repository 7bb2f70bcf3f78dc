// Copyright 2026 The stabfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "stabfield/code_builder.hpp"
#include "stabfield/errors.hpp"

namespace stabfield {

// Model file schema:
//   { "name": str?, "kind": "cluster"|"surface", "n_qubits": int,
//     "edges": [[a,b],...]                           (cluster)
//     "x_checks": [[...],...], "z_checks": [[...],...] (surface)
//     "x_signs": [+-1,...]?, "z_signs": [+-1,...]?     (surface, default +1)
//     "logical_z": [indices]?, "delta": number? (default 1) }
// Qubit indices are 1-based.

namespace detail {

template <class T>
T require(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(where + ": field '" + key + "' has the wrong type (" + e.what() + ")");
  }
}

inline std::vector<Check> read_checks(const nlohmann::json& j, const char* key,
                                      const char* sign_key, const std::string& where) {
  std::vector<Check> out;
  for (auto& q : require<std::vector<std::vector<std::size_t>>>(j, key, where)) {
    out.push_back({std::move(q), 1});
  }
  if (j.contains(sign_key)) {
    auto signs = require<std::vector<int>>(j, sign_key, where);
    if (signs.size() != out.size()) {
      throw ConfigError(where + ": '" + sign_key + "' must have one entry per check");
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i].sign = signs[i];
  }
  return out;
}

}  // namespace detail

inline StabilizerModel model_from_json(const nlohmann::json& j, const std::string& where = "model") {
  if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
  const auto kind = detail::require<std::string>(j, "kind", where);
  const auto n = detail::require<std::size_t>(j, "n_qubits", where);
  const double delta = j.contains("delta") ? detail::require<double>(j, "delta", where) : 1.0;
  const std::string name = j.contains("name") ? detail::require<std::string>(j, "name", where)
                                              : kind + std::to_string(n);
  std::vector<PauliString> logicals;
  try {
    if (j.contains("logical_z")) {
      auto lz = detail::require<std::vector<std::size_t>>(j, "logical_z", where);
      if (!lz.empty()) logicals.push_back(PauliString::on(n, Pauli::Z, lz));
    }
    if (kind == "cluster") {
      QubitGraph g{n, {}};
      for (auto& e : detail::require<std::vector<std::vector<std::size_t>>>(j, "edges", where)) {
        if (e.size() != 2) throw ConfigError(where + ": every edge needs exactly two vertices");
        g.edges.emplace_back(e[0], e[1]);
      }
      return cluster_stabilizers(g, delta, std::move(logicals), name);
    }
    if (kind == "surface") {
      SurfaceLayout layout{n, detail::read_checks(j, "x_checks", "x_signs", where),
                           detail::read_checks(j, "z_checks", "z_signs", where)};
      return surface_stabilizers(layout, delta, std::move(logicals), name);
    }
  } catch (const ModelError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  throw ConfigError(where + ": field 'kind' must be \"cluster\" or \"surface\", got \"" + kind + "\"");
}

inline nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

inline StabilizerModel load_model(const std::filesystem::path& path) {
  return model_from_json(read_json_file(path), path.string());
}

}  // namespace stabfield
