#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "genusone/graph.hpp"
#include "genusone/reduction.hpp"

namespace genusone {

/// Malformed input (bad JSON, wrong schema) as opposed to mathematical falsity.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic graph serialization: vertices sorted by id, edges sorted
/// lexicographically, marks sorted.
nlohmann::ordered_json graph_to_json(const DualGraph& g);
std::string graph_to_string(const DualGraph& g, int indent = -1);

DualGraph graph_from_json(const nlohmann::json& j);
DualGraph graph_from_string(const std::string& text);
DualGraph graph_from_file(const std::string& path);

nlohmann::ordered_json trace_to_json(const ReductionTrace& trace);

/// DOT export; the elliptic point becomes a star node labelled "E_l",
/// marks become dashed leaf decorations.
std::string graph_to_dot(const DualGraph& g);

}  // namespace genusone
