#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "odg/graph.hpp"
#include "odg/theorems.hpp"

namespace odg {

inline constexpr const char* kGraphDocumentVersion = "1";

// GraphDocument JSON: format_version, group_spec (or null), vertices with
// id/label/order, edges as [i, j] pairs with i < j sorted lexicographically,
// plus an optional classification object. Byte-identical for equal inputs.
nlohmann::ordered_json graph_document(const Graph& g,
                                      const std::optional<std::string>& group_spec);

// Rebuild a graph (with annotations) from a GraphDocument.
Graph graph_from_document(const nlohmann::json& doc);

std::string to_json_string(const nlohmann::ordered_json& doc);

// DOT rendering: one node per vertex labeled "<element> (o=<order>)", with
// same-order vertices grouped into rank clusters. Deterministic.
std::string to_dot(const Graph& g, const std::string& title);

// Verification report as JSON (same field names as the struct).
nlohmann::ordered_json report_json(const VerificationReport& report);

}  // namespace odg
