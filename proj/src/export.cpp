#include "odg/export.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace odg {

nlohmann::ordered_json graph_document(const Graph& g,
                                      const std::optional<std::string>& group_spec) {
  nlohmann::ordered_json doc;
  doc["format_version"] = kGraphDocumentVersion;
  if (group_spec) {
    doc["group_spec"] = *group_spec;
  } else {
    doc["group_spec"] = nullptr;
  }
  doc["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    nlohmann::ordered_json vertex;
    vertex["id"] = v;
    vertex["label"] = g.annotated() ? g.info(v).label : "";
    vertex["order"] = g.annotated() ? g.info(v).order_tag : 0;
    doc["vertices"].push_back(std::move(vertex));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc;
}

Graph graph_from_document(const nlohmann::json& doc) {
  if (doc.at("format_version").get<std::string>() != kGraphDocumentVersion)
    throw std::invalid_argument("unsupported graph document version");
  const auto& vertices = doc.at("vertices");
  Graph g(static_cast<int>(vertices.size()));
  std::vector<VertexInfo> info(vertices.size());
  for (const auto& vertex : vertices) {
    const int id = vertex.at("id").get<int>();
    if (id < 0 || id >= g.vertex_count())
      throw std::invalid_argument("vertex id out of range");
    info[id] = {vertex.at("label").get<std::string>(),
                vertex.at("order").get<std::int64_t>()};
  }
  for (const auto& edge : doc.at("edges")) {
    g.add_edge(edge.at(0).get<int>(), edge.at(1).get<int>());
  }
  g.set_annotations(std::move(info));
  return g;
}

std::string to_json_string(const nlohmann::ordered_json& doc) {
  return doc.dump(2) + "\n";
}

std::string to_dot(const Graph& g, const std::string& title) {
  std::ostringstream out;
  out << "graph \"" << title << "\" {\n";
  out << "  graph [label=\"" << title << "\"];\n";
  out << "  node [shape=ellipse];\n";
  if (g.annotated()) {
    // Cluster vertices by order, ascending.
    std::map<std::int64_t, std::vector<int>> by_order;
    for (int v = 0; v < g.vertex_count(); ++v)
      by_order[g.info(v).order_tag].push_back(v);
    for (const auto& [order, members] : by_order) {
      out << "  subgraph cluster_o" << order << " {\n";
      out << "    graph [label=\"order " << order << "\"];\n";
      out << "    rank=same;\n";
      for (int v : members) {
        out << "    v" << v << " [label=\"" << g.info(v).label << " (o=" << order
            << ")\"];\n";
      }
      out << "  }\n";
    }
  } else {
    for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json report_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["theorem"] = to_string(report.theorem);
  doc["pass"] = report.passed();
  doc["cases_run"] = report.cases_run;
  doc["failures"] = nlohmann::ordered_json::array();
  for (const CaseFailure& f : report.failures) {
    nlohmann::ordered_json item;
    item["case"] = f.case_descriptor;
    item["expected"] = f.expected;
    item["got"] = f.got;
    doc["failures"].push_back(std::move(item));
  }
  doc["elapsed_ms"] = report.elapsed_ms;
  return doc;
}

}  // namespace odg
