// odg: construct finite groups, emit and classify their order divisor
// graphs, and run the built-in verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 resource cap exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "odg/errors.hpp"
#include "odg/export.hpp"
#include "odg/graph.hpp"
#include "odg/group.hpp"
#include "odg/group_spec.hpp"
#include "odg/numtheory.hpp"
#include "odg/odgraph.hpp"
#include "odg/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::string flag_word(bool b) { return b ? "yes" : "no"; }

int cmd_group(const std::string& spec, std::int64_t max_order) {
  const odg::FiniteGroup g = odg::parse_group_spec(spec, max_order);
  const odg::OrderPartition part = odg::order_partition(g);
  std::cout << "spec: " << g.spec() << "\n";
  std::cout << "order: " << g.order() << "\n";
  std::cout << "exponent: " << odg::exponent(g) << "\n";
  std::cout << "abelian: " << flag_word(odg::is_abelian(g)) << "\n";
  std::cout << "cyclic: " << flag_word(odg::is_cyclic_algebraic(g)) << "\n";
  std::cout << "elementary_abelian: " << flag_word(odg::is_elementary_abelian(g))
            << "\n";
  std::cout << "order classes:";
  for (const auto& [d, members] : part.classes)
    std::cout << " " << d << ":" << members.size();
  std::cout << "\n";
  return kExitOk;
}

int emit_graph(const odg::Graph& g, const std::string& format,
               const std::optional<std::string>& group_spec, const std::string& title) {
  if (format == "json") {
    std::cout << odg::to_json_string(odg::graph_document(g, group_spec));
  } else {
    std::cout << odg::to_dot(g, title);
  }
  return kExitOk;
}

int cmd_od(const std::string& spec, const std::string& format, std::int64_t max_order) {
  const odg::FiniteGroup g = odg::parse_group_spec(spec, max_order);
  const odg::ODGraph od = odg::od_graph(g);
  return emit_graph(od.graph, format, g.spec(), "OD(" + g.spec() + ")");
}

int cmd_lattice(std::int64_t n, bool extended, const std::string& format) {
  if (n < 1) throw odg::spec_parse_error("lattice requires n >= 1");
  const odg::Graph g = extended ? odg::extended_graph(n) : odg::comparability_graph(n);
  const std::string title =
      extended ? "E(G_" + std::to_string(n) + ")" : "G_" + std::to_string(n);
  return emit_graph(g, format, std::nullopt, title);
}

int cmd_classify(const std::string& spec, bool as_json, std::int64_t max_order,
                 int chi_cap) {
  const odg::FiniteGroup g = odg::parse_group_spec(spec, max_order);
  const odg::ODGraph od = odg::od_graph(g);
  const auto star_center = odg::is_star(od.graph);
  const auto parts = odg::complete_multipartite_parts(od.graph);
  const int chi = odg::chromatic_number(od.graph, chi_cap);
  const auto diam = odg::diameter(od.graph);
  const odg::CyclicEquivalence eq = odg::is_cyclic_via_od(g);
  const bool cyclic = odg::is_cyclic_algebraic(g);

  const odg::PartitionKind kind = star_center ? odg::PartitionKind::star
                                  : parts     ? odg::PartitionKind::complete_multipartite
                                              : odg::PartitionKind::other;
  if (as_json) {
    nlohmann::ordered_json doc = odg::graph_document(od.graph, g.spec());
    nlohmann::ordered_json cls;
    cls["kind"] = odg::to_string(kind);
    cls["part_sizes"] = parts ? nlohmann::ordered_json(parts->part_sizes)
                              : nlohmann::ordered_json::array();
    cls["chromatic_number"] = chi;
    if (diam) {
      cls["diameter"] = *diam;
    } else {
      cls["diameter"] = nullptr;
    }
    doc["classification"] = std::move(cls);
    doc["cyclic"] = {{"algebraic", cyclic},
                     {"extended_matches", eq.extended_matches},
                     {"reduced_matches", eq.reduced_matches}};
    std::cout << odg::to_json_string(doc);
    return kExitOk;
  }

  std::cout << "spec: " << g.spec() << "\n";
  std::cout << "vertices: " << od.graph.vertex_count() << "\n";
  std::cout << "edges: " << od.graph.edge_count() << "\n";
  std::cout << "kind: " << odg::to_string(kind) << "\n";
  if (star_center)
    std::cout << "star_center: " << od.graph.info(*star_center).label << "\n";
  if (parts) {
    std::cout << "part_sizes: [";
    for (std::size_t i = 0; i < parts->part_sizes.size(); ++i)
      std::cout << (i ? "," : "") << parts->part_sizes[i];
    std::cout << "]\n";
  }
  std::cout << "chromatic_number: " << chi << "\n";
  std::cout << "diameter: " << (diam ? std::to_string(*diam) : "inf") << "\n";
  std::cout << "cyclic_algebraic: " << flag_word(cyclic) << "\n";
  std::cout << "extended_matches: " << flag_word(eq.extended_matches) << "\n";
  std::cout << "reduced_matches: " << flag_word(eq.reduced_matches) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& theorem, bool all, bool as_json,
               const odg::CorpusBounds& bounds) {
  std::vector<odg::VerificationReport> reports;
  if (all) {
    reports = odg::verify_all(bounds);
  } else {
    const auto id = odg::theorem_id_from_string(theorem);
    if (!id) {
      std::cerr << "unknown theorem id '" << theorem << "'\n";
      return kExitUsage;
    }
    reports.push_back(odg::verify(*id, bounds));
  }
  bool ok = true;
  if (as_json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& report : reports) {
      doc.push_back(odg::report_json(report));
      ok = ok && report.passed();
    }
    std::cout << odg::to_json_string(doc);
  } else {
    int passed = 0;
    for (const auto& report : reports) {
      std::cout << odg::report_text(report);
      ok = ok && report.passed();
      passed += report.passed() ? 1 : 0;
    }
    std::cout << "verify: " << passed << "/" << reports.size() << " checks passed\n";
  }
  return ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order divisor graphs of finite groups"};
  app.require_subcommand(1);

  std::string spec, format = "json", theorem;
  std::int64_t max_order = odg::kDefaultMaxOrder;
  std::int64_t lattice_n = 1;
  bool extended = false, as_json = false, all = false;
  int chi_cap = odg::kDefaultChromaticCap;
  odg::CorpusBounds bounds;

  CLI::App* group = app.add_subcommand("group", "print order data for a group");
  group->add_option("spec", spec, "group spec, e.g. Z:30 or Z:3xZ:5")->required();
  group->add_option("--max-order", max_order, "cap on group order");

  CLI::App* od = app.add_subcommand("od", "emit the order divisor graph");
  od->add_option("spec", spec)->required();
  od->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  od->add_option("--max-order", max_order);

  CLI::App* classify = app.add_subcommand("classify", "classify the order divisor graph");
  classify->add_option("spec", spec)->required();
  classify->add_flag("--json", as_json, "machine-readable output");
  classify->add_option("--max-order", max_order);
  classify->add_option("--chi-cap", chi_cap, "exact coloring size cap");

  CLI::App* lattice = app.add_subcommand("lattice", "emit G_n or E(G_n)");
  lattice->add_option("n", lattice_n)->required();
  lattice->add_flag("--extended", extended, "emit the extended graph E(G_n)");
  lattice->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--theorem", theorem, "check id, e.g. T9 or C11");
  verify->add_flag("--all", all, "run every check");
  verify->add_flag("--json", as_json);
  verify->add_option("--max-order", bounds.max_order);
  verify->add_option("--max-n", bounds.sweep_max_n, "C11/C12 sweep bound");
  verify->add_option("--max-cyclic", bounds.max_cyclic);
  verify->add_option("--max-dihedral", bounds.max_dihedral);
  verify->add_option("--max-units", bounds.max_units);
  verify->add_option("--max-ea", bounds.max_elementary_abelian);
  verify->add_option("--max-dn", bounds.t4_max_n, "T4 dihedral sweep bound");
  verify->add_option("--max-prime", bounds.t5_max_prime, "largest prime for T5 pairs");
  verify->add_option("--max-product", bounds.t5_max_product,
                     "largest p1*p2 for T5 pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (group->parsed()) return cmd_group(spec, max_order);
    if (od->parsed()) return cmd_od(spec, format, max_order);
    if (classify->parsed()) return cmd_classify(spec, as_json, max_order, chi_cap);
    if (lattice->parsed()) return cmd_lattice(lattice_n, extended, format);
    if (verify->parsed()) {
      if (!all && theorem.empty()) {
        std::cerr << "verify requires --theorem <id> or --all\n";
        return kExitUsage;
      }
      return cmd_verify(theorem, all, as_json, bounds);
    }
  } catch (const odg::spec_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const odg::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
