#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "odg/export.hpp"
#include "odg/graph.hpp"
#include "odg/group_spec.hpp"
#include "odg/odgraph.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(ODG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fixture_path(const std::string& name) {
  return std::string(ODG_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("group listing") {
  const RunResult r = run_cli("group Z:30");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("order: 30") != std::string::npos);
  CHECK(r.output.find("order classes: 1:1 2:1 3:2 5:4 6:2 10:4 15:8 30:8") !=
        std::string::npos);

  const RunResult d3 = run_cli("group D:3");
  CHECK(d3.output.find("order classes: 1:1 2:3 3:2") != std::string::npos);

  const RunResult ea = run_cli("group EA:3^2");
  CHECK(ea.output.find("order classes: 1:1 3:8") != std::string::npos);
  CHECK(ea.output.find("elementary_abelian: yes") != std::string::npos);
}

TEST_CASE("od emission round trips") {
  const RunResult r = run_cli("od Z:15 --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["format_version"] == "1");
  CHECK(doc["group_spec"] == "Z:15");
  CHECK(doc["vertices"].size() == 15);
  CHECK(doc["edges"].size() == 62);

  const odg::Graph parsed = odg::graph_from_document(doc);
  const odg::Graph direct = odg::od_graph(odg::parse_group_spec("Z:15")).graph;
  CHECK(parsed == direct);
}

TEST_CASE("od handles the trivial group") {
  const RunResult r = run_cli("od Z:1 --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["vertices"].size() == 1);
  CHECK(doc["edges"].size() == 0);
}

TEST_CASE("dot output is a star for D_3") {
  const RunResult r = run_cli("od D:3 --format dot");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("graph") == 0);
  CHECK(r.output.find("v0 [label=\"e (o=1)\"]") != std::string::npos);
  // Five spokes from the identity and no other edges.
  int edge_lines = 0;
  std::istringstream lines(r.output);
  std::string line;
  while (std::getline(lines, line))
    if (line.find(" -- ") != std::string::npos) ++edge_lines;
  CHECK(edge_lines == 5);
}

TEST_CASE("output is deterministic") {
  for (const std::string args :
       {std::string("od Z:30 --format json"), std::string("od Z:30 --format dot"),
        std::string("classify Z:8 --json")}) {
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("figure fixtures match current output byte for byte") {
  const std::pair<const char*, const char*> figures[] = {
      {"D:3", "figure1_od_d3.json"},
      {"D:4", "figure2_od_d4.json"},
      {"Z:8", "figure3_od_z8.json"},
      {"Z:15", "figure4_od_z15.json"},
      {"Z:30", "figure5_od_z30.json"},
  };
  for (const auto& [spec, file] : figures) {
    const RunResult r = run_cli("od " + std::string(spec) + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == read_file(fixture_path(file)));
  }
  const RunResult dot = run_cli("od D:3 --format dot");
  CHECK(dot.output == read_file(fixture_path("figure1_od_d3.dot")));
}

TEST_CASE("classify") {
  const RunResult z8 = run_cli("classify Z:8");
  CHECK(z8.exit_code == 0);
  CHECK(z8.output.find("kind: complete_multipartite") != std::string::npos);
  CHECK(z8.output.find("part_sizes: [1,1,2,4]") != std::string::npos);
  CHECK(z8.output.find("chromatic_number: 4") != std::string::npos);
  CHECK(z8.output.find("diameter: 2") != std::string::npos);
  CHECK(z8.output.find("extended_matches: yes") != std::string::npos);
  CHECK(z8.output.find("reduced_matches: yes") != std::string::npos);

  const RunResult a5 = run_cli("classify A:5");
  CHECK(a5.output.find("kind: star") != std::string::npos);
  CHECK(a5.output.find("vertices: 60") != std::string::npos);

  const RunResult u24 = run_cli("classify U:24");
  CHECK(u24.output.find("kind: star") != std::string::npos);
  CHECK(u24.output.find("vertices: 8") != std::string::npos);

  const RunResult json = run_cli("classify Z:8 --json");
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["classification"]["chromatic_number"] == 4);
  CHECK(doc["classification"]["diameter"] == 2);
  CHECK(doc["cyclic"]["algebraic"] == true);
}

TEST_CASE("lattice emission") {
  const RunResult g12 = run_cli("lattice 12 --format json");
  CHECK(g12.exit_code == 0);
  const auto doc = nlohmann::json::parse(g12.output);
  CHECK(doc["group_spec"].is_null());
  CHECK(doc["vertices"].size() == 6);
  CHECK(doc["edges"].size() == 12);

  const RunResult e8 = run_cli("lattice 8 --extended --format json");
  const odg::Graph extended = odg::graph_from_document(nlohmann::json::parse(e8.output));
  CHECK(odg::is_isomorphic(extended, odg::od_graph(odg::parse_group_spec("Z:8")).graph));

  const RunResult k1 = run_cli("lattice 1 --format json");
  CHECK(nlohmann::json::parse(k1.output)["vertices"].size() == 1);
}

TEST_CASE("verify subcommand") {
  const RunResult c11 = run_cli("verify --theorem C11 --max-n 60");
  CHECK(c11.exit_code == 0);
  CHECK(c11.output.find("C11: PASS cases=60") != std::string::npos);

  const RunResult t5 = run_cli("verify --theorem T5 --max-prime 13 --max-product 143");
  CHECK(t5.exit_code == 0);
  CHECK(t5.output.find("T5: PASS") != std::string::npos);

  const RunResult json = run_cli(
      "verify --theorem C12 --max-n 50 --json");
  CHECK(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc.size() == 1);
  CHECK(doc[0]["theorem"] == "C12");
  CHECK(doc[0]["pass"] == true);
  CHECK(doc[0]["cases_run"] == 50);
}

TEST_CASE("classify reports non-multipartite graphs as other") {
  // OD(Z_12) has incomparable orders 4 and 6 whose classes see different
  // neighbors, so no complete multipartite structure exists.
  const RunResult r = run_cli("classify Z:12");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("kind: other") != std::string::npos);
  CHECK(r.output.find("part_sizes") == std::string::npos);
  CHECK(r.output.find("chromatic_number: 4") != std::string::npos);
}

TEST_CASE("verify --all runs the whole suite") {
  const RunResult r = run_cli("verify --all");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verify: 16/16 checks passed") != std::string::npos);
  // One summary line per check id.
  for (const char* id : {"R2i:", "R2ii:", "R2iii:", "R2iv:", "T9:", "C13:", "C11:",
                         "C12:", "C10:", "T4:", "T2:", "C3:", "C6:", "T5:", "T7:",
                         "T8:"})
    CHECK(r.output.find(id) != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("group 'Q:8'").exit_code == 2);       // unknown kind
  CHECK(run_cli("group Z:abc").exit_code == 2);       // bad number
  CHECK(run_cli("group Z:9999").exit_code == 3);      // cap exceeded
  CHECK(run_cli("od Z:9999").exit_code == 3);
  CHECK(run_cli("verify --theorem NOPE").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);            // neither --theorem nor --all
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("od Z:9999 --max-order 10000").exit_code == 0);
}
