#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cli_runner.hpp"

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = (std::filesystem::temp_directory_path() / ("semgraph_test_" + name))
                  .string();
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("stats report layout") {
  auto r = cli::run("stats " + cli::inputs("toy"));
  REQUIRE(r.status == 0);
  CHECK(r.output.find("# semgraph 0.1.0 stats") == 0);
  CHECK(r.output.find("# --yr-mode=literal") != std::string::npos);
  CHECK(r.output.find("# --tau=0.1") != std::string::npos);
  auto header = r.output.find("#  type     n_alpha  m_alpha  sigma^k  R(alpha)  sigma^R");
  CHECK(header != std::string::npos);
  CHECK(r.output.find("1  city") != std::string::npos);
}

TEST_CASE("structured output is JSON with nulls for undefined values") {
  std::string ontology = temp_file("o.txt", "nodetype a\nnodetype b\n");
  std::string nodes = temp_file("n.csv", "id,type\nx,a\n");
  auto r = cli::run("stats --format structured --ontology '" + ontology +
                    "' --nodes '" + nodes + "'");
  REQUIRE(r.status == 0);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["provenance"]["version"] == "0.1.0");
  CHECK(doc["provenance"]["command"] == "stats");
  CHECK(doc["types"]["types"][0]["type"] == "a");
  CHECK(doc["types"]["types"][0]["m"].is_null());
  CHECK(doc["types"]["types"][1]["mean_k"].is_null());
  std::remove(ontology.c_str());
  std::remove(nodes.c_str());
}

TEST_CASE("detect on the diamond fixture") {
  auto r = cli::run("detect a d " + cli::inputs("diamond"));
  REQUIRE(r.status == 0);
  CHECK(r.output.find("# detect source=a target=d distance=2 nodes=4 links=4") !=
        std::string::npos);
  CHECK(r.output.find("[links]") != std::string::npos);
  auto narrow = cli::run("detect a d --exclude-type left " +
                         cli::inputs("diamond"));
  CHECK(narrow.output.find("distance=2 nodes=3 links=2") != std::string::npos);
}

TEST_CASE("graph commands round trip through the document format") {
  auto exported = cli::run("prune --node san-francisco --attribute city " +
                           cli::inputs("toy"));
  REQUIRE(exported.status == 0);
  std::string path = temp_file("pruned.graph", exported.output);
  auto again = cli::run("validate --graph '" + path + "'");
  CHECK(again.status == 0);
  CHECK(again.output.find("# violations: 0") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("null model report prints measured and predicted clustering") {
  auto r = cli::run(
      "nullmodel --mu 5 --na 400 --nm 400 --seed 1 --project --stats");
  REQUIRE(r.status == 0);
  CHECK(r.output.find("predicted_C  0.1667") != std::string::npos);
  CHECK(r.output.find("mean_C") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli::run("").status == 1);
  CHECK(cli::run("frobnicate").status == 1);
  CHECK(cli::run("stats --yr-mode sideways " + cli::inputs("toy")).status == 1);
  CHECK(cli::run("nullmodel --mu 2").status == 1);
  CHECK(cli::run("--help").status == 0);
  CHECK(cli::run("stats --ontology /nonexistent/o --nodes /nonexistent/n")
            .status == 2);
  CHECK(cli::run("detect a a " + cli::inputs("diamond")).status == 1);
  CHECK(cli::run("detect a zz " + cli::inputs("diamond")).status == 2);
  CHECK(cli::run("nullmodel --seed 1 --na 5 --nm 5 --mu 9").status == 1);

  std::string bad = temp_file("bad.csv", "id,type\nx,a\nx,a\n");
  std::string ontology = temp_file("o2.txt", "nodetype a\n");
  auto r = cli::run("stats --ontology '" + ontology + "' --nodes '" + bad + "'",
                    true);
  CHECK(r.status == 2);
  CHECK(r.output.find(bad + ":3:") != std::string::npos);
  std::remove(bad.c_str());
  std::remove(ontology.c_str());
}

TEST_CASE("validate flags disallowed links") {
  std::string links =
      temp_file("l.csv", "source,target,type\na,b,l\nb,d,r\n");
  auto r = cli::run("validate --ontology '" + cli::data("diamond/ontology.txt") +
                    "' --nodes '" + cli::data("diamond/nodes.csv") +
                    "' --links '" + links + "'");
  CHECK(r.status == 2);
  CHECK(r.output.find("# violations: 1") != std::string::npos);
  std::remove(links.c_str());
}
