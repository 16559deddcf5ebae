#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "semgraph/detect.hpp"
#include "semgraph/error.hpp"
#include "semgraph/graph.hpp"
#include "semgraph/ingest.hpp"
#include "semgraph/nullmodel.hpp"
#include "semgraph/relevance.hpp"
#include "semgraph/report.hpp"
#include "semgraph/stats.hpp"
#include "semgraph/transform.hpp"

namespace {

using namespace semgraph;
using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct Inputs {
  std::string graph;
  std::string ontology;
  std::string nodes;
  std::string links;
};

struct Loaded {
  SemanticGraph graph;
  OntologySchema schema;
};

Loaded load(const Inputs& in) {
  if (!in.graph.empty()) {
    if (!in.ontology.empty() || !in.nodes.empty() || !in.links.empty())
      throw CLI::ValidationError(
          "--graph cannot be combined with --ontology/--nodes/--links");
    auto doc = parse_graph_document(read_file(in.graph), in.graph);
    auto schema = doc.schema;
    return {build_graph(std::move(doc.nodes), std::move(doc.links),
                        std::move(doc.schema), std::move(doc.metadata)),
            std::move(schema)};
  }
  if (in.ontology.empty() || in.nodes.empty())
    throw CLI::ValidationError(
        "input needs --graph, or --ontology and --nodes (plus --links)");
  auto schema = parse_ontology(read_file(in.ontology), in.ontology);
  auto nodes = parse_nodes(read_file(in.nodes), in.nodes);
  std::vector<LinkRecord> links;
  if (!in.links.empty()) links = parse_links(read_file(in.links), in.links);
  return {build_graph(std::move(nodes), std::move(links), schema), schema};
}

// Every option of the app and the chosen subcommand, as given or defaulted.
Provenance provenance(const CLI::App& app, const CLI::App& sub) {
  Provenance p;
  p.command = sub.get_name();
  auto collect = [&](const CLI::App& a) {
    for (const CLI::Option* opt : a.get_options()) {
      std::string name = opt->get_single_name();
      if (name == "help" || name == "help-all" || name == "version") continue;
      std::string value;
      if (opt->count() > 0) {
        const auto& results = opt->results();
        for (std::size_t i = 0; i < results.size(); ++i)
          value += (i ? "," : "") + results[i];
        if (value.empty()) value = "true";
      } else {
        value = opt->get_default_str();
      }
      p.flags.emplace_back(name, value);
    }
  };
  collect(app);
  collect(sub);
  return p;
}

class Output {
 public:
  Output(OutputFormat format, Provenance provenance)
      : format_(format), provenance_(std::move(provenance)) {
    json_["provenance"] = to_json(provenance_);
    text_ = provenance_table(provenance_);
  }

  void section(const std::string& key, const std::string& title,
               const std::string& table, Json json) {
    text_ += fmt::format("\n## {}\n{}", title, table);
    json_[key] = std::move(json);
  }

  // Graph documents carry provenance as leading comment lines, which the
  // document parser skips.
  void document(const std::string& key, const std::string& text) {
    text_ += text;
    json_[key] = text;
  }

  std::string render() const {
    if (format_ == OutputFormat::kStructured) return json_.dump(2) + "\n";
    return text_;
  }

 private:
  OutputFormat format_;
  Provenance provenance_;
  std::string text_;
  Json json_;
};

void write(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file " + path);
  out << content;
  if (!out) throw Error("failed writing output file " + path);
}

std::set<std::string, std::less<>> read_id_list(const std::string& path) {
  std::set<std::string, std::less<>> ids;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    ids.insert(line);
  }
  return ids;
}

template <typename Enum, typename Parse>
Enum parse_choice(const std::string& text, Parse parse, const char* what) {
  auto v = parse(text);
  if (!v) throw CLI::ValidationError(fmt::format("unknown {} '{}'", what, text));
  return *v;
}

int run(int argc, char** argv) {
  CLI::App app{"Typed semantic graph analytics", "semgraph"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1, 1);
  app.fallthrough();

  Inputs in;
  std::string yr_mode = "literal";
  std::string format = "table";
  std::string output;
  double tau = kDefaultTau;
  app.add_option("--graph", in.graph, "Canonical graph document");
  app.add_option("--ontology", in.ontology, "Ontology file");
  app.add_option("--nodes", in.nodes, "Node table");
  app.add_option("--links", in.links, "Link table");
  app.add_option("--yr-mode", yr_mode, "Y^r_2 baseline: literal|normalized")
      ->capture_default_str()
      ->check(CLI::IsMember({"literal", "normalized"}));
  app.add_option("--format", format, "Report format: table|structured")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--tau", tau, "Usefulness threshold for node relevance")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("-o,--output", output, "Write the report here (default stdout)");

  auto* validate_cmd =
      app.add_subcommand("validate", "Check links against the ontology");

  auto* stats_cmd =
      app.add_subcommand("stats", "Per-type connectivity and disparity table");

  auto* dist_cmd = app.add_subcommand("dist", "Per-type degree histograms");

  bool removal = false;
  auto* paths_cmd =
      app.add_subcommand("paths", "Mean shortest-path length between types");
  paths_cmd->add_flag("--removal", removal,
                      "Also report the effect of removing each type");

  std::string mode = "plain";
  double z = 2.0;
  std::optional<double> min_s;
  std::string center;
  auto* relevance_cmd =
      app.add_subcommand("relevance", "Node, link and link-type relevance");
  relevance_cmd->add_option("--mode", mode, "plain|semantic|weak-2hop")
      ->capture_default_str()
      ->check(CLI::IsMember({"plain", "semantic", "weak-2hop"}));
  relevance_cmd->add_option("--z", z, "Outlier threshold in standard deviations")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  relevance_cmd->add_option("--min-s", min_s,
                            "List non-adjacent pairs with S at least this");
  relevance_cmd->add_option("--node", center,
                            "Report the link-type pair matrix around a node");

  std::string prune_id;
  std::string prune_attribute = "pruned";
  auto* prune_cmd =
      app.add_subcommand("prune", "Turn a node into an attribute of its neighbors");
  prune_cmd->add_option("--node", prune_id, "Node id to remove")->required();
  prune_cmd->add_option("--attribute", prune_attribute,
                        "Attribute name on former neighbors")
      ->capture_default_str();

  std::string map_path;
  auto* coarsen_cmd =
      app.add_subcommand("coarsen", "Merge node types through a mapping");
  coarsen_cmd->add_option("--map", map_path, "old=new mapping file")->required();

  std::string keep_type;
  std::string via_type;
  auto* project_cmd =
      app.add_subcommand("project", "One-mode projection of a two-type graph");
  project_cmd->add_option("--keep", keep_type, "Node type kept")->required();
  project_cmd->add_option("--via", via_type, "Node type projected out")
      ->required();

  std::string generator = "bipartite";
  std::string bipartite_mode = "independent";
  std::size_t n_a = 2000;
  std::size_t n_m = 2000;
  double mu = 6.0;
  std::size_t n = 2000;
  double p = 0.005;
  std::uint64_t seed = 0;
  bool project = false;
  bool nullmodel_stats = false;
  auto* nullmodel_cmd =
      app.add_subcommand("nullmodel", "Generate a seeded random graph");
  nullmodel_cmd->add_option("--generator", generator, "bipartite|er")
      ->capture_default_str()
      ->check(CLI::IsMember({"bipartite", "er"}));
  nullmodel_cmd->add_option("--seed", seed, "Random seed")->required();
  nullmodel_cmd->add_option("--na", n_a, "Actors")->capture_default_str();
  nullmodel_cmd->add_option("--nm", n_m, "Movies")->capture_default_str();
  nullmodel_cmd->add_option("--mu", mu, "Mean movies per actor")
      ->capture_default_str();
  nullmodel_cmd->add_option("--mode", bipartite_mode, "independent|configuration")
      ->capture_default_str()
      ->check(CLI::IsMember({"independent", "configuration"}));
  nullmodel_cmd->add_option("--n", n, "Nodes (er)")->capture_default_str();
  nullmodel_cmd->add_option("--p", p, "Link probability (er)")
      ->capture_default_str();
  nullmodel_cmd->add_flag("--project", project,
                          "Project the bipartite graph onto actors");
  nullmodel_cmd->add_flag("--stats", nullmodel_stats,
                          "Print measured against predicted clustering");

  std::string source;
  std::string target;
  std::vector<std::string> exclude_types;
  std::vector<std::string> exclude_link_types;
  std::optional<std::size_t> max_degree;
  std::string prune_set;
  bool use_relevance = false;
  std::string detect_mode = "plain";
  auto* detect_cmd =
      app.add_subcommand("detect", "Union of shortest paths between two nodes");
  detect_cmd->add_option("source", source, "Source node id")->required();
  detect_cmd->add_option("target", target, "Target node id")->required();
  detect_cmd->add_option("--exclude-type", exclude_types,
                         "Node type not traversed (repeatable)");
  detect_cmd->add_option("--exclude-link-type", exclude_link_types,
                         "Link type not traversed (repeatable)");
  detect_cmd->add_option("--max-degree", max_degree,
                         "Skip interior nodes with more neighbors than this");
  detect_cmd->add_option("--prune-set", prune_set,
                         "File of node ids (one per line) not traversed");
  detect_cmd->add_flag("--relevance", use_relevance,
                       "Skip interior nodes with relevance <= tau");
  detect_cmd->add_option("--mode", detect_mode,
                         "Relevance mode for --relevance: plain|semantic")
      ->capture_default_str()
      ->check(CLI::IsMember({"plain", "semantic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  auto baseline =
      parse_choice<RandomBaseline>(yr_mode, parse_random_baseline, "Y^r mode");
  auto out_format =
      parse_choice<OutputFormat>(format, parse_output_format, "format");
  Output out(out_format, provenance(app, *sub));

  if (sub == nullmodel_cmd) {
    std::optional<SemanticGraph> graph;
    std::optional<double> predicted;
    if (generator == "bipartite") {
      BipartiteParams params{n_a, n_m, mu, seed};
      auto bmode = parse_choice<BipartiteMode>(
          bipartite_mode, parse_bipartite_mode, "bipartite mode");
      graph = random_bipartite(params, bmode);
      if (project) {
        graph = one_mode_projection(*graph, kActorType, kMovieType);
        predicted = predicted_projection_clustering(mu);
      }
    } else {
      graph = er_random(n, p, seed);
      predicted = p;
    }
    if (nullmodel_stats) {
      double measured = graph_clustering(*graph);
      std::optional<double> global;
      try {
        global = transitivity(*graph);
      } catch (const Error&) {
      }
      auto fix = [](std::optional<double> v) {
        return v ? fmt::format("{:.4f}", *v) : std::string("undef");
      };
      std::string table = fmt::format(
          "nodes        {}\nlinks        {}\nmean_C       {}\ntransitivity {}\n"
          "predicted_C  {}\n",
          graph->node_count(), graph->pair_count(), fix(measured), fix(global),
          fix(predicted));
      Json json{{"nodes", graph->node_count()},
                {"links", graph->pair_count()},
                {"mean_C", measured},
                {"transitivity", global ? Json(*global) : Json(nullptr)},
                {"predicted_C", predicted ? Json(*predicted) : Json(nullptr)}};
      out.section("clustering", "clustering", table, json);
    } else {
      out.document("graph", export_graph(*graph));
    }
    write(output, out.render());
    return 0;
  }

  Loaded data = load(in);
  const SemanticGraph& graph = data.graph;
  const OntologySchema& schema = data.schema;
  int status = 0;

  if (sub == validate_cmd) {
    auto violations = validate(graph, schema);
    out.section("violations", "violations", violations_table(violations),
                to_json(violations));
    if (!violations.empty()) status = kExitData;
  } else if (sub == stats_cmd) {
    auto report = type_stats(graph, schema, baseline);
    out.section("types", "node types", type_stats_table(report),
                to_json(report));
  } else if (sub == dist_cmd) {
    std::vector<DegreeDistribution> dists;
    for (const auto& t : graph.node_types())
      dists.push_back(degree_distribution(graph, t));
    out.section("degrees", "degree distributions",
                degree_distributions_table(dists), to_json(dists));
  } else if (sub == paths_cmd) {
    auto matrix = path_length_matrix(graph);
    out.section("paths", "mean path length", path_matrix_table(matrix),
                to_json(matrix));
    if (removal) {
      auto impact = type_removal_impact(graph);
      out.section("removal", "type removal", removal_impact_table(impact),
                  to_json(impact));
    }
  } else if (sub == relevance_cmd) {
    auto rmode =
        parse_choice<RelevanceMode>(mode, parse_relevance_mode, "mode");
    NodeSet useful;
    if (rmode == RelevanceMode::kWeakTwoHop)
      useful = useful_nodes(graph, schema, tau, RelevanceMode::kPlain);
    auto nodes = all_node_relevance(graph, schema, tau, rmode, useful);
    out.section("nodes", "node relevance", node_relevance_table(nodes),
                to_json(nodes));
    auto types = link_type_relevance(graph);
    out.section("link_types", "link type relevance",
                link_type_relevance_table(types), to_json(types));
    auto outliers = relevance_outliers(graph, z);
    out.section("outliers", "link relevance outliers", outliers_table(outliers),
                to_json(outliers));
    if (min_s) {
      auto latent = latent_links(graph, *min_s, schema);
      out.section("latent", "latent links", latent_links_table(latent),
                  to_json(latent));
    }
    if (!center.empty()) {
      auto m = pair_type_matrix(graph, center);
      out.section("pair_types", "link type pairs", pair_type_matrix_table(m),
                  to_json(m));
    }
  } else if (sub == prune_cmd) {
    out.document("graph", export_graph(prune_node(graph, prune_id,
                                                  prune_attribute)));
  } else if (sub == coarsen_cmd) {
    auto merge = parse_merge_map(read_file(map_path), map_path);
    out.document("graph", export_graph(coarsen(graph, schema, merge).graph));
  } else if (sub == project_cmd) {
    out.document("graph",
                 export_graph(one_mode_projection(graph, keep_type, via_type)));
  } else if (sub == detect_cmd) {
    DetectConstraints c;
    c.excluded_node_types.insert(exclude_types.begin(), exclude_types.end());
    c.excluded_link_types.insert(exclude_link_types.begin(),
                                 exclude_link_types.end());
    c.max_degree = max_degree;
    if (!prune_set.empty()) {
      c.use_pruned = true;
      c.pruned = read_id_list(prune_set);
    }
    DetectResult result;
    if (use_relevance) {
      auto rmode = parse_choice<RelevanceMode>(detect_mode,
                                               parse_relevance_mode, "mode");
      result = detect_with_relevance(graph, schema, source, target, tau, rmode,
                                     c);
    } else {
      result = shortest_path_subgraph(graph, source, target, c);
    }
    out.document("detect", format_detect_result(graph, result));
  }

  write(output, out.render());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "semgraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "semgraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const semgraph::Error& e) {
    std::cerr << "semgraph: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "semgraph: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
