#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "semgraph/graph.hpp"
#include "semgraph/ontology.hpp"
#include "semgraph/relevance.hpp"

namespace semgraph {

// Restrictions on which interior nodes and links a search may use. The
// query endpoints are never excluded.
struct DetectConstraints {
  std::set<std::string, std::less<>> excluded_node_types;
  std::set<std::string, std::less<>> excluded_link_types;
  // Interior nodes with more distinct neighbors than this are not traversed.
  std::optional<std::size_t> max_degree;
  bool use_pruned = false;
  std::set<std::string, std::less<>> pruned;  // node ids, read when use_pruned

  bool empty() const {
    return excluded_node_types.empty() && excluded_link_types.empty() &&
           !max_degree && !(use_pruned && !pruned.empty());
  }
};

struct DetectResult {
  std::string source;
  std::string target;
  std::optional<std::size_t> distance;  // hops; nullopt when unreachable
  std::vector<std::string> nodes;       // on some shortest path, sorted
  std::vector<std::size_t> links;       // indices into graph.links(), sorted
  DetectConstraints constraints;

  bool reachable() const { return distance.has_value(); }
};

// Union of all shortest source-target paths under the constraints, found by
// bidirectional breadth-first search on the undirected view. Throws
// std::invalid_argument when a == b and semgraph::Error for unknown ids.
DetectResult shortest_path_subgraph(const SemanticGraph& graph,
                                    std::string_view a, std::string_view b,
                                    const DetectConstraints& constraints = {});

// Excludes every interior node whose plain or semantic relevance value is
// <= tau, then searches as above. `base` adds further constraints.
DetectResult detect_with_relevance(const SemanticGraph& graph,
                                   const OntologySchema& schema,
                                   std::string_view a, std::string_view b,
                                   double tau,
                                   RelevanceMode mode = RelevanceMode::kPlain,
                                   DetectConstraints base = {});

// The result as a graph of its own: the subgraph's nodes and links under the
// parent's schema and metadata.
SemanticGraph extract_subgraph(const SemanticGraph& graph,
                               const DetectResult& result);

// "source target distance nodes links" summary line followed by the
// canonical export of the subgraph.
std::string format_detect_result(const SemanticGraph& graph,
                                 const DetectResult& result);

}  // namespace semgraph
