#include "semgraph/detect.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "semgraph/error.hpp"
#include "semgraph/ingest.hpp"
#include "semgraph/stats.hpp"

namespace semgraph {

namespace {

class Admissible {
 public:
  Admissible(const SemanticGraph& graph, const DetectConstraints& c,
             NodeIndex a, NodeIndex b)
      : node_ok_(graph.node_count(), true),
        link_ok_(graph.link_types().size(), true) {
    for (NodeIndex i = 0; i < graph.node_count(); ++i) {
      const auto& n = graph.node(i);
      if (c.excluded_node_types.count(n.type) ||
          (c.use_pruned && c.pruned.count(n.id)) ||
          (c.max_degree && graph.degree(i) > *c.max_degree))
        node_ok_[i] = false;
    }
    node_ok_[a] = node_ok_[b] = true;
    for (LinkTypeIndex t = 0; t < link_ok_.size(); ++t)
      if (c.excluded_link_types.count(graph.link_type_name(t)))
        link_ok_[t] = false;
  }

  bool node(NodeIndex i) const { return node_ok_[i]; }
  bool link_type(LinkTypeIndex t) const { return link_ok_[t]; }
  bool step(const Neighbor& n) const {
    if (!node_ok_[n.node]) return false;
    return std::any_of(n.link_types.begin(), n.link_types.end(),
                       [&](LinkTypeIndex t) { return link_ok_[t]; });
  }

 private:
  std::vector<bool> node_ok_;
  std::vector<bool> link_ok_;
};

// Walks one side's BFS levels back from the meeting layer, collecting nodes
// and the consecutive-level pairs that join them.
void collect_side(const SemanticGraph& graph, const Admissible& ok,
                  const std::vector<std::uint32_t>& dist,
                  std::vector<NodeIndex> layer, std::uint32_t radius,
                  std::vector<bool>& on_path,
                  std::set<std::pair<NodeIndex, NodeIndex>>& pairs) {
  std::vector<bool> queued(graph.node_count(), false);
  for (std::uint32_t level = radius; level > 0; --level) {
    std::vector<NodeIndex> next;
    for (NodeIndex v : layer) {
      for (const auto& n : graph.neighbors(v)) {
        if (dist[n.node] != level - 1 || !ok.step(n)) continue;
        pairs.insert({std::min(v, n.node), std::max(v, n.node)});
        if (!queued[n.node]) {
          queued[n.node] = true;
          on_path[n.node] = true;
          next.push_back(n.node);
        }
      }
    }
    layer = std::move(next);
  }
}

}  // namespace

DetectResult shortest_path_subgraph(const SemanticGraph& graph,
                                    std::string_view a, std::string_view b,
                                    const DetectConstraints& constraints) {
  NodeIndex source = graph.index_of(a);
  NodeIndex target = graph.index_of(b);
  if (source == target)
    throw std::invalid_argument("detection needs two distinct nodes");

  DetectResult result;
  result.source = std::string(a);
  result.target = std::string(b);
  result.constraints = constraints;

  Admissible ok(graph, constraints, source, target);
  std::vector<std::uint32_t> dist[2] = {
      std::vector<std::uint32_t>(graph.node_count(), kUnreachable),
      std::vector<std::uint32_t>(graph.node_count(), kUnreachable)};
  std::vector<NodeIndex> frontier[2] = {{source}, {target}};
  std::uint32_t radius[2] = {0, 0};
  dist[0][source] = 0;
  dist[1][target] = 0;

  std::vector<NodeIndex> meeting;
  while (meeting.empty()) {
    if (frontier[0].empty() || frontier[1].empty()) return result;
    int side = frontier[1].size() < frontier[0].size() ? 1 : 0;
    int other = 1 - side;
    std::vector<NodeIndex> next;
    for (NodeIndex u : frontier[side]) {
      for (const auto& n : graph.neighbors(u)) {
        if (dist[side][n.node] != kUnreachable || !ok.step(n)) continue;
        dist[side][n.node] = radius[side] + 1;
        next.push_back(n.node);
      }
    }
    ++radius[side];
    for (NodeIndex v : next)
      if (dist[other][v] != kUnreachable) meeting.push_back(v);
    frontier[side] = std::move(next);
  }

  // With both level sets complete, every meeting node sits at the same
  // offset radius[0] from the source and radius[1] from the target.
  result.distance = radius[0] + radius[1];
  std::vector<bool> on_path(graph.node_count(), false);
  for (NodeIndex v : meeting) on_path[v] = true;
  std::set<std::pair<NodeIndex, NodeIndex>> pairs;
  collect_side(graph, ok, dist[0], meeting, radius[0], on_path, pairs);
  collect_side(graph, ok, dist[1], meeting, radius[1], on_path, pairs);

  for (NodeIndex i = 0; i < graph.node_count(); ++i)
    if (on_path[i]) result.nodes.push_back(graph.node(i).id);
  std::sort(result.nodes.begin(), result.nodes.end());
  for (std::size_t l = 0; l < graph.link_count(); ++l) {
    auto [s, t] = graph.link_endpoints(l);
    if (!ok.link_type(graph.link_type_of(l))) continue;
    if (pairs.count({std::min(s, t), std::max(s, t)})) result.links.push_back(l);
  }
  return result;
}

DetectResult detect_with_relevance(const SemanticGraph& graph,
                                   const OntologySchema& schema,
                                   std::string_view a, std::string_view b,
                                   double tau, RelevanceMode mode,
                                   DetectConstraints base) {
  if (mode == RelevanceMode::kWeakTwoHop)
    throw std::invalid_argument(
        "relevance filtering takes the plain or semantic mode");
  NodeIndex source = graph.index_of(a);
  NodeIndex target = graph.index_of(b);
  auto relevance = all_node_relevance(graph, schema, tau, mode);
  base.use_pruned = true;
  for (NodeIndex i = 0; i < graph.node_count(); ++i)
    if (i != source && i != target && !relevance[i].useful)
      base.pruned.insert(relevance[i].node);
  return shortest_path_subgraph(graph, a, b, base);
}

SemanticGraph extract_subgraph(const SemanticGraph& graph,
                               const DetectResult& result) {
  std::vector<NodeRecord> nodes;
  for (const auto& id : result.nodes)
    nodes.push_back(graph.node(graph.index_of(id)));
  std::vector<LinkRecord> links;
  for (auto l : result.links) links.push_back(graph.links()[l]);
  return build_graph(std::move(nodes), std::move(links), graph.schema(),
                     graph.metadata());
}

std::string format_detect_result(const SemanticGraph& graph,
                                 const DetectResult& result) {
  std::string summary = "# detect source=" + encode_cell(result.source) +
                        " target=" + encode_cell(result.target) + " distance=" +
                        (result.distance ? std::to_string(*result.distance)
                                         : std::string("unreachable")) +
                        " nodes=" + std::to_string(result.nodes.size()) +
                        " links=" + std::to_string(result.links.size()) + "\n";
  return summary + export_graph(extract_subgraph(graph, result));
}

}  // namespace semgraph
