#include <deque>

#include "semgraph/error.hpp"
#include "semgraph/stats.hpp"

namespace semgraph {

std::vector<std::uint32_t> bfs_distances(const SemanticGraph& graph,
                                         NodeIndex source,
                                         const std::vector<bool>* removed) {
  std::vector<std::uint32_t> dist(graph.node_count(), kUnreachable);
  if (removed && (*removed)[source]) return dist;
  std::deque<NodeIndex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    NodeIndex u = queue.front();
    queue.pop_front();
    for (const auto& n : graph.neighbors(u)) {
      if (dist[n.node] != kUnreachable) continue;
      if (removed && (*removed)[n.node]) continue;
      dist[n.node] = dist[u] + 1;
      queue.push_back(n.node);
    }
  }
  return dist;
}

std::optional<double> PathCell::mean() const {
  if (reachable == 0) return std::nullopt;
  return static_cast<double>(distance_sum) / static_cast<double>(reachable);
}

const PathCell& PathMatrix::at(std::string_view alpha,
                               std::string_view beta) const {
  auto index = [&](std::string_view name) {
    for (std::size_t t = 0; t < types.size(); ++t)
      if (types[t] == name) return t;
    throw Error("unknown node type '" + std::string(name) + "'");
  };
  return at(index(alpha), index(beta));
}

PathMatrix path_length_matrix(const SemanticGraph& graph) {
  PathMatrix m;
  m.types.assign(graph.node_types().begin(), graph.node_types().end());
  m.cells.assign(m.types.size() * m.types.size(), {});
  for (NodeIndex s = 0; s < graph.node_count(); ++s) {
    auto dist = bfs_distances(graph, s);
    std::size_t row = graph.type_of(s) * m.types.size();
    for (NodeIndex t = 0; t < graph.node_count(); ++t) {
      if (t == s) continue;
      auto& cell = m.cells[row + graph.type_of(t)];
      if (dist[t] == kUnreachable) {
        ++cell.unreachable;
      } else {
        ++cell.reachable;
        cell.distance_sum += dist[t];
      }
    }
  }
  return m;
}

std::vector<TypeRemovalImpact> type_removal_impact(const SemanticGraph& graph) {
  std::vector<TypeRemovalImpact> out;
  for (TypeIndex alpha = 0; alpha < graph.node_types().size(); ++alpha) {
    TypeRemovalImpact impact;
    impact.type = graph.type_name(alpha);
    impact.removed_nodes = graph.type_count(alpha);

    std::vector<bool> removed(graph.node_count(), false);
    for (NodeIndex i = 0; i < graph.node_count(); ++i)
      removed[i] = graph.type_of(i) == alpha;

    std::uint64_t before_sum = 0, before_pairs = 0;
    std::uint64_t after_sum = 0, after_pairs = 0;
    for (NodeIndex s = 0; s < graph.node_count(); ++s) {
      if (removed[s]) continue;
      auto before = bfs_distances(graph, s);
      auto after = impact.removed_nodes ? bfs_distances(graph, s, &removed)
                                        : before;
      for (NodeIndex t = 0; t < graph.node_count(); ++t) {
        if (t == s || removed[t] || before[t] == kUnreachable) continue;
        before_sum += before[t];
        ++before_pairs;
        if (after[t] == kUnreachable) {
          ++impact.disconnected_pairs;
        } else {
          after_sum += after[t];
          ++after_pairs;
        }
      }
    }
    if (before_pairs)
      impact.baseline_mean = static_cast<double>(before_sum) /
                             static_cast<double>(before_pairs);
    if (after_pairs)
      impact.removed_mean =
          static_cast<double>(after_sum) / static_cast<double>(after_pairs);
    if (impact.baseline_mean && impact.removed_mean)
      impact.change = *impact.removed_mean - *impact.baseline_mean;
    impact.flagged =
        impact.disconnected_pairs > 0 || (impact.change && *impact.change > 0);
    out.push_back(std::move(impact));
  }
  return out;
}

}  // namespace semgraph
