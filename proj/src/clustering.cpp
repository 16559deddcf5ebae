#include <numeric>

#include "internal.hpp"
#include "semgraph/error.hpp"
#include "semgraph/stats.hpp"

namespace semgraph {

namespace detail {

TypePairMask::TypePairMask(const SemanticGraph& graph,
                           const OntologySchema& schema)
    : size_(graph.node_types().size()), bits_(size_ * size_, false) {
  for (TypeIndex a = 0; a < size_; ++a)
    for (TypeIndex b = a; b < size_; ++b) {
      bool ok = schema.allows_pair(graph.type_name(a), graph.type_name(b));
      bits_[a * size_ + b] = ok;
      bits_[b * size_ + a] = ok;
    }
}

double clustering_with(const SemanticGraph& graph, const TypePairMask& mask,
                       NodeIndex i) {
  std::vector<std::size_t> by_type(graph.node_types().size(), 0);
  for (const auto& n : graph.neighbors(i)) ++by_type[graph.type_of(n.node)];
  std::size_t possible = 0;
  for (TypeIndex a = 0; a < by_type.size(); ++a) {
    if (by_type[a] == 0) continue;
    if (mask.allowed(a, a)) possible += by_type[a] * (by_type[a] - 1) / 2;
    for (TypeIndex b = a + 1; b < by_type.size(); ++b)
      if (mask.allowed(a, b)) possible += by_type[a] * by_type[b];
  }
  if (possible == 0) return 0.0;
  std::size_t linked = 0;
  for_each_linked_neighbor_pair(graph, i, [&](NodeIndex j, NodeIndex k) {
    if (mask.allowed(graph.type_of(j), graph.type_of(k))) ++linked;
  });
  return static_cast<double>(linked) / static_cast<double>(possible);
}

}  // namespace detail

std::size_t linked_neighbor_pairs(const SemanticGraph& graph, NodeIndex i) {
  std::size_t count = 0;
  detail::for_each_linked_neighbor_pair(graph, i,
                                        [&](NodeIndex, NodeIndex) { ++count; });
  return count;
}

double clustering_coefficient(const SemanticGraph& graph, NodeIndex i) {
  std::size_t k = graph.degree(i);
  if (k <= 1) return 0.0;
  auto pairs = static_cast<double>(k * (k - 1) / 2);
  return static_cast<double>(linked_neighbor_pairs(graph, i)) / pairs;
}

double clustering_coefficient(const SemanticGraph& graph, std::string_view id) {
  return clustering_coefficient(graph, graph.index_of(id));
}

double graph_clustering(const SemanticGraph& graph) {
  if (graph.node_count() == 0)
    throw Error("clustering of an empty graph is undefined");
  double sum = 0.0;
  for (NodeIndex i = 0; i < graph.node_count(); ++i)
    sum += clustering_coefficient(graph, i);
  return sum / static_cast<double>(graph.node_count());
}

double transitivity(const SemanticGraph& graph) {
  std::uint64_t closed = 0;
  std::uint64_t triples = 0;
  for (NodeIndex i = 0; i < graph.node_count(); ++i) {
    std::uint64_t k = graph.degree(i);
    if (k < 2) continue;
    triples += k * (k - 1) / 2;
    closed += linked_neighbor_pairs(graph, i);
  }
  if (triples == 0)
    throw Error("transitivity is undefined without connected triples");
  return static_cast<double>(closed) / static_cast<double>(triples);
}

std::size_t allowed_neighbor_pairs(const SemanticGraph& graph,
                                   const OntologySchema& schema, NodeIndex i) {
  detail::TypePairMask mask(graph, schema);
  auto ni = graph.neighbors(i);
  std::size_t count = 0;
  for (std::size_t a = 0; a < ni.size(); ++a)
    for (std::size_t b = a + 1; b < ni.size(); ++b)
      if (mask.allowed(graph.type_of(ni[a].node), graph.type_of(ni[b].node)))
        ++count;
  return count;
}

double semantic_clustering(const SemanticGraph& graph,
                           const OntologySchema& schema, NodeIndex i) {
  return detail::clustering_with(graph, detail::TypePairMask(graph, schema), i);
}

double semantic_clustering(const SemanticGraph& graph,
                           const OntologySchema& schema, std::string_view id) {
  return semantic_clustering(graph, schema, graph.index_of(id));
}

}  // namespace semgraph
