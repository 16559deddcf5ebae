#pragma once

#include <cstddef>
#include <vector>

#include "semgraph/graph.hpp"
#include "semgraph/ontology.hpp"

namespace semgraph::detail {

// Which pairs of the graph's node types a schema allows to be linked.
class TypePairMask {
 public:
  TypePairMask(const SemanticGraph& graph, const OntologySchema& schema);

  bool allowed(TypeIndex a, TypeIndex b) const {
    return bits_[a * size_ + b];
  }

 private:
  std::size_t size_;
  std::vector<bool> bits_;
};

// Calls fn(j, k) for every linked pair of distinct neighbors of i, j < k.
template <typename Fn>
void for_each_linked_neighbor_pair(const SemanticGraph& graph, NodeIndex i,
                                   Fn&& fn) {
  auto ni = graph.neighbors(i);
  for (const auto& nj : ni) {
    auto nn = graph.neighbors(nj.node);
    // Sorted merge of N(i) and N(j), restricted to k > j.
    auto a = ni.begin();
    auto b = nn.begin();
    while (a != ni.end() && b != nn.end()) {
      if (a->node < b->node) {
        ++a;
      } else if (b->node < a->node) {
        ++b;
      } else {
        if (a->node > nj.node) fn(nj.node, a->node);
        ++a;
        ++b;
      }
    }
  }
}

double clustering_with(const SemanticGraph& graph, const TypePairMask& mask,
                       NodeIndex i);

}  // namespace semgraph::detail
