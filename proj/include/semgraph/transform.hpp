#pragma once

#include <map>
#include <string>
#include <string_view>

#include "semgraph/graph.hpp"
#include "semgraph/ontology.hpp"

namespace semgraph {

// original node type -> coarse node type
using TypeMergeMap = std::map<std::string, std::string, std::less<>>;

// One `old=new` pair per line; blank lines and `#` comments are skipped.
TypeMergeMap parse_merge_map(std::string_view text,
                             std::string_view file = "<merge map>");

inline constexpr const char* kOriginalTypeAttribute = "original_type";

struct CoarseGraph {
  SemanticGraph graph;
  OntologySchema schema;
};

// Relabels node types and ontology triples through the map. Node instances
// are kept as they are; each node records its finest type under
// `original_type` unless it already carries one. Throws when the map does
// not cover every schema node type.
CoarseGraph coarsen(const SemanticGraph& graph, const OntologySchema& schema,
                    const TypeMergeMap& merge_map);

inline constexpr const char* kSharedCountAttribute = "shared";
inline constexpr const char* kViaAttribute = "via";

// Link type used for projected links onto `via_type`.
std::string projection_link_type(std::string_view via_type);

// Single-type graph on the keep_type nodes: u and v are linked when they
// share at least one via_type neighbor. Each projected link carries the
// shared count and the '|' separated via node ids. Throws when the two types
// coincide or when a link joins two nodes of the same of the two types.
SemanticGraph one_mode_projection(const SemanticGraph& graph,
                                  std::string_view keep_type,
                                  std::string_view via_type);

}  // namespace semgraph
