#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semgraph/ontology.hpp"

namespace semgraph {

using Attributes = std::map<std::string, std::string>;
using NodeIndex = std::uint32_t;
using TypeIndex = std::uint32_t;
using LinkTypeIndex = std::uint32_t;

// Separates accumulated values inside a single attribute (see prune_node).
inline constexpr char kMultiValueSeparator = '|';

struct NodeRecord {
  std::string id;
  std::string type;
  Attributes attributes;

  bool operator==(const NodeRecord&) const = default;
};

struct LinkRecord {
  std::string source;
  std::string target;
  std::string type;
  Attributes attributes;

  bool operator==(const LinkRecord&) const = default;
};

// Adjacency entry. Parallel link records between the same pair collapse into
// one entry; their link types and record count are kept here.
struct Neighbor {
  NodeIndex node;
  std::vector<LinkTypeIndex> link_types;  // sorted, distinct
  std::uint32_t multiplicity;

  bool has_link_type(LinkTypeIndex t) const;
};

// Immutable typed multigraph. Links are stored with their declared direction,
// the adjacency index is the undirected view used by every measure.
class SemanticGraph {
 public:
  SemanticGraph() = default;

  const OntologySchema& schema() const { return schema_; }
  const Attributes& metadata() const { return metadata_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t link_count() const { return links_.size(); }
  // Number of distinct unordered linked pairs.
  std::size_t pair_count() const { return pair_count_; }

  std::span<const NodeRecord> nodes() const { return nodes_; }
  const NodeRecord& node(NodeIndex i) const { return nodes_[i]; }
  std::span<const LinkRecord> links() const { return links_; }
  std::pair<NodeIndex, NodeIndex> link_endpoints(std::size_t link) const {
    return endpoints_[link];
  }

  std::optional<NodeIndex> find(std::string_view id) const;
  // Throws semgraph::Error for an unknown id.
  NodeIndex index_of(std::string_view id) const;

  // Distinct neighbors sorted by index.
  std::span<const Neighbor> neighbors(NodeIndex i) const {
    return adjacency_[i];
  }
  std::size_t degree(NodeIndex i) const { return adjacency_[i].size(); }
  const Neighbor* find_neighbor(NodeIndex i, NodeIndex j) const;
  bool adjacent(NodeIndex i, NodeIndex j) const {
    return find_neighbor(i, j) != nullptr;
  }

  // Node types are the schema's declared types in sorted order.
  std::span<const std::string> node_types() const { return type_names_; }
  std::optional<TypeIndex> type_index(std::string_view name) const;
  TypeIndex type_of(NodeIndex i) const { return node_type_[i]; }
  const std::string& type_name(TypeIndex t) const { return type_names_[t]; }
  // n_alpha
  std::size_t type_count(TypeIndex t) const { return type_counts_[t]; }

  // Declared link types plus any undeclared type used by a link record.
  std::span<const std::string> link_types() const { return link_type_names_; }
  const std::string& link_type_name(LinkTypeIndex t) const {
    return link_type_names_[t];
  }
  std::optional<LinkTypeIndex> link_type_index(std::string_view name) const;
  LinkTypeIndex link_type_of(std::size_t link) const {
    return link_type_[link];
  }

 private:
  friend SemanticGraph build_graph(std::vector<NodeRecord>,
                                   std::vector<LinkRecord>, OntologySchema,
                                   Attributes);

  OntologySchema schema_;
  Attributes metadata_;
  std::vector<NodeRecord> nodes_;
  std::vector<LinkRecord> links_;
  std::vector<std::pair<NodeIndex, NodeIndex>> endpoints_;
  std::vector<LinkTypeIndex> link_type_;
  std::map<std::string, NodeIndex, std::less<>> index_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::string> type_names_;
  std::vector<TypeIndex> node_type_;
  std::vector<std::size_t> type_counts_;
  std::vector<std::string> link_type_names_;
  std::size_t pair_count_ = 0;
};

// Builds the adjacency index. Throws semgraph::Error on a duplicate node id,
// a node type the schema does not declare, a missing link endpoint, or a
// self-loop. Conformance of link triples is checked separately by validate().
SemanticGraph build_graph(std::vector<NodeRecord> nodes,
                          std::vector<LinkRecord> links, OntologySchema schema,
                          Attributes metadata = {});

struct Violation {
  enum class Kind { UndeclaredNodeType, DisallowedLink };

  Kind kind;
  std::size_t index;  // node index or link index, per kind
  std::string message;
};

// Every node whose type the schema lacks and every link whose
// (t(source), link type, t(target)) triple is allowed in neither orientation.
std::vector<Violation> validate(const SemanticGraph& graph,
                                const OntologySchema& schema);

// k_{alpha beta}(i): neighbors of i having node type beta.
std::size_t neighbors_by_type(const SemanticGraph& graph, NodeIndex i,
                              TypeIndex beta);
std::size_t neighbors_by_type(const SemanticGraph& graph, std::string_view id,
                              std::string_view beta);

// V(alpha); thin wrapper over the schema for symmetry with the graph queries.
OntologySchema::NameSet allowed_neighbor_types(const OntologySchema& schema,
                                               std::string_view alpha);

// Appends value to a possibly multi-valued attribute.
void append_attribute(Attributes& attributes, const std::string& key,
                      const std::string& value);

}  // namespace semgraph
