#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace semgraph {

// One allowed relation (source node type, link type, target node type).
struct Triple {
  std::string source;
  std::string link;
  std::string target;

  auto operator<=>(const Triple&) const = default;
};

// The auxiliary graph over node types declaring which typed links may exist.
// Triples are kept as declared but are matched in either orientation, since
// every measure works on the undirected view.
class OntologySchema {
 public:
  using NameSet = std::set<std::string, std::less<>>;

  void add_node_type(std::string name);
  void add_link_type(std::string name);

  // Registers an allowed triple. Both node types must already be declared;
  // the link type is declared implicitly.
  void allow(std::string source, std::string link, std::string target);

  bool has_node_type(std::string_view name) const;
  bool has_link_type(std::string_view name) const;

  // Triple present in either orientation.
  bool allows(std::string_view source, std::string_view link,
              std::string_view target) const;
  // Some link type connects the two node types, in either orientation.
  bool allows_pair(std::string_view a, std::string_view b) const;

  // V(alpha): node types that alpha may link to. Throws on unknown type.
  NameSet allowed_neighbor_types(std::string_view alpha) const;
  // k0_alpha = |V(alpha)|.
  std::size_t base_degree(std::string_view alpha) const;

  const NameSet& node_types() const { return node_types_; }
  const NameSet& link_types() const { return link_types_; }
  const std::set<Triple>& allowed() const { return allowed_; }

  bool operator==(const OntologySchema& other) const {
    return node_types_ == other.node_types_ &&
           link_types_ == other.link_types_ && allowed_ == other.allowed_;
  }

  // Single link type allowed between every pair of the given node types,
  // including self pairs.
  static OntologySchema complete(const std::set<std::string>& node_types,
                                 const std::string& link_type);

 private:
  NameSet node_types_;
  NameSet link_types_;
  std::set<Triple> allowed_;
  // Unordered node-type pairs (stored min, max) with at least one triple.
  std::set<std::pair<std::string, std::string>> pairs_;
};

}  // namespace semgraph
