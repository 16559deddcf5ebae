#include "semgraph/graph.hpp"

#include <algorithm>

#include "semgraph/error.hpp"

namespace semgraph {

bool Neighbor::has_link_type(LinkTypeIndex t) const {
  return std::binary_search(link_types.begin(), link_types.end(), t);
}

std::optional<NodeIndex> SemanticGraph::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex SemanticGraph::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) throw Error("unknown node id '" + std::string(id) + "'");
  return *found;
}

const Neighbor* SemanticGraph::find_neighbor(NodeIndex i, NodeIndex j) const {
  const auto& adj = adjacency_[i];
  auto it = std::lower_bound(
      adj.begin(), adj.end(), j,
      [](const Neighbor& n, NodeIndex value) { return n.node < value; });
  if (it == adj.end() || it->node != j) return nullptr;
  return &*it;
}

std::optional<TypeIndex> SemanticGraph::type_index(std::string_view name) const {
  auto it = std::lower_bound(type_names_.begin(), type_names_.end(), name);
  if (it == type_names_.end() || *it != name) return std::nullopt;
  return static_cast<TypeIndex>(it - type_names_.begin());
}

std::optional<LinkTypeIndex> SemanticGraph::link_type_index(
    std::string_view name) const {
  auto it = std::lower_bound(link_type_names_.begin(), link_type_names_.end(),
                             name);
  if (it == link_type_names_.end() || *it != name) return std::nullopt;
  return static_cast<LinkTypeIndex>(it - link_type_names_.begin());
}

SemanticGraph build_graph(std::vector<NodeRecord> nodes,
                          std::vector<LinkRecord> links, OntologySchema schema,
                          Attributes metadata) {
  SemanticGraph g;
  g.type_names_.assign(schema.node_types().begin(), schema.node_types().end());
  g.type_counts_.assign(g.type_names_.size(), 0);

  g.node_type_.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& rec = nodes[i];
    if (rec.id.empty()) throw Error("node with empty id");
    auto t = std::lower_bound(g.type_names_.begin(), g.type_names_.end(),
                              rec.type);
    if (t == g.type_names_.end() || *t != rec.type)
      throw Error("node '" + rec.id + "' has undeclared type '" + rec.type +
                  "'");
    auto [it, inserted] =
        g.index_.emplace(rec.id, static_cast<NodeIndex>(i));
    if (!inserted) throw Error("duplicate node id '" + rec.id + "'");
    auto type = static_cast<TypeIndex>(t - g.type_names_.begin());
    g.node_type_.push_back(type);
    ++g.type_counts_[type];
  }

  std::set<std::string, std::less<>> link_names(schema.link_types().begin(),
                                                schema.link_types().end());
  for (const auto& l : links) link_names.insert(l.type);
  g.link_type_names_.assign(link_names.begin(), link_names.end());

  // Collect (u, v, type) in both directions, then collapse per pair.
  struct HalfEdge {
    NodeIndex from;
    NodeIndex to;
    LinkTypeIndex type;
  };
  std::vector<HalfEdge> half;
  half.reserve(2 * links.size());
  g.endpoints_.reserve(links.size());
  g.link_type_.reserve(links.size());
  for (const auto& l : links) {
    auto s = g.index_.find(l.source);
    if (s == g.index_.end())
      throw Error("link endpoint '" + l.source + "' does not exist");
    auto t = g.index_.find(l.target);
    if (t == g.index_.end())
      throw Error("link endpoint '" + l.target + "' does not exist");
    if (s->second == t->second)
      throw Error("self-loop on node '" + l.source + "' is not allowed");
    if (l.type.empty())
      throw Error("link " + l.source + "-" + l.target + " has empty type");
    auto type = static_cast<LinkTypeIndex>(
        std::lower_bound(g.link_type_names_.begin(), g.link_type_names_.end(),
                         l.type) -
        g.link_type_names_.begin());
    g.endpoints_.emplace_back(s->second, t->second);
    g.link_type_.push_back(type);
    half.push_back({s->second, t->second, type});
    half.push_back({t->second, s->second, type});
  }
  std::sort(half.begin(), half.end(), [](const HalfEdge& a, const HalfEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.type < b.type;
  });

  g.adjacency_.assign(nodes.size(), {});
  for (const auto& h : half) {
    auto& adj = g.adjacency_[h.from];
    if (adj.empty() || adj.back().node != h.to) {
      adj.push_back({h.to, {h.type}, 1});
      continue;
    }
    auto& entry = adj.back();
    ++entry.multiplicity;
    if (entry.link_types.back() != h.type) entry.link_types.push_back(h.type);
  }
  std::size_t degree_sum = 0;
  for (const auto& adj : g.adjacency_) degree_sum += adj.size();
  g.pair_count_ = degree_sum / 2;

  g.nodes_ = std::move(nodes);
  g.links_ = std::move(links);
  g.schema_ = std::move(schema);
  g.metadata_ = std::move(metadata);
  return g;
}

std::vector<Violation> validate(const SemanticGraph& graph,
                                const OntologySchema& schema) {
  std::vector<Violation> out;
  for (NodeIndex i = 0; i < graph.node_count(); ++i) {
    const auto& n = graph.node(i);
    if (!schema.has_node_type(n.type))
      out.push_back({Violation::Kind::UndeclaredNodeType, i,
                     "node '" + n.id + "' has undeclared type '" + n.type +
                         "'"});
  }
  for (std::size_t l = 0; l < graph.link_count(); ++l) {
    const auto& link = graph.links()[l];
    auto [s, t] = graph.link_endpoints(l);
    const auto& st = graph.node(s).type;
    const auto& tt = graph.node(t).type;
    if (!schema.allows(st, link.type, tt))
      out.push_back({Violation::Kind::DisallowedLink, l,
                     "link " + link.source + " -" + link.type + "- " +
                         link.target + " (" + st + "," + link.type + "," + tt +
                         ") is not allowed by the ontology"});
  }
  return out;
}

std::size_t neighbors_by_type(const SemanticGraph& graph, NodeIndex i,
                              TypeIndex beta) {
  std::size_t count = 0;
  for (const auto& n : graph.neighbors(i))
    if (graph.type_of(n.node) == beta) ++count;
  return count;
}

std::size_t neighbors_by_type(const SemanticGraph& graph, std::string_view id,
                              std::string_view beta) {
  NodeIndex i = graph.index_of(id);
  auto t = graph.type_index(beta);
  if (!t) throw Error("unknown node type '" + std::string(beta) + "'");
  return neighbors_by_type(graph, i, *t);
}

OntologySchema::NameSet allowed_neighbor_types(const OntologySchema& schema,
                                               std::string_view alpha) {
  return schema.allowed_neighbor_types(alpha);
}

void append_attribute(Attributes& attributes, const std::string& key,
                      const std::string& value) {
  auto [it, inserted] = attributes.emplace(key, value);
  if (!inserted) {
    if (!it->second.empty()) it->second += kMultiValueSeparator;
    it->second += value;
  }
}

}  // namespace semgraph
