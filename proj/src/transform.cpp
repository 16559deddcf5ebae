#include "semgraph/transform.hpp"

#include <algorithm>
#include <vector>

#include "semgraph/error.hpp"

namespace semgraph {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

TypeMergeMap parse_merge_map(std::string_view text, std::string_view file) {
  TypeMergeMap map;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw FileFormatError(std::string(file), number,
                            "expected old=new, got '" + std::string(line) +
                                "'");
    auto from = std::string(trim(line.substr(0, eq)));
    auto to = std::string(trim(line.substr(eq + 1)));
    if (from.empty() || to.empty())
      throw FileFormatError(std::string(file), number, "empty type name");
    if (!map.emplace(from, to).second)
      throw FileFormatError(std::string(file), number,
                            "type '" + from + "' mapped twice");
  }
  return map;
}

CoarseGraph coarsen(const SemanticGraph& graph, const OntologySchema& schema,
                    const TypeMergeMap& merge_map) {
  auto image = [&](const std::string& type) -> const std::string& {
    auto it = merge_map.find(type);
    if (it == merge_map.end())
      throw Error("merge map does not cover node type '" + type + "'");
    return it->second;
  };

  OntologySchema coarse;
  for (const auto& t : schema.node_types()) coarse.add_node_type(image(t));
  for (const auto& t : graph.node_types()) coarse.add_node_type(image(t));
  for (const auto& l : schema.link_types()) coarse.add_link_type(l);
  for (const auto& tr : schema.allowed())
    coarse.allow(image(tr.source), tr.link, image(tr.target));

  std::vector<NodeRecord> nodes(graph.nodes().begin(), graph.nodes().end());
  for (auto& n : nodes) {
    n.attributes.emplace(kOriginalTypeAttribute, n.type);
    n.type = image(n.type);
  }
  std::vector<LinkRecord> links(graph.links().begin(), graph.links().end());
  auto g = build_graph(std::move(nodes), std::move(links), coarse,
                       graph.metadata());
  return {std::move(g), std::move(coarse)};
}

std::string projection_link_type(std::string_view via_type) {
  return "shares-" + std::string(via_type);
}

SemanticGraph one_mode_projection(const SemanticGraph& graph,
                                  std::string_view keep_type,
                                  std::string_view via_type) {
  if (keep_type == via_type)
    throw Error("projection needs two distinct node types");
  auto keep = graph.type_index(keep_type);
  auto via = graph.type_index(via_type);
  if (!keep) throw Error("unknown node type '" + std::string(keep_type) + "'");
  if (!via) throw Error("unknown node type '" + std::string(via_type) + "'");

  for (std::size_t l = 0; l < graph.link_count(); ++l) {
    auto [s, t] = graph.link_endpoints(l);
    auto ts = graph.type_of(s), tt = graph.type_of(t);
    if ((ts == *keep && tt == *keep) || (ts == *via && tt == *via))
      throw Error("not bipartite between '" + std::string(keep_type) +
                  "' and '" + std::string(via_type) + "': link " +
                  graph.node(s).id + " - " + graph.node(t).id);
  }

  std::vector<NodeRecord> nodes;
  for (NodeIndex i = 0; i < graph.node_count(); ++i)
    if (graph.type_of(i) == *keep) nodes.push_back(graph.node(i));

  // (u, v) with u < v -> shared via nodes, in via index order.
  std::map<std::pair<NodeIndex, NodeIndex>, std::vector<NodeIndex>> shared;
  std::vector<NodeIndex> members;
  for (NodeIndex w = 0; w < graph.node_count(); ++w) {
    if (graph.type_of(w) != *via) continue;
    members.clear();
    for (const auto& n : graph.neighbors(w))
      if (graph.type_of(n.node) == *keep) members.push_back(n.node);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        shared[{members[a], members[b]}].push_back(w);
  }

  auto link_type = projection_link_type(via_type);
  std::vector<LinkRecord> links;
  links.reserve(shared.size());
  for (const auto& [pair, vias] : shared) {
    const auto* u = &graph.node(pair.first).id;
    const auto* v = &graph.node(pair.second).id;
    if (*v < *u) std::swap(u, v);
    std::string via_ids;
    std::vector<std::string> ids;
    for (auto w : vias) ids.push_back(graph.node(w).id);
    std::sort(ids.begin(), ids.end());
    for (const auto& id : ids) {
      if (!via_ids.empty()) via_ids += kMultiValueSeparator;
      via_ids += id;
    }
    links.push_back({*u, *v, link_type,
                     {{kSharedCountAttribute, std::to_string(vias.size())},
                      {kViaAttribute, std::move(via_ids)}}});
  }

  OntologySchema schema;
  schema.add_node_type(std::string(keep_type));
  schema.allow(std::string(keep_type), link_type, std::string(keep_type));
  auto metadata = graph.metadata();
  metadata["projection"] =
      std::string(keep_type) + " via " + std::string(via_type);
  return build_graph(std::move(nodes), std::move(links), std::move(schema),
                     std::move(metadata));
}

}  // namespace semgraph
