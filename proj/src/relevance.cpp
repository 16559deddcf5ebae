#include "semgraph/relevance.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <tuple>

#include "internal.hpp"
#include "semgraph/error.hpp"
#include "semgraph/stats.hpp"

namespace semgraph {

namespace {

void check_tau(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::invalid_argument("threshold tau must lie in [0, 1]");
}

double plain_ratio(std::size_t linked, std::size_t degree) {
  if (degree <= 1) return 0.0;
  return static_cast<double>(linked) /
         static_cast<double>(degree * (degree - 1) / 2);
}

NodeRelevance evaluate(const SemanticGraph& graph,
                       const detail::TypePairMask* mask, NodeIndex i,
                       double tau, RelevanceMode mode, const NodeSet& useful) {
  double value = 0.0;
  switch (mode) {
    case RelevanceMode::kPlain:
      value = clustering_coefficient(graph, i);
      break;
    case RelevanceMode::kSemantic:
      value = detail::clustering_with(graph, *mask, i);
      break;
    case RelevanceMode::kWeakTwoHop:
      value = plain_ratio(weak_linked_neighbor_pairs(graph, i, useful),
                          graph.degree(i));
      break;
  }
  return {graph.node(i).id, mode, value, tau, value > tau};
}

std::pair<std::size_t, std::size_t> neighborhood_overlap(
    const SemanticGraph& graph, NodeIndex a, NodeIndex b) {
  auto na = graph.neighbors(a);
  auto nb = graph.neighbors(b);
  std::size_t common = 0, total = 0;
  auto x = na.begin();
  auto y = nb.begin();
  auto excluded = [&](NodeIndex w) { return w == a || w == b; };
  while (x != na.end() || y != nb.end()) {
    NodeIndex w;
    if (y == nb.end() || (x != na.end() && x->node < y->node)) {
      w = (x++)->node;
    } else if (x == na.end() || y->node < x->node) {
      w = (y++)->node;
    } else {
      w = x->node;
      ++x;
      ++y;
      if (!excluded(w)) ++common;
    }
    if (!excluded(w)) ++total;
  }
  return {common, total};
}

double score_of(std::size_t common, std::size_t total) {
  return total == 0 ? 0.0
                    : static_cast<double>(common) / static_cast<double>(total);
}

std::vector<double> link_scores(const SemanticGraph& graph) {
  std::vector<double> scores(graph.link_count());
  for (std::size_t l = 0; l < graph.link_count(); ++l) {
    auto [s, t] = graph.link_endpoints(l);
    auto [common, total] = neighborhood_overlap(graph, s, t);
    scores[l] = score_of(common, total);
  }
  return scores;
}

struct Moments {
  std::vector<std::size_t> members;
  double mean = 0.0;
  double stddev = 0.0;
};

std::map<std::string, Moments> moments_by_type(
    const SemanticGraph& graph, const std::vector<double>& scores) {
  std::map<std::string, Moments> groups;
  for (std::size_t l = 0; l < graph.link_count(); ++l)
    groups[graph.links()[l].type].members.push_back(l);
  for (auto& [type, g] : groups) {
    double sum = 0.0;
    for (auto l : g.members) sum += scores[l];
    g.mean = sum / static_cast<double>(g.members.size());
    double dev = 0.0;
    for (auto l : g.members) dev += (scores[l] - g.mean) * (scores[l] - g.mean);
    g.stddev = std::sqrt(dev / static_cast<double>(g.members.size()));
  }
  return groups;
}

}  // namespace

std::string_view to_string(RelevanceMode mode) {
  switch (mode) {
    case RelevanceMode::kPlain:
      return "plain";
    case RelevanceMode::kSemantic:
      return "semantic";
    case RelevanceMode::kWeakTwoHop:
      return "weak-2hop";
  }
  return "plain";
}

std::optional<RelevanceMode> parse_relevance_mode(std::string_view text) {
  if (text == "plain") return RelevanceMode::kPlain;
  if (text == "semantic") return RelevanceMode::kSemantic;
  if (text == "weak-2hop") return RelevanceMode::kWeakTwoHop;
  return std::nullopt;
}

std::size_t weak_linked_neighbor_pairs(const SemanticGraph& graph, NodeIndex i,
                                       const NodeSet& useful) {
  auto ni = graph.neighbors(i);
  auto position = [&](NodeIndex v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(
        ni.begin(), ni.end(), v,
        [](const Neighbor& n, NodeIndex value) { return n.node < value; });
    if (it == ni.end() || it->node != v) return std::nullopt;
    return static_cast<std::size_t>(it - ni.begin());
  };

  std::size_t count = 0;
  std::vector<bool> related(ni.size());
  for (std::size_t a = 0; a < ni.size(); ++a) {
    std::fill(related.begin(), related.end(), false);
    NodeIndex j = ni[a].node;
    for (const auto& u : graph.neighbors(j)) {
      if (u.node == i) continue;
      if (auto p = position(u.node); p && *p > a) related[*p] = true;
      if (!useful.count(u.node)) continue;
      for (const auto& v : graph.neighbors(u.node))
        if (auto p = position(v.node); p && *p > a) related[*p] = true;
    }
    count += static_cast<std::size_t>(
        std::count(related.begin(), related.end(), true));
  }
  return count;
}

NodeRelevance node_relevance(const SemanticGraph& graph,
                             const OntologySchema& schema, NodeIndex i,
                             double tau, RelevanceMode mode,
                             const NodeSet& useful) {
  check_tau(tau);
  if (mode == RelevanceMode::kSemantic) {
    detail::TypePairMask mask(graph, schema);
    return evaluate(graph, &mask, i, tau, mode, useful);
  }
  return evaluate(graph, nullptr, i, tau, mode, useful);
}

NodeRelevance node_relevance(const SemanticGraph& graph,
                             const OntologySchema& schema, std::string_view id,
                             double tau, RelevanceMode mode,
                             const NodeSet& useful) {
  return node_relevance(graph, schema, graph.index_of(id), tau, mode, useful);
}

std::vector<NodeRelevance> all_node_relevance(const SemanticGraph& graph,
                                              const OntologySchema& schema,
                                              double tau, RelevanceMode mode,
                                              const NodeSet& useful) {
  check_tau(tau);
  std::optional<detail::TypePairMask> mask;
  if (mode == RelevanceMode::kSemantic) mask.emplace(graph, schema);
  std::vector<NodeRelevance> out;
  out.reserve(graph.node_count());
  for (NodeIndex i = 0; i < graph.node_count(); ++i)
    out.push_back(evaluate(graph, mask ? &*mask : nullptr, i, tau, mode,
                           useful));
  return out;
}

NodeSet useful_nodes(const SemanticGraph& graph, const OntologySchema& schema,
                     double tau, RelevanceMode mode) {
  if (mode == RelevanceMode::kWeakTwoHop)
    throw std::invalid_argument(
        "useful_nodes takes the plain or semantic mode");
  NodeSet out;
  auto all = all_node_relevance(graph, schema, tau, mode);
  for (NodeIndex i = 0; i < all.size(); ++i)
    if (all[i].useful) out.insert(i);
  return out;
}

std::size_t PairTypeMatrix::at(std::string_view t1, std::string_view t2) const {
  if (t2 < t1) std::swap(t1, t2);
  auto it = counts.find({std::string(t1), std::string(t2)});
  return it == counts.end() ? 0 : it->second;
}

std::size_t PairTypeMatrix::total() const {
  std::size_t n = 0;
  for (const auto& [key, c] : counts) n += c;
  return n;
}

PairTypeMatrix pair_type_matrix(const SemanticGraph& graph, NodeIndex i) {
  PairTypeMatrix m{graph.node(i).id, {}};
  std::set<std::pair<LinkTypeIndex, LinkTypeIndex>> seen;
  detail::for_each_linked_neighbor_pair(
      graph, i, [&](NodeIndex j, NodeIndex k) {
        const auto* via_j = graph.find_neighbor(i, j);
        const auto* via_k = graph.find_neighbor(i, k);
        seen.clear();
        for (auto t1 : via_j->link_types)
          for (auto t2 : via_k->link_types)
            seen.insert({std::min(t1, t2), std::max(t1, t2)});
        for (auto [t1, t2] : seen)
          ++m.counts[{graph.link_type_name(t1), graph.link_type_name(t2)}];
      });
  return m;
}

PairTypeMatrix pair_type_matrix(const SemanticGraph& graph,
                                std::string_view id) {
  return pair_type_matrix(graph, graph.index_of(id));
}

LinkRelevance link_relevance(const SemanticGraph& graph, NodeIndex a,
                             NodeIndex b) {
  if (a == b)
    throw std::invalid_argument("link relevance needs two distinct nodes");
  auto [common, total] = neighborhood_overlap(graph, a, b);
  return {graph.node(a).id, graph.node(b).id, common, total,
          score_of(common, total)};
}

LinkRelevance link_relevance(const SemanticGraph& graph, std::string_view a,
                             std::string_view b) {
  return link_relevance(graph, graph.index_of(a), graph.index_of(b));
}

std::vector<LinkTypeRelevance> link_type_relevance(const SemanticGraph& graph) {
  auto scores = link_scores(graph);
  std::vector<LinkTypeRelevance> out;
  for (const auto& [type, g] : moments_by_type(graph, scores))
    out.push_back({type, g.members.size(), g.mean, g.stddev});
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.mean < y.mean; });
  return out;
}

std::vector<LinkOutlier> relevance_outliers(const SemanticGraph& graph,
                                            double z, std::size_t min_links) {
  if (!(z > 0.0))
    throw std::invalid_argument("deviation factor z must be positive");
  auto scores = link_scores(graph);
  std::vector<LinkOutlier> out;
  for (const auto& [type, g] : moments_by_type(graph, scores)) {
    if (g.members.size() < min_links || g.stddev == 0.0) continue;
    for (auto l : g.members) {
      double dev = (scores[l] - g.mean) / g.stddev;
      if (std::abs(dev) <= z) continue;
      const auto& rec = graph.links()[l];
      out.push_back({l, rec.source, rec.target, type, scores[l], g.mean,
                     g.stddev, dev});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (std::abs(x.deviation) != std::abs(y.deviation))
      return std::abs(x.deviation) > std::abs(y.deviation);
    return std::tie(x.link_type, x.source, x.target, x.link) <
           std::tie(y.link_type, y.source, y.target, y.link);
  });
  return out;
}

std::vector<LatentLink> latent_links(const SemanticGraph& graph,
                                     double min_score,
                                     const OntologySchema& schema) {
  if (!(min_score > 0.0 && min_score <= 1.0))
    throw std::invalid_argument("min_score must lie in (0, 1]");
  detail::TypePairMask mask(graph, schema);
  std::vector<LatentLink> out;
  std::vector<NodeIndex> stamp(graph.node_count(), kUnreachable);
  for (NodeIndex a = 0; a < graph.node_count(); ++a) {
    // Only pairs sharing a neighbor can reach a positive score.
    for (const auto& w : graph.neighbors(a)) {
      for (const auto& b : graph.neighbors(w.node)) {
        if (b.node <= a || stamp[b.node] == a) continue;
        stamp[b.node] = a;
        if (graph.adjacent(a, b.node)) continue;
        if (!mask.allowed(graph.type_of(a), graph.type_of(b.node))) continue;
        auto [common, total] = neighborhood_overlap(graph, a, b.node);
        double s = score_of(common, total);
        if (s < min_score) continue;
        auto ida = graph.node(a).id;
        auto idb = graph.node(b.node).id;
        if (idb < ida) std::swap(ida, idb);
        out.push_back({std::move(ida), std::move(idb), common, total, s});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.score != y.score) return x.score > y.score;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

SemanticGraph prune_node(const SemanticGraph& graph, std::string_view id,
                         const std::string& attribute_name) {
  NodeIndex victim = graph.index_of(id);
  if (attribute_name.empty())
    throw std::invalid_argument("prune needs a non-empty attribute name");
  std::vector<NodeRecord> nodes;
  nodes.reserve(graph.node_count() - 1);
  for (NodeIndex i = 0; i < graph.node_count(); ++i) {
    if (i == victim) continue;
    nodes.push_back(graph.node(i));
    if (graph.adjacent(victim, i))
      append_attribute(nodes.back().attributes, attribute_name,
                       graph.node(victim).id);
  }
  std::vector<LinkRecord> links;
  for (std::size_t l = 0; l < graph.link_count(); ++l) {
    auto [s, t] = graph.link_endpoints(l);
    if (s != victim && t != victim) links.push_back(graph.links()[l]);
  }
  return build_graph(std::move(nodes), std::move(links), graph.schema(),
                     graph.metadata());
}

}  // namespace semgraph
