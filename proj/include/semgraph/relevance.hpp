#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "semgraph/graph.hpp"
#include "semgraph/ontology.hpp"

namespace semgraph {

inline constexpr double kDefaultTau = 0.1;

enum class RelevanceMode {
  kPlain,       // C(i)
  kSemantic,    // C(i; alpha)
  kWeakTwoHop,  // C(i) with pairs joined through a useful third node
};

std::string_view to_string(RelevanceMode mode);
std::optional<RelevanceMode> parse_relevance_mode(std::string_view text);

using NodeSet = std::unordered_set<NodeIndex>;

struct NodeRelevance {
  std::string node;
  RelevanceMode mode;
  double value;
  double tau;
  bool useful;  // value > tau
};

// Pairs of neighbors of i that are linked, or that share a common neighbor
// u != i drawn from `useful`.
std::size_t weak_linked_neighbor_pairs(const SemanticGraph& graph, NodeIndex i,
                                       const NodeSet& useful);

// Requires 0 <= tau <= 1 (std::invalid_argument otherwise). `useful` is only
// read in weak two-hop mode: it is the set of nodes already deemed useful.
NodeRelevance node_relevance(const SemanticGraph& graph,
                             const OntologySchema& schema, NodeIndex i,
                             double tau, RelevanceMode mode,
                             const NodeSet& useful = {});
NodeRelevance node_relevance(const SemanticGraph& graph,
                             const OntologySchema& schema, std::string_view id,
                             double tau, RelevanceMode mode,
                             const NodeSet& useful = {});

// node_relevance for every node, in node index order.
std::vector<NodeRelevance> all_node_relevance(const SemanticGraph& graph,
                                              const OntologySchema& schema,
                                              double tau, RelevanceMode mode,
                                              const NodeSet& useful = {});

// Nodes whose plain or semantic value exceeds tau.
NodeSet useful_nodes(const SemanticGraph& graph, const OntologySchema& schema,
                     double tau, RelevanceMode mode);

// M(t1, t2) around a center node, keyed by the link-type pair with t1 <= t2.
struct PairTypeMatrix {
  std::string center;
  std::map<std::pair<std::string, std::string>, std::size_t> counts;

  std::size_t at(std::string_view t1, std::string_view t2) const;
  std::size_t total() const;
};

PairTypeMatrix pair_type_matrix(const SemanticGraph& graph, NodeIndex i);
PairTypeMatrix pair_type_matrix(const SemanticGraph& graph,
                                std::string_view id);

// S(a, b) = |N(a, b)| / |T(a, b)| on neighbor sets that exclude a and b.
struct LinkRelevance {
  std::string a;
  std::string b;
  std::size_t common = 0;  // |N(a, b)|
  std::size_t total = 0;   // |T(a, b)|
  double score = 0.0;      // 0 when T is empty
};

// a and b need not be adjacent. Throws std::invalid_argument when a == b.
LinkRelevance link_relevance(const SemanticGraph& graph, NodeIndex a,
                             NodeIndex b);
LinkRelevance link_relevance(const SemanticGraph& graph, std::string_view a,
                             std::string_view b);

struct LinkTypeRelevance {
  std::string link_type;
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population
};

// Mean S over every link record of each type present in the graph, ordered
// from least to most relevant (ties by name).
std::vector<LinkTypeRelevance> link_type_relevance(const SemanticGraph& graph);

inline constexpr std::size_t kMinOutlierSample = 5;

struct LinkOutlier {
  std::size_t link = 0;  // index into graph.links()
  std::string source;
  std::string target;
  std::string link_type;
  double score = 0.0;
  double type_mean = 0.0;
  double type_stddev = 0.0;
  double deviation = 0.0;  // (score - mean) / stddev
};

// Links whose S lies more than z standard deviations from their type's mean,
// in either direction. Types with fewer than min_links links or zero spread
// contribute nothing. Requires z > 0.
std::vector<LinkOutlier> relevance_outliers(
    const SemanticGraph& graph, double z,
    std::size_t min_links = kMinOutlierSample);

struct LatentLink {
  std::string a;  // a < b
  std::string b;
  std::size_t common = 0;
  std::size_t total = 0;
  double score = 0.0;
};

// Non-adjacent pairs the schema allows to be linked with S >= min_score,
// sorted by score descending, then by ids. Requires 0 < min_score <= 1.
std::vector<LatentLink> latent_links(const SemanticGraph& graph,
                                     double min_score,
                                     const OntologySchema& schema);

// Removes node i and every link touching it. Each former neighbor receives
// attribute_name = id of i, appended with '|' when the attribute already
// holds a value.
SemanticGraph prune_node(const SemanticGraph& graph, std::string_view id,
                         const std::string& attribute_name);

}  // namespace semgraph
