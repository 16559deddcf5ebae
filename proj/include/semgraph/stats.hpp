#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semgraph/graph.hpp"
#include "semgraph/ontology.hpp"

namespace semgraph {

// ---------------------------------------------------------------------------
// Clustering
// ---------------------------------------------------------------------------

// E_i: linked pairs among the distinct neighbors of i.
std::size_t linked_neighbor_pairs(const SemanticGraph& graph, NodeIndex i);

// C(i) = E_i / (k_i (k_i - 1) / 2), and 0 when k_i <= 1.
double clustering_coefficient(const SemanticGraph& graph, NodeIndex i);
double clustering_coefficient(const SemanticGraph& graph, std::string_view id);

// Mean of C(i) over all nodes, zeros included. Throws on an empty graph.
double graph_clustering(const SemanticGraph& graph);

// Global ratio sum_i E_i / sum_i k_i (k_i - 1) / 2 (closed over connected
// triples). Throws when the graph has no connected triple.
double transitivity(const SemanticGraph& graph);

// E(i; alpha): neighbor pairs whose node types the schema allows to be linked
// by some link type in either orientation.
std::size_t allowed_neighbor_pairs(const SemanticGraph& graph,
                                   const OntologySchema& schema, NodeIndex i);

// C(i; alpha) = E_i / E(i; alpha), and 0 when E(i; alpha) = 0. Only linked
// pairs whose types are allowed are counted in the numerator, so the value
// stays in [0, 1] even on a graph that fails validation.
double semantic_clustering(const SemanticGraph& graph,
                           const OntologySchema& schema, NodeIndex i);
double semantic_clustering(const SemanticGraph& graph,
                           const OntologySchema& schema, std::string_view id);

// ---------------------------------------------------------------------------
// Per-type connectivity and disparity
// ---------------------------------------------------------------------------

// How Y^r_2 normalizes neighbor-type populations.
enum class RandomBaseline {
  kLiteral,     // sum over V(alpha) of (n_beta / n)^2
  kNormalized,  // sum over V(alpha) of (n_beta / sum_{gamma in V(alpha)} n_gamma)^2
};

std::string_view to_string(RandomBaseline mode);
std::optional<RandomBaseline> parse_random_baseline(std::string_view text);

// Undefined quantities are std::nullopt, never zero.
struct TypeStats {
  std::string type;
  std::size_t count = 0;        // n_alpha
  std::size_t base_degree = 0;  // k0_alpha

  // Connectivity part.
  std::optional<double> mean_degree;         // mean k_alpha
  std::optional<double> mean_square_degree;  // mean k_alpha^2
  std::optional<double> connectivity;        // m_alpha
  std::optional<double> connectivity_dispersion;  // sigma^k_alpha

  // Disparity part; averages run over nodes of degree >= 1.
  std::size_t disparity_samples = 0;
  std::optional<double> mean_disparity;        // mean Y_2(i; alpha)
  std::optional<double> disparity_dispersion;  // sigma^Y_alpha
  std::optional<double> random_disparity;      // Y^r_2
  std::optional<double> disparity_ratio;       // R(alpha)
  std::optional<double> ratio_dispersion;      // sigma^R_alpha
};

struct TypeStatsReport {
  RandomBaseline baseline = RandomBaseline::kLiteral;
  std::vector<TypeStats> types;  // sorted by type name

  const TypeStats* find(std::string_view type) const;
};

// n_alpha, mean k, m_alpha, sigma^k_alpha. m and sigma^k are undefined when
// k0_alpha = 0; every connectivity field is undefined when n_alpha = 0.
TypeStatsReport type_degree_stats(const SemanticGraph& graph,
                                  const OntologySchema& schema);

// Y_2(i; alpha) = sum_beta (k_{alpha beta}(i) / k_alpha(i))^2.
// Throws UndefinedValueError for a node of degree 0.
double disparity(const SemanticGraph& graph, NodeIndex i);
double disparity(const SemanticGraph& graph, std::string_view id);

// Mean and dispersion of Y_2 per type, Y^r_2 under `baseline`, R and sigma^R.
TypeStatsReport type_disparity(const SemanticGraph& graph,
                               const OntologySchema& schema,
                               RandomBaseline baseline);

// Both parts in one report.
TypeStatsReport type_stats(const SemanticGraph& graph,
                           const OntologySchema& schema,
                           RandomBaseline baseline);

struct DegreeDistribution {
  std::string type;
  std::map<std::size_t, std::size_t> frequency;  // degree -> node count

  std::size_t total() const;
  std::optional<double> mean() const;
};

// Exact histogram of degrees over nodes of type alpha. Throws for an
// undeclared type.
DegreeDistribution degree_distribution(const SemanticGraph& graph,
                                       std::string_view alpha);

// ---------------------------------------------------------------------------
// Path lengths
// ---------------------------------------------------------------------------

inline constexpr std::uint32_t kUnreachable = ~std::uint32_t{0};

// Hop distances from `source` on the undirected view; kUnreachable when cut
// off. Nodes with removed[i] set are neither visited nor traversed.
std::vector<std::uint32_t> bfs_distances(const SemanticGraph& graph,
                                         NodeIndex source,
                                         const std::vector<bool>* removed =
                                             nullptr);

struct PathCell {
  std::uint64_t distance_sum = 0;
  std::uint64_t reachable = 0;    // ordered pairs i != j with finite distance
  std::uint64_t unreachable = 0;  // ordered pairs with no path

  std::optional<double> mean() const;
};

// l_{alpha beta}: mean shortest-path length from alpha nodes to beta nodes.
struct PathMatrix {
  std::vector<std::string> types;
  std::vector<PathCell> cells;  // row-major, types.size()^2

  const PathCell& at(std::size_t alpha, std::size_t beta) const {
    return cells[alpha * types.size() + beta];
  }
  const PathCell& at(std::string_view alpha, std::string_view beta) const;
};

PathMatrix path_length_matrix(const SemanticGraph& graph);

// Effect of deleting every node of one type on the distances among the
// nodes that remain.
struct TypeRemovalImpact {
  std::string type;
  std::size_t removed_nodes = 0;
  // Mean distance over surviving ordered pairs that were connected before.
  std::optional<double> baseline_mean;
  // Mean distance over surviving ordered pairs still connected afterwards.
  std::optional<double> removed_mean;
  // removed_mean - baseline_mean when both exist.
  std::optional<double> change;
  // Surviving ordered pairs connected before and cut off afterwards.
  std::uint64_t disconnected_pairs = 0;
  // Removal lengthens paths or cuts some pair off: the type acts as a
  // path-shortening hub.
  bool flagged = false;
};

std::vector<TypeRemovalImpact> type_removal_impact(const SemanticGraph& graph);

}  // namespace semgraph
