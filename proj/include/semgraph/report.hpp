#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semgraph/graph.hpp"
#include "semgraph/relevance.hpp"
#include "semgraph/stats.hpp"

namespace semgraph {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { kTable, kStructured };

std::optional<OutputFormat> parse_output_format(std::string_view text);

// Command name plus every flag value, echoed at the top of each report.
struct Provenance {
  std::string command;
  std::vector<std::pair<std::string, std::string>> flags;
};

// Plain-text reports. Undefined values print as "undef".
std::string provenance_table(const Provenance& p);
// Columns in order: #, type, n_alpha, m_alpha, sigma^k_alpha, R(alpha),
// sigma^R_alpha. Three decimals.
std::string type_stats_table(const TypeStatsReport& report);
std::string violations_table(const std::vector<Violation>& violations);
std::string degree_distributions_table(
    const std::vector<DegreeDistribution>& dists);
std::string path_matrix_table(const PathMatrix& matrix);
std::string removal_impact_table(const std::vector<TypeRemovalImpact>& rows);
std::string node_relevance_table(const std::vector<NodeRelevance>& rows);
std::string link_type_relevance_table(
    const std::vector<LinkTypeRelevance>& rows);
std::string outliers_table(const std::vector<LinkOutlier>& rows);
std::string latent_links_table(const std::vector<LatentLink>& rows);
std::string pair_type_matrix_table(const PairTypeMatrix& m);

// Structured equivalents; undefined values are null.
nlohmann::ordered_json to_json(const Provenance& p);
nlohmann::ordered_json to_json(const TypeStatsReport& report);
nlohmann::ordered_json to_json(const std::vector<Violation>& violations);
nlohmann::ordered_json to_json(const std::vector<DegreeDistribution>& dists);
nlohmann::ordered_json to_json(const PathMatrix& matrix);
nlohmann::ordered_json to_json(const std::vector<TypeRemovalImpact>& rows);
nlohmann::ordered_json to_json(const std::vector<NodeRelevance>& rows);
nlohmann::ordered_json to_json(const std::vector<LinkTypeRelevance>& rows);
nlohmann::ordered_json to_json(const std::vector<LinkOutlier>& rows);
nlohmann::ordered_json to_json(const std::vector<LatentLink>& rows);
nlohmann::ordered_json to_json(const PairTypeMatrix& m);

}  // namespace semgraph
