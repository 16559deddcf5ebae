#include <cmath>

#include "semgraph/error.hpp"
#include "semgraph/stats.hpp"

namespace semgraph {

namespace {

__extension__ using Wide = unsigned __int128;

TypeStatsReport skeleton(const SemanticGraph& graph,
                         const OntologySchema& schema) {
  TypeStatsReport report;
  for (TypeIndex t = 0; t < graph.node_types().size(); ++t) {
    TypeStats row;
    row.type = graph.type_name(t);
    row.count = graph.type_count(t);
    row.base_degree =
        schema.has_node_type(row.type) ? schema.base_degree(row.type) : 0;
    report.types.push_back(std::move(row));
  }
  return report;
}

void fill_connectivity(const SemanticGraph& graph, TypeStatsReport& report) {
  std::vector<std::uint64_t> sum(report.types.size(), 0);
  std::vector<Wide> sum_sq(report.types.size(), 0);
  for (NodeIndex i = 0; i < graph.node_count(); ++i) {
    std::uint64_t k = graph.degree(i);
    sum[graph.type_of(i)] += k;
    sum_sq[graph.type_of(i)] += Wide{k} * k;
  }
  for (TypeIndex t = 0; t < report.types.size(); ++t) {
    auto& row = report.types[t];
    if (row.count == 0) continue;
    auto n = static_cast<double>(row.count);
    row.mean_degree = static_cast<double>(sum[t]) / n;
    row.mean_square_degree = static_cast<double>(sum_sq[t]) / n;
    if (row.base_degree == 0) continue;
    auto k0 = static_cast<double>(row.base_degree);
    row.connectivity = *row.mean_degree / k0;
    // n^2 (mean k^2 - mean k ^2) = n sum k^2 - (sum k)^2, exact in integers.
    Wide spread = Wide{row.count} * sum_sq[t] - Wide{sum[t]} * sum[t];
    row.connectivity_dispersion =
        std::sqrt(static_cast<double>(spread)) / n / k0;
  }
}

std::uint64_t squared_type_counts(const SemanticGraph& graph, NodeIndex i,
                                  std::vector<std::uint64_t>& scratch) {
  scratch.assign(graph.node_types().size(), 0);
  for (const auto& n : graph.neighbors(i)) ++scratch[graph.type_of(n.node)];
  std::uint64_t sq = 0;
  for (auto c : scratch) sq += c * c;
  return sq;
}

double disparity_of(const SemanticGraph& graph, NodeIndex i,
                    std::vector<std::uint64_t>& scratch) {
  auto k = static_cast<double>(graph.degree(i));
  return static_cast<double>(squared_type_counts(graph, i, scratch)) / (k * k);
}

void fill_disparity(const SemanticGraph& graph, const OntologySchema& schema,
                    RandomBaseline baseline, TypeStatsReport& report) {
  report.baseline = baseline;
  std::vector<std::vector<double>> samples(report.types.size());
  std::vector<std::uint64_t> scratch;
  for (NodeIndex i = 0; i < graph.node_count(); ++i) {
    if (graph.degree(i) == 0) continue;
    samples[graph.type_of(i)].push_back(disparity_of(graph, i, scratch));
  }

  for (TypeIndex t = 0; t < report.types.size(); ++t) {
    auto& row = report.types[t];
    const auto& ys = samples[t];
    row.disparity_samples = ys.size();
    if (!ys.empty()) {
      double sum = 0.0;
      for (double y : ys) sum += y;
      double mean = sum / static_cast<double>(ys.size());
      double dev = 0.0;
      for (double y : ys) dev += (y - mean) * (y - mean);
      row.mean_disparity = mean;
      row.disparity_dispersion =
          std::sqrt(dev / static_cast<double>(ys.size()));
    }

    std::uint64_t pop_sq = 0;
    std::uint64_t pop = 0;
    if (schema.has_node_type(row.type)) {
      for (const auto& beta : schema.allowed_neighbor_types(row.type)) {
        auto b = graph.type_index(beta);
        std::uint64_t nb = b ? graph.type_count(*b) : 0;
        pop_sq += nb * nb;
        pop += nb;
      }
    }
    std::uint64_t denom = baseline == RandomBaseline::kLiteral
                              ? graph.node_count()
                              : pop;
    if (pop_sq == 0 || denom == 0) continue;
    double yr = static_cast<double>(pop_sq) /
                (static_cast<double>(denom) * static_cast<double>(denom));
    row.random_disparity = yr;
    if (row.mean_disparity) row.disparity_ratio = *row.mean_disparity / yr;
    if (row.disparity_dispersion)
      row.ratio_dispersion = *row.disparity_dispersion / yr;
  }
}

}  // namespace

std::string_view to_string(RandomBaseline mode) {
  return mode == RandomBaseline::kLiteral ? "literal" : "normalized";
}

std::optional<RandomBaseline> parse_random_baseline(std::string_view text) {
  if (text == "literal") return RandomBaseline::kLiteral;
  if (text == "normalized") return RandomBaseline::kNormalized;
  return std::nullopt;
}

const TypeStats* TypeStatsReport::find(std::string_view type) const {
  for (const auto& row : types)
    if (row.type == type) return &row;
  return nullptr;
}

TypeStatsReport type_degree_stats(const SemanticGraph& graph,
                                  const OntologySchema& schema) {
  auto report = skeleton(graph, schema);
  fill_connectivity(graph, report);
  return report;
}

double disparity(const SemanticGraph& graph, NodeIndex i) {
  if (graph.degree(i) == 0)
    throw UndefinedValueError("disparity of isolated node '" +
                              graph.node(i).id + "' is undefined");
  std::vector<std::uint64_t> scratch;
  return disparity_of(graph, i, scratch);
}

double disparity(const SemanticGraph& graph, std::string_view id) {
  return disparity(graph, graph.index_of(id));
}

TypeStatsReport type_disparity(const SemanticGraph& graph,
                               const OntologySchema& schema,
                               RandomBaseline baseline) {
  auto report = skeleton(graph, schema);
  fill_disparity(graph, schema, baseline, report);
  return report;
}

TypeStatsReport type_stats(const SemanticGraph& graph,
                           const OntologySchema& schema,
                           RandomBaseline baseline) {
  auto report = skeleton(graph, schema);
  fill_connectivity(graph, report);
  fill_disparity(graph, schema, baseline, report);
  return report;
}

std::size_t DegreeDistribution::total() const {
  std::size_t n = 0;
  for (const auto& [k, f] : frequency) n += f;
  return n;
}

std::optional<double> DegreeDistribution::mean() const {
  std::size_t n = total();
  if (n == 0) return std::nullopt;
  std::uint64_t sum = 0;
  for (const auto& [k, f] : frequency) sum += std::uint64_t{k} * f;
  return static_cast<double>(sum) / static_cast<double>(n);
}

DegreeDistribution degree_distribution(const SemanticGraph& graph,
                                       std::string_view alpha) {
  auto t = graph.type_index(alpha);
  if (!t) throw Error("unknown node type '" + std::string(alpha) + "'");
  DegreeDistribution dist{std::string(alpha), {}};
  for (NodeIndex i = 0; i < graph.node_count(); ++i)
    if (graph.type_of(i) == *t) ++dist.frequency[graph.degree(i)];
  return dist;
}

}  // namespace semgraph
