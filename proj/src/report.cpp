#include "semgraph/report.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace semgraph {

namespace {

using Json = nlohmann::ordered_json;

std::string fixed(const std::optional<double>& v, int decimals) {
  if (!v) return "undef";
  return fmt::format("{:.{}f}", *v, decimals);
}

Json nullable(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// The first `left` columns are left aligned, the rest right aligned.
std::string render(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows,
                   std::size_t left = 1) {
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  };
  measure(header);
  for (const auto& r : rows) measure(r);
  std::string out;
  auto emit = [&](const std::vector<std::string>& r) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += "  ";
      line += c < left ? fmt::format("{:<{}}", r[c], width[c])
                       : fmt::format("{:>{}}", r[c], width[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return out;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "structured") return OutputFormat::kStructured;
  return std::nullopt;
}

std::string provenance_table(const Provenance& p) {
  std::string out = fmt::format("# semgraph {} {}\n", kVersion, p.command);
  for (const auto& [k, v] : p.flags) out += fmt::format("# --{}={}\n", k, v);
  return out;
}

std::string type_stats_table(const TypeStatsReport& report) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < report.types.size(); ++i) {
    const auto& t = report.types[i];
    rows.push_back({std::to_string(i + 1), t.type, std::to_string(t.count),
                    fixed(t.connectivity, 3),
                    fixed(t.connectivity_dispersion, 3),
                    fixed(t.disparity_ratio, 3), fixed(t.ratio_dispersion, 3)});
  }
  auto table = render({"#", "type", "n_alpha", "m_alpha", "sigma^k", "R(alpha)",
                       "sigma^R"},
                      rows, 2);
  return fmt::format("# Y^r_2 mode: {}\n", to_string(report.baseline)) + table;
}

std::string violations_table(const std::vector<Violation>& violations) {
  std::string out = fmt::format("# violations: {}\n", violations.size());
  for (const auto& v : violations) out += v.message + "\n";
  return out;
}

std::string degree_distributions_table(
    const std::vector<DegreeDistribution>& dists) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& d : dists)
    for (const auto& [k, f] : d.frequency)
      rows.push_back({d.type, std::to_string(k), std::to_string(f)});
  return render({"type", "degree", "count"}, rows);
}

std::string path_matrix_table(const PathMatrix& matrix) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t a = 0; a < matrix.types.size(); ++a)
    for (std::size_t b = 0; b < matrix.types.size(); ++b) {
      const auto& c = matrix.at(a, b);
      rows.push_back({matrix.types[a], matrix.types[b], fixed(c.mean(), 6),
                      std::to_string(c.reachable),
                      std::to_string(c.unreachable)});
    }
  return render({"source", "target", "mean_length", "reachable", "unreachable"},
                rows, 2);
}

std::string removal_impact_table(const std::vector<TypeRemovalImpact>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows)
    out.push_back({r.type, std::to_string(r.removed_nodes),
                   fixed(r.baseline_mean, 6), fixed(r.removed_mean, 6),
                   fixed(r.change, 6), std::to_string(r.disconnected_pairs),
                   r.flagged ? "yes" : "no"});
  return render({"removed_type", "removed", "baseline_mean", "after_mean",
                 "change", "disconnected", "flagged"},
                out);
}

std::string node_relevance_table(const std::vector<NodeRelevance>& rows) {
  std::vector<const NodeRelevance*> sorted;
  for (const auto& r : rows) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->node < b->node; });
  std::vector<std::vector<std::string>> out;
  for (const auto* r : sorted)
    out.push_back({r->node, std::string(to_string(r->mode)),
                   fixed(r->value, 6), fixed(r->tau, 6),
                   r->useful ? "yes" : "no"});
  return render({"node", "mode", "C", "tau", "useful"}, out, 2);
}

std::string link_type_relevance_table(
    const std::vector<LinkTypeRelevance>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows)
    out.push_back({r.link_type, std::to_string(r.count), fixed(r.mean, 6),
                   fixed(r.stddev, 6)});
  return render({"link_type", "count", "mean_S", "sigma_S"}, out);
}

std::string outliers_table(const std::vector<LinkOutlier>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows)
    out.push_back({r.link_type, r.source, r.target, fixed(r.score, 6),
                   fixed(r.type_mean, 6), fixed(r.deviation, 3)});
  return render({"link_type", "source", "target", "S", "type_mean_S", "z"},
                out, 3);
}

std::string latent_links_table(const std::vector<LatentLink>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows)
    out.push_back({r.a, r.b, std::to_string(r.common), std::to_string(r.total),
                   fixed(r.score, 6)});
  return render({"a", "b", "common", "union", "S"}, out, 2);
}

std::string pair_type_matrix_table(const PairTypeMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& [key, count] : m.counts)
    out.push_back({key.first, key.second, std::to_string(count)});
  return fmt::format("# center: {}\n", m.center) +
         render({"t1", "t2", "M"}, out, 2);
}

Json to_json(const Provenance& p) {
  Json flags = Json::object();
  for (const auto& [k, v] : p.flags) flags[k] = v;
  return Json{{"tool", "semgraph"},
              {"version", kVersion},
              {"command", p.command},
              {"flags", flags}};
}

Json to_json(const TypeStatsReport& report) {
  Json types = Json::array();
  for (const auto& t : report.types)
    types.push_back({{"type", t.type},
                     {"n", t.count},
                     {"k0", t.base_degree},
                     {"mean_k", nullable(t.mean_degree)},
                     {"mean_k2", nullable(t.mean_square_degree)},
                     {"m", nullable(t.connectivity)},
                     {"sigma_k", nullable(t.connectivity_dispersion)},
                     {"disparity_samples", t.disparity_samples},
                     {"mean_Y2", nullable(t.mean_disparity)},
                     {"sigma_Y", nullable(t.disparity_dispersion)},
                     {"Yr2", nullable(t.random_disparity)},
                     {"R", nullable(t.disparity_ratio)},
                     {"sigma_R", nullable(t.ratio_dispersion)}});
  return Json{{"yr_mode", to_string(report.baseline)}, {"types", types}};
}

Json to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations)
    out.push_back(
        {{"kind", v.kind == Violation::Kind::DisallowedLink ? "link" : "node"},
         {"index", v.index},
         {"message", v.message}});
  return out;
}

Json to_json(const std::vector<DegreeDistribution>& dists) {
  Json out = Json::array();
  for (const auto& d : dists) {
    Json freq = Json::array();
    for (const auto& [k, f] : d.frequency) freq.push_back({k, f});
    out.push_back({{"type", d.type}, {"histogram", freq}});
  }
  return out;
}

Json to_json(const PathMatrix& matrix) {
  Json cells = Json::array();
  for (std::size_t a = 0; a < matrix.types.size(); ++a)
    for (std::size_t b = 0; b < matrix.types.size(); ++b) {
      const auto& c = matrix.at(a, b);
      cells.push_back({{"source", matrix.types[a]},
                       {"target", matrix.types[b]},
                       {"mean", nullable(c.mean())},
                       {"reachable", c.reachable},
                       {"unreachable", c.unreachable}});
    }
  return cells;
}

Json to_json(const std::vector<TypeRemovalImpact>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"type", r.type},
                   {"removed", r.removed_nodes},
                   {"baseline_mean", nullable(r.baseline_mean)},
                   {"after_mean", nullable(r.removed_mean)},
                   {"change", nullable(r.change)},
                   {"disconnected_pairs", r.disconnected_pairs},
                   {"flagged", r.flagged}});
  return out;
}

Json to_json(const std::vector<NodeRelevance>& rows) {
  std::vector<const NodeRelevance*> sorted;
  for (const auto& r : rows) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->node < b->node; });
  Json out = Json::array();
  for (const auto* r : sorted)
    out.push_back({{"node", r->node},
                   {"mode", to_string(r->mode)},
                   {"C", r->value},
                   {"tau", r->tau},
                   {"useful", r->useful}});
  return out;
}

Json to_json(const std::vector<LinkTypeRelevance>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"link_type", r.link_type},
                   {"count", r.count},
                   {"mean_S", r.mean},
                   {"sigma_S", r.stddev}});
  return out;
}

Json to_json(const std::vector<LinkOutlier>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"link_type", r.link_type},
                   {"source", r.source},
                   {"target", r.target},
                   {"S", r.score},
                   {"type_mean_S", r.type_mean},
                   {"type_sigma_S", r.type_stddev},
                   {"z", r.deviation}});
  return out;
}

Json to_json(const std::vector<LatentLink>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"a", r.a},
                   {"b", r.b},
                   {"common", r.common},
                   {"union", r.total},
                   {"S", r.score}});
  return out;
}

Json to_json(const PairTypeMatrix& m) {
  Json counts = Json::array();
  for (const auto& [key, count] : m.counts)
    counts.push_back({{"t1", key.first}, {"t2", key.second}, {"M", count}});
  return Json{{"center", m.center}, {"counts", counts}};
}

}  // namespace semgraph
