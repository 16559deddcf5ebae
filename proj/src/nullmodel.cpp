#include "semgraph/nullmodel.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace semgraph {

namespace {

std::string padded_id(char prefix, std::size_t i, std::size_t count) {
  auto width = std::to_string(count == 0 ? 0 : count - 1).size();
  return fmt::format("{}{:0{}}", prefix, i, width);
}

std::string number(double v) { return fmt::format("{}", v); }

}  // namespace

std::uint64_t Random::below(std::uint64_t n) {
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit = engine_.max() - engine_.max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::uint64_t Random::poisson(double mean) {
  // Sequential inversion; large means are split into chunks so exp(-mean)
  // never underflows.
  std::uint64_t total = 0;
  while (mean > 0.0) {
    double chunk = std::min(mean, 30.0);
    mean -= chunk;
    double p = std::exp(-chunk);
    double cumulative = p;
    double u = uniform();
    std::uint64_t k = 0;
    while (u > cumulative && p > 0.0) {
      ++k;
      p *= chunk / static_cast<double>(k);
      cumulative += p;
    }
    total += k;
  }
  return total;
}

std::string_view to_string(BipartiteMode mode) {
  return mode == BipartiteMode::kIndependent ? "independent" : "configuration";
}

std::optional<BipartiteMode> parse_bipartite_mode(std::string_view text) {
  if (text == "independent") return BipartiteMode::kIndependent;
  if (text == "configuration") return BipartiteMode::kConfiguration;
  return std::nullopt;
}

double BipartiteParams::nu() const {
  return mu * static_cast<double>(movies) / static_cast<double>(actors);
}

SemanticGraph random_bipartite(const BipartiteParams& params,
                               BipartiteMode mode) {
  if (params.actors < 1 || params.movies < 1)
    throw std::invalid_argument("bipartite graph needs n_a >= 1 and n_m >= 1");
  if (!(params.mu >= 0.0) || params.mu > static_cast<double>(params.movies))
    throw std::invalid_argument("mu must lie in [0, n_m]");

  OntologySchema schema;
  schema.add_node_type(kActorType);
  schema.add_node_type(kMovieType);
  schema.allow(kActorType, kActedInLink, kMovieType);

  std::vector<NodeRecord> nodes;
  nodes.reserve(params.actors + params.movies);
  for (std::size_t a = 0; a < params.actors; ++a)
    nodes.push_back({padded_id('a', a, params.actors), kActorType, {}});
  for (std::size_t m = 0; m < params.movies; ++m)
    nodes.push_back({padded_id('m', m, params.movies), kMovieType, {}});

  Random rng(params.seed);
  std::vector<LinkRecord> links;
  auto link = [&](std::size_t a, std::size_t m) {
    links.push_back({nodes[a].id, nodes[params.actors + m].id, kActedInLink, {}});
  };
  if (mode == BipartiteMode::kIndependent) {
    double p = params.mu / static_cast<double>(params.movies);
    for (std::size_t a = 0; a < params.actors; ++a)
      for (std::size_t m = 0; m < params.movies; ++m)
        if (rng.bernoulli(p)) link(a, m);
  } else {
    std::set<std::size_t> chosen;
    for (std::size_t a = 0; a < params.actors; ++a) {
      auto stubs = std::min<std::uint64_t>(rng.poisson(params.mu),
                                           params.movies);
      chosen.clear();
      // Repeated draws of the same movie are redrawn so the actor keeps its
      // drawn degree.
      while (chosen.size() < stubs) chosen.insert(rng.below(params.movies));
      for (auto m : chosen) link(a, m);
    }
  }

  Attributes metadata{
      {"generator", "random_bipartite"},
      {"mode", std::string(to_string(mode))},
      {"n_a", std::to_string(params.actors)},
      {"n_m", std::to_string(params.movies)},
      {"mu", number(params.mu)},
      {"nu", number(params.nu())},
      {"seed", std::to_string(params.seed)},
      {"rng", "mt19937_64"},
  };
  return build_graph(std::move(nodes), std::move(links), std::move(schema),
                     std::move(metadata));
}

SemanticGraph er_random(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("er_random needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("er_random needs 0 <= p <= 1");
  OntologySchema schema;
  schema.add_node_type(kPlainNodeType);
  schema.allow(kPlainNodeType, kPlainLinkType, kPlainNodeType);

  std::vector<NodeRecord> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    nodes.push_back({padded_id('v', i, n), kPlainNodeType, {}});
  Random rng(seed);
  std::vector<LinkRecord> links;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(p))
        links.push_back({nodes[i].id, nodes[j].id, kPlainLinkType, {}});

  Attributes metadata{{"generator", "er_random"},
                      {"n", std::to_string(n)},
                      {"p", number(p)},
                      {"seed", std::to_string(seed)},
                      {"rng", "mt19937_64"}};
  return build_graph(std::move(nodes), std::move(links), std::move(schema),
                     std::move(metadata));
}

double predicted_projection_clustering(double mu) {
  if (!(mu >= 0.0)) throw std::invalid_argument("mu must be non-negative");
  return 1.0 / (mu + 1.0);
}

}  // namespace semgraph
