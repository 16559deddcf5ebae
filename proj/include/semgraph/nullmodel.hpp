#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "semgraph/graph.hpp"

namespace semgraph {

// Reproducible pseudorandom source: 64-bit Mersenne Twister
// (std::mt19937_64, whose output sequence is fixed by the standard). Doubles
// and Poisson variates are derived here rather than through the standard
// distributions, whose algorithms vary between library implementations.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

enum class BipartiteMode {
  kIndependent,    // every actor-movie pair linked with p = mu / n_m
  kConfiguration,  // actor degrees drawn Poisson(mu), stubs sent to uniform movies
};

std::string_view to_string(BipartiteMode mode);
std::optional<BipartiteMode> parse_bipartite_mode(std::string_view text);

inline constexpr const char* kActorType = "actor";
inline constexpr const char* kMovieType = "movie";
inline constexpr const char* kActedInLink = "acted-in";
inline constexpr const char* kPlainNodeType = "node";
inline constexpr const char* kPlainLinkType = "link";

struct BipartiteParams {
  std::size_t actors = 0;  // n_A
  std::size_t movies = 0;  // n_M
  double mu = 0.0;         // mean movies per actor
  std::uint64_t seed = 0;

  // nu from mu / n_A = nu / n_M. The realized movie-side mean is
  // mu * n_A / n_M, which coincides with nu when n_A = n_M.
  double nu() const;
};

// Two-type actor/movie graph. Requires n_A, n_M >= 1 and 0 <= mu <= n_M
// (std::invalid_argument otherwise). Parameters are echoed into metadata.
SemanticGraph random_bipartite(const BipartiteParams& params,
                               BipartiteMode mode = BipartiteMode::kIndependent);

// G(n, p) on a single node type. Requires n >= 1 and 0 <= p <= 1.
SemanticGraph er_random(std::size_t n, double p, std::uint64_t seed);

// 1 / (mu + 1): clustering of the one-mode projection of the random
// bipartite graph onto the actor side.
double predicted_projection_clustering(double mu);

}  // namespace semgraph
