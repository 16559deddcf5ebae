#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "semgraph/ingest.hpp"
#include "semgraph/nullmodel.hpp"
#include "semgraph/stats.hpp"

using namespace semgraph;

TEST_CASE("predicted projection clustering") {
  CHECK(predicted_projection_clustering(5.0) == doctest::Approx(1.0 / 6.0));
  CHECK(predicted_projection_clustering(0.0) == 1.0);
  CHECK(predicted_projection_clustering(1.0) == 0.5);
  CHECK_THROWS_AS(predicted_projection_clustering(-1.0), std::invalid_argument);
}

TEST_CASE("movie-side mean from the population constraint") {
  BipartiteParams p{100, 50, 4.0, 1};
  CHECK(p.nu() == 2.0);
  BipartiteParams square{2000, 2000, 6.0, 1};
  CHECK(square.nu() == 6.0);
}

TEST_CASE("uniform draws and integer ranges") {
  Random r(3);
  double sum = 0.0;
  for (int i = 0; i < 20000; ++i) {
    double u = r.uniform();
    CHECK((u >= 0.0 && u < 1.0));
    sum += u;
  }
  CHECK(std::abs(sum / 20000 - 0.5) < 0.01);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
}

TEST_CASE("poisson variates have the requested mean and variance") {
  for (double mean : {0.5, 6.0, 45.0}) {
    Random r(11);
    const int n = 40000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
      auto k = static_cast<double>(r.poisson(mean));
      s += k;
      s2 += k * k;
    }
    double m = s / n, var = s2 / n - m * m;
    CHECK(std::abs(m - mean) < 0.05 * mean + 0.02);
    CHECK(std::abs(var - mean) < 0.1 * mean + 0.05);
  }
  Random r(1);
  CHECK(r.poisson(0.0) == 0);
}

TEST_CASE("same seed gives the same graph") {
  BipartiteParams p{200, 150, 3.0, 42};
  auto a = export_graph(random_bipartite(p));
  auto b = export_graph(random_bipartite(p));
  CHECK(a == b);
  p.seed = 43;
  CHECK(export_graph(random_bipartite(p)) != a);
  CHECK(export_graph(er_random(100, 0.05, 9)) ==
        export_graph(er_random(100, 0.05, 9)));
}

TEST_CASE("generator output is stable across builds") {
  // Frozen from the reference stream; a change here breaks reproducibility of
  // previously published runs.
  auto g = er_random(60, 0.1, 42);
  auto b = random_bipartite({40, 30, 3.0, 7});
  auto c = random_bipartite({40, 30, 3.0, 7}, BipartiteMode::kConfiguration);
  CHECK(g.link_count() == 159);
  CHECK(b.link_count() == 132);
  CHECK(c.link_count() == 121);
}

TEST_CASE("bipartite generator structure and metadata") {
  BipartiteParams p{300, 200, 4.0, 5};
  auto g = random_bipartite(p);
  CHECK(g.node_count() == 500);
  CHECK(g.metadata().at("seed") == "5");
  CHECK(g.metadata().at("mode") == "independent");
  CHECK(g.metadata().at("n_a") == "300");
  CHECK(g.node(0).id == "a000");
  CHECK(g.index_of("m199") == 499);
  auto actor = *g.type_index(kActorType);
  std::size_t actor_degree = 0;
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    for (const auto& n : g.neighbors(i))
      CHECK(g.type_of(n.node) != g.type_of(i));
    if (g.type_of(i) == actor) actor_degree += g.degree(i);
  }
  double mean = static_cast<double>(actor_degree) / 300.0;
  CHECK(std::abs(mean - 4.0) < 0.4);
  CHECK(g.pair_count() == g.link_count());

  auto c = random_bipartite(p, BipartiteMode::kConfiguration);
  CHECK(c.metadata().at("mode") == "configuration");
  CHECK(c.pair_count() == c.link_count());

  CHECK_THROWS_AS(random_bipartite({0, 5, 1.0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(random_bipartite({5, 5, 6.0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(random_bipartite({5, 5, -1.0, 1}), std::invalid_argument);
}

TEST_CASE("er generator") {
  auto g = er_random(400, 0.02, 3);
  double expected = 0.02 * 400 * 399 / 2;
  CHECK(std::abs(static_cast<double>(g.link_count()) - expected) <
        4 * std::sqrt(expected));
  CHECK(er_random(10, 0.0, 1).link_count() == 0);
  CHECK(er_random(10, 1.0, 1).link_count() == 45);
  CHECK(graph_clustering(er_random(10, 1.0, 1)) == 1.0);
  CHECK_THROWS_AS(er_random(0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(er_random(5, 1.5, 1), std::invalid_argument);
}
