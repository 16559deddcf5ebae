#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "semgraph/error.hpp"
#include "semgraph/relevance.hpp"
#include "semgraph/stats.hpp"

using namespace semgraph;
using oracle::close;

namespace {

oracle::Instance hub_and_clique() {
  oracle::Instance in;
  in.schema.add_node_type("person");
  in.schema.add_node_type("city");
  in.schema.allow("person", "born-in", "city");
  in.schema.allow("person", "knows", "person");
  in.nodes.push_back({"sf", "city", {}});
  in.nodes.push_back({"tikrit", "city", {}});
  for (int p = 0; p < 10; ++p) {
    in.nodes.push_back({"p" + std::to_string(p), "person", {}});
    in.links.push_back({"p" + std::to_string(p), "sf", "born-in", {}});
  }
  for (int q = 0; q < 4; ++q) {
    in.nodes.push_back({"q" + std::to_string(q), "person", {}});
    in.links.push_back({"q" + std::to_string(q), "tikrit", "born-in", {}});
    for (int r = 0; r < q; ++r)
      in.links.push_back(
          {"q" + std::to_string(r), "q" + std::to_string(q), "knows", {}});
  }
  return in;
}

std::size_t weak_pairs(const oracle::Reference& ref, std::size_t i,
                       const std::set<std::size_t>& useful) {
  auto nb = ref.nbrs(i);
  std::size_t count = 0;
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      bool related = ref.adj[nb[a]][nb[b]];
      for (auto u : useful)
        if (u != i && ref.adj[nb[a]][u] && ref.adj[nb[b]][u]) related = true;
      count += related;
    }
  return count;
}

}  // namespace

TEST_CASE("hub and clique relevance") {
  auto in = hub_and_clique();
  auto g = oracle::build(in);
  auto sf = node_relevance(g, in.schema, "sf", kDefaultTau,
                           RelevanceMode::kPlain);
  CHECK(sf.value == 0.0);
  CHECK_FALSE(sf.useful);
  auto tikrit = node_relevance(g, in.schema, "tikrit", kDefaultTau,
                               RelevanceMode::kPlain);
  CHECK(tikrit.value == 1.0);
  CHECK(tikrit.useful);
  auto semantic = node_relevance(g, in.schema, "tikrit", kDefaultTau,
                                 RelevanceMode::kSemantic);
  CHECK(semantic.value == 1.0);
  // useful is strict: value must exceed tau.
  CHECK_FALSE(node_relevance(g, in.schema, "tikrit", 1.0,
                             RelevanceMode::kPlain)
                  .useful);
  CHECK_THROWS_AS(node_relevance(g, in.schema, "sf", 1.5,
                                 RelevanceMode::kPlain),
                  std::invalid_argument);
  CHECK_THROWS_AS(node_relevance(g, in.schema, "sf", -0.1,
                                 RelevanceMode::kPlain),
                  std::invalid_argument);
  CHECK_THROWS_AS(node_relevance(g, in.schema, "nobody", 0.1,
                                 RelevanceMode::kPlain),
                  Error);
  auto useful = useful_nodes(g, in.schema, kDefaultTau, RelevanceMode::kPlain);
  CHECK(useful.count(g.index_of("tikrit")));
  CHECK_FALSE(useful.count(g.index_of("sf")));
}

TEST_CASE("weak two-hop pairs count shared useful neighbors") {
  // i has neighbors j, k, l; j and k both know u.
  auto in = oracle::untyped(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}});
  auto g = oracle::build(in);
  NodeSet none;
  CHECK(node_relevance(g, in.schema, "v0", 0.1, RelevanceMode::kWeakTwoHop,
                       none)
            .value == 0.0);
  NodeSet useful{g.index_of("v4")};
  auto weak = node_relevance(g, in.schema, "v0", 0.1,
                             RelevanceMode::kWeakTwoHop, useful);
  CHECK(close(weak.value, 1.0 / 3.0));
  CHECK(weak.useful);
  CHECK(weak_linked_neighbor_pairs(g, 0, useful) == 1);
  // The center itself never serves as the third node.
  NodeSet self{g.index_of("v0")};
  CHECK(weak_linked_neighbor_pairs(g, 0, self) == 0);
}

TEST_CASE("pair type matrix") {
  oracle::Instance in;
  in.schema = OntologySchema::complete({"v"}, "t1");
  in.schema.allow("v", "t2", "v");
  for (auto id : {"i", "a", "b", "c"}) in.nodes.push_back({id, "v", {}});
  in.links = {{"i", "a", "t1", {}},
              {"i", "b", "t2", {}},
              {"i", "c", "t1", {}},
              {"a", "b", "t1", {}},
              {"a", "c", "t1", {}}};
  auto g = oracle::build(in);
  auto m = pair_type_matrix(g, "i");
  CHECK(m.at("t1", "t2") == 1);
  CHECK(m.at("t2", "t1") == 1);
  CHECK(m.at("t1", "t1") == 1);
  CHECK(m.at("t2", "t2") == 0);
  CHECK(m.total() == linked_neighbor_pairs(g, g.index_of("i")));
  auto path = oracle::build(oracle::untyped(3, {{0, 1}, {1, 2}}));
  CHECK(pair_type_matrix(path, "v1").counts.empty());
}

TEST_CASE("link relevance examples") {
  // a: w1 w2 w3, b: w2 w3 w4 -> |N| = 2, |T| = 4.
  auto in = oracle::untyped(
      6, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {1, 5}});
  auto g = oracle::build(in);
  auto s = link_relevance(g, "v0", "v1");
  CHECK(s.common == 2);
  CHECK(s.total == 4);
  CHECK(s.score == 0.5);

  auto same = oracle::build(oracle::untyped(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(link_relevance(same, "v0", "v1").score == 1.0);
  auto disjoint = oracle::build(oracle::untyped(4, {{0, 2}, {1, 3}}));
  CHECK(link_relevance(disjoint, "v0", "v1").score == 0.0);
  auto alone = oracle::build(oracle::untyped(2, {}));
  CHECK(link_relevance(alone, "v0", "v1").total == 0);
  CHECK(link_relevance(alone, "v0", "v1").score == 0.0);
  CHECK_THROWS_AS(link_relevance(alone, "v0", "v0"), std::invalid_argument);
}

TEST_CASE("link relevance ignores the link between the endpoints") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 30; ++round) {
    auto in = oracle::random_instance(rng);
    if (in.links.empty()) continue;
    auto g = oracle::build(in);
    const auto& l = in.links.front();
    auto with = link_relevance(g, l.source, l.target);
    auto without_in = in;
    std::erase_if(without_in.links, [&](const LinkRecord& r) {
      return (r.source == l.source && r.target == l.target) ||
             (r.source == l.target && r.target == l.source);
    });
    auto without = link_relevance(oracle::build(without_in), l.source, l.target);
    CHECK(with.common == without.common);
    CHECK(with.total == without.total);
    auto reverse = link_relevance(g, l.target, l.source);
    CHECK(reverse.score == with.score);
  }
}

TEST_CASE("relevance measures match set enumeration on random graphs") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 40; ++round) {
    auto in = oracle::random_instance(rng);
    auto g = oracle::build(in);
    oracle::Reference ref(in);
    std::set<std::size_t> useful_ref;
    NodeSet useful;
    for (std::size_t i = 0; i < ref.n; ++i)
      if (ref.clustering(i) > kDefaultTau) {
        useful_ref.insert(i);
        useful.insert(g.index_of(ref.id[i]));
      }
    CHECK(useful == useful_nodes(g, in.schema, kDefaultTau,
                                 RelevanceMode::kPlain));
    for (std::size_t i = 0; i < ref.n; ++i) {
      NodeIndex gi = g.index_of(ref.id[i]);
      CHECK(weak_linked_neighbor_pairs(g, gi, useful) ==
            weak_pairs(ref, i, useful_ref));
      auto m = pair_type_matrix(g, gi);
      CHECK(m.counts == ref.pair_types(i));
      for (std::size_t j = i + 1; j < ref.n; ++j) {
        auto got = link_relevance(g, gi, g.index_of(ref.id[j]));
        auto want = ref.link_relevance(i, j);
        CHECK(got.common == want.common);
        CHECK(got.total == want.total);
        CHECK(close(got.score, want.score));
      }
    }
  }
}

TEST_CASE("link type relevance") {
  // Fan: hub joined to four rim nodes that form a path.
  oracle::Instance in;
  in.schema = OntologySchema::complete({"v"}, "spoke");
  in.schema.allow("v", "rim", "v");
  in.schema.allow("v", "bridge", "v");
  for (auto id : {"h", "r1", "r2", "r3", "r4", "x", "y"})
    in.nodes.push_back({id, "v", {}});
  for (auto r : {"r1", "r2", "r3", "r4"}) in.links.push_back({"h", r, "spoke", {}});
  in.links.push_back({"r1", "r2", "rim", {}});
  in.links.push_back({"r2", "r3", "rim", {}});
  in.links.push_back({"r3", "r4", "rim", {}});
  in.links.push_back({"x", "y", "bridge", {}});
  auto g = oracle::build(in);
  oracle::Reference ref(in);
  auto rows = link_type_relevance(g);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].link_type == "bridge");
  CHECK(rows[0].mean == 0.0);
  for (const auto& row : rows) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& l : in.links)
      if (l.type == row.link_type) {
        sum += ref.link_relevance(ref.index.at(l.source),
                                  ref.index.at(l.target))
                   .score;
        ++count;
      }
    CHECK(row.count == count);
    CHECK(close(row.mean, sum / static_cast<double>(count)));
  }
  CHECK(rows[1].mean > 0.0);
}

TEST_CASE("relevance outliers") {
  oracle::Instance in;
  in.schema = OntologySchema::complete({"v"}, "x");
  in.schema.allow("v", "y", "v");
  for (auto id : {"p", "q", "r"}) in.nodes.push_back({id, "v", {}});
  in.links = {{"p", "q", "y", {}}, {"q", "r", "y", {}}, {"p", "r", "x", {}}};
  for (int k = 0; k < 6; ++k) {
    auto u = "u" + std::to_string(k), w = "w" + std::to_string(k);
    in.nodes.push_back({u, "v", {}});
    in.nodes.push_back({w, "v", {}});
    in.links.push_back({u, w, "x", {}});
  }
  auto g = oracle::build(in);
  auto out = relevance_outliers(g, 2.0);
  REQUIRE(out.size() == 1);
  CHECK(out[0].source == "p");
  CHECK(out[0].target == "r");
  CHECK(out[0].score == 1.0);
  CHECK(close(out[0].type_mean, 1.0 / 7.0));
  CHECK(out[0].deviation > 2.0);
  // Too few links of the type: nothing is reported.
  CHECK(relevance_outliers(g, 2.0, 8).empty());
  CHECK_THROWS_AS(relevance_outliers(g, 0.0), std::invalid_argument);

  auto flat = oracle::build(oracle::untyped(6, {{0, 1}, {2, 3}, {4, 5}}));
  CHECK(relevance_outliers(flat, 0.5, 1).empty());
}

TEST_CASE("latent links") {
  // 4-cycle a-w1-b-w2-a.
  auto in = oracle::untyped(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto g = oracle::build(in);
  auto latent = latent_links(g, 1.0, in.schema);
  REQUIRE(latent.size() == 2);
  CHECK(latent[0].a == "v0");
  CHECK(latent[0].b == "v2");
  CHECK(latent[0].score == 1.0);
  CHECK(latent[1].a == "v1");
  CHECK(latent[1].b == "v3");
  CHECK_THROWS_AS(latent_links(g, 0.0, in.schema), std::invalid_argument);
  CHECK_THROWS_AS(latent_links(g, 1.5, in.schema), std::invalid_argument);

  // Same shape, but the ontology forbids two of the pairs.
  oracle::Instance typed;
  typed.schema.add_node_type("a");
  typed.schema.add_node_type("w");
  typed.schema.allow("a", "l", "w");
  typed.schema.allow("a", "l", "a");
  typed.nodes = {{"a1", "a", {}}, {"w1", "w", {}}, {"a2", "a", {}},
                 {"w2", "w", {}}};
  typed.links = {{"a1", "w1", "l", {}},
                 {"w1", "a2", "l", {}},
                 {"a2", "w2", "l", {}},
                 {"w2", "a1", "l", {}}};
  auto tl = latent_links(oracle::build(typed), 0.5, typed.schema);
  REQUIRE(tl.size() == 1);
  CHECK(tl[0].a == "a1");
  CHECK(tl[0].b == "a2");
}

TEST_CASE("latent links agree with exhaustive pair search") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 30; ++round) {
    auto in = oracle::random_instance(rng);
    auto g = oracle::build(in);
    oracle::Reference ref(in);
    double threshold = 0.25;
    std::set<std::pair<std::string, std::string>> want;
    for (std::size_t i = 0; i < ref.n; ++i)
      for (std::size_t j = i + 1; j < ref.n; ++j) {
        if (ref.adj[i][j] || !ref.allowed(ref.type[i], ref.type[j])) continue;
        if (ref.link_relevance(i, j).score >= threshold)
          want.insert(std::minmax(ref.id[i], ref.id[j]));
      }
    std::set<std::pair<std::string, std::string>> got;
    double last = 2.0;
    for (const auto& l : latent_links(g, threshold, in.schema)) {
      CHECK(l.a < l.b);
      CHECK(l.score <= last);
      last = l.score;
      got.insert({l.a, l.b});
    }
    CHECK(got == want);
  }
}

TEST_CASE("pruning a hub into attributes") {
  oracle::Instance in;
  in.schema.add_node_type("person");
  in.schema.add_node_type("city");
  in.schema.allow("person", "born-in", "city");
  in.schema.allow("person", "knows", "person");
  in.nodes = {{"p1", "person", {{"city", "boston"}}},
              {"p2", "person", {}},
              {"p3", "person", {}},
              {"sf", "city", {}}};
  in.links = {{"p1", "sf", "born-in", {}},
              {"p2", "sf", "born-in", {}},
              {"p2", "p3", "knows", {}}};
  auto g = oracle::build(in);
  auto pruned = prune_node(g, "sf", "city");
  CHECK(pruned.node_count() == 3);
  CHECK(pruned.link_count() == 1);
  CHECK_FALSE(pruned.find("sf").has_value());
  CHECK(pruned.node(pruned.index_of("p1")).attributes.at("city") ==
        "boston|sf");
  CHECK(pruned.node(pruned.index_of("p2")).attributes.at("city") == "sf");
  CHECK(pruned.node(pruned.index_of("p3")).attributes.empty());

  in.nodes.push_back({"lonely", "city", {}});
  auto g2 = oracle::build(in);
  auto p2 = prune_node(g2, "lonely", "city");
  CHECK(p2.node_count() == g2.node_count() - 1);
  CHECK(p2.link_count() == g2.link_count());
  CHECK_THROWS_AS(prune_node(g2, "nobody", "city"), Error);
}

TEST_CASE("pruning random nodes leaves a consistent graph") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    auto in = oracle::random_instance(rng);
    auto g = oracle::build(in);
    NodeIndex victim = static_cast<NodeIndex>(rng() % g.node_count());
    std::string id = g.node(victim).id;
    std::size_t incident = 0;
    for (const auto& l : in.links) incident += l.source == id || l.target == id;
    auto p = prune_node(g, id, "was_near");
    CHECK(p.node_count() == g.node_count() - 1);
    CHECK(p.link_count() == g.link_count() - incident);
    std::size_t tagged = 0;
    for (const auto& n : p.nodes()) {
      CHECK(n.id != id);
      auto it = n.attributes.find("was_near");
      if (it != n.attributes.end() && it->second == id) ++tagged;
    }
    CHECK(tagged == g.degree(victim));
    for (const auto& l : p.links()) {
      CHECK(l.source != id);
      CHECK(l.target != id);
    }
    if (p.node_count() > 0) {
      CHECK_NOTHROW(graph_clustering(p));
      CHECK_NOTHROW(type_stats(p, in.schema, RandomBaseline::kLiteral));
      CHECK_NOTHROW(path_length_matrix(p));
      CHECK_NOTHROW(link_type_relevance(p));
    }
  }
}
