#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "semgraph/error.hpp"
#include "semgraph/graph.hpp"
#include "semgraph/nullmodel.hpp"
#include "semgraph/transform.hpp"

using namespace semgraph;

namespace {

oracle::Instance film_crew() {
  oracle::Instance in;
  for (auto t : {"actor", "director", "movie"}) in.schema.add_node_type(t);
  in.schema.allow("actor", "acted-in", "movie");
  in.schema.allow("director", "directed", "movie");
  in.schema.allow("actor", "married-to", "director");
  in.nodes = {{"ann", "actor", {}},
              {"bo", "actor", {}},
              {"dee", "director", {{"original_type", "auteur"}}},
              {"m1", "movie", {}},
              {"m2", "movie", {}}};
  in.links = {{"ann", "m1", "acted-in", {}},
              {"bo", "m1", "acted-in", {}},
              {"ann", "m2", "acted-in", {}},
              {"bo", "m2", "acted-in", {}},
              {"dee", "m2", "directed", {}}};
  return in;
}

}  // namespace

TEST_CASE("merge map parsing") {
  auto m = parse_merge_map("# fold roles\nactor = person\n\ndirector=person\n");
  CHECK(m.size() == 2);
  CHECK(m.at("director") == "person");
  CHECK_THROWS_AS(parse_merge_map("actor person\n", "map"), FileFormatError);
  CHECK_THROWS_AS(parse_merge_map("actor=\n", "map"), FileFormatError);
  CHECK_THROWS_AS(parse_merge_map("a=b\na=c\n", "map"), FileFormatError);
}

TEST_CASE("coarsening relabels types and triples") {
  auto in = film_crew();
  auto g = oracle::build(in);
  TypeMergeMap map{{"actor", "person"}, {"director", "person"},
                   {"movie", "movie"}};
  auto coarse = coarsen(g, in.schema, map);
  CHECK(coarse.schema.node_types() ==
        OntologySchema::NameSet{"movie", "person"});
  CHECK(coarse.schema.allows("person", "acted-in", "movie"));
  CHECK(coarse.schema.allows("person", "directed", "movie"));
  CHECK(coarse.schema.allows("person", "married-to", "person"));
  const auto& cg = coarse.graph;
  CHECK(cg.node_count() == g.node_count());
  CHECK(cg.link_count() == g.link_count());
  const auto& ann = cg.node(cg.index_of("ann"));
  CHECK(ann.type == "person");
  CHECK(ann.attributes.at(kOriginalTypeAttribute) == "actor");
  // An existing finest type is kept.
  CHECK(cg.node(cg.index_of("dee")).attributes.at(kOriginalTypeAttribute) ==
        "auteur");
  CHECK(validate(cg, coarse.schema).empty());

  TypeMergeMap partial{{"actor", "person"}, {"movie", "movie"}};
  CHECK_THROWS_AS(coarsen(g, in.schema, partial), Error);
}

TEST_CASE("coarsening keeps random graphs valid") {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 30; ++round) {
    auto in = oracle::random_instance(rng);
    auto g = oracle::build(in);
    TypeMergeMap map;
    for (const auto& t : in.schema.node_types())
      map[t] = "c" + std::to_string(rng() % 2);
    auto coarse = coarsen(g, in.schema, map);
    CHECK(validate(coarse.graph, coarse.schema).empty());
    CHECK(coarse.graph.pair_count() == g.pair_count());
  }
}

TEST_CASE("one-mode projection") {
  auto in = film_crew();
  in.nodes.push_back({"cy", "actor", {}});
  in.links.push_back({"cy", "m2", "acted-in", {}});
  auto g = oracle::build(in);
  auto p = one_mode_projection(g, "actor", "movie");
  CHECK(p.node_count() == 3);
  CHECK(p.link_count() == 3);
  CHECK(p.schema().node_types() == OntologySchema::NameSet{"actor"});
  CHECK(p.metadata().at("projection") == "actor via movie");
  const LinkRecord* ann_bo = nullptr;
  for (const auto& l : p.links())
    if (l.source == "ann" && l.target == "bo") ann_bo = &l;
  REQUIRE(ann_bo != nullptr);
  CHECK(ann_bo->type == projection_link_type("movie"));
  CHECK(ann_bo->attributes.at(kSharedCountAttribute) == "2");
  CHECK(ann_bo->attributes.at(kViaAttribute) == "m1|m2");

  CHECK_THROWS_AS(one_mode_projection(g, "actor", "actor"), Error);
  CHECK_THROWS_AS(one_mode_projection(g, "actor", "studio"), Error);
  in.links.push_back({"ann", "bo", "married-to", {}});
  in.schema.allow("actor", "married-to", "actor");
  CHECK_THROWS_AS(one_mode_projection(oracle::build(in), "actor", "movie"),
                  Error);
}

TEST_CASE("projection links exactly the pairs sharing a via node") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = random_bipartite({30, 20, 2.5, seed});
    auto p = one_mode_projection(g, kActorType, kMovieType);
    std::size_t expected_pairs = 0;
    for (NodeIndex a = 0; a < g.node_count(); ++a) {
      if (g.type_name(g.type_of(a)) != kActorType) continue;
      for (NodeIndex b = a + 1; b < g.node_count(); ++b) {
        if (g.type_name(g.type_of(b)) != kActorType) continue;
        std::size_t shared = 0;
        for (const auto& n : g.neighbors(a)) shared += g.adjacent(b, n.node);
        if (shared == 0) continue;
        ++expected_pairs;
        const auto* link = p.find_neighbor(p.index_of(g.node(a).id),
                                           p.index_of(g.node(b).id));
        REQUIRE(link != nullptr);
      }
    }
    CHECK(p.pair_count() == expected_pairs);
    CHECK(p.link_count() == expected_pairs);
    for (const auto& l : p.links()) {
      std::size_t shared = 0;
      auto a = g.index_of(l.source), b = g.index_of(l.target);
      for (const auto& n : g.neighbors(a)) shared += g.adjacent(b, n.node);
      CHECK(l.attributes.at(kSharedCountAttribute) == std::to_string(shared));
    }
  }
}
