#include <doctest.h>

#include "chaincov/cover.hpp"
#include "chaincov/generators.hpp"
#include "chaincov/incgraph.hpp"
#include "oracles.hpp"

using namespace chaincov;

namespace {

// x0 = 0 < z = 1 < x2 = 2, x1 = 3 incomparable to all
Poset four_point() {
  const std::vector<Relation> r{{0, 1}, {1, 2}};
  return Poset::from_relations(4, r);
}

}  // namespace

TEST_CASE("inc_components examples") {
  const auto g = grid_upper(4);
  const auto d = inc_components(g.poset);
  const std::vector<std::vector<std::size_t>> expected{{g.index_of(0, 1)},
                                                       {g.index_of(0, 2)},
                                                       {g.index_of(0, 3), g.index_of(1, 2)},
                                                       {g.index_of(1, 3)},
                                                       {g.index_of(2, 3)}};
  CHECK(d.parts == expected);
  CHECK(d.part_posets[2] == antichain(2));

  CHECK(inc_components(antichain(4)).parts.size() == 1);
  const auto c = inc_components(chain(5));
  REQUIRE(c.parts.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(c.parts[i] == std::vector<std::size_t>{i});
  CHECK(component_index(c) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(inc_components(Poset{}).parts.empty());
}

TEST_CASE("recompose") {
  const auto g = grid_upper(4).poset;
  CHECK(recompose(inc_components(g)) == g);

  LexDecomposition two;
  two.size = 4;
  two.parts = {{0, 1}, {2, 3}};
  two.part_posets = {antichain(2), antichain(2)};
  const std::vector<Relation> stacked{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  CHECK(recompose(two) == Poset::from_relations(4, stacked));

  LexDecomposition single;
  single.size = 3;
  single.parts = {{0, 1, 2}};
  single.part_posets = {chain(3)};
  CHECK(recompose(single) == chain(3));

  auto bad = two;
  bad.parts = {{0, 1}, {1, 3}};
  CHECK_THROWS_AS(recompose(bad), MalformedDecomposition);
  bad = two;
  bad.part_posets = {antichain(2), antichain(3)};
  CHECK_THROWS_AS(recompose(bad), MalformedDecomposition);
  bad = two;
  bad.size = 5;
  CHECK_THROWS_AS(recompose(bad), MalformedDecomposition);
}

TEST_CASE("decomposition invariants on random posets") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto p = random_poset(30, 0.1 + 0.05 * static_cast<double>(seed % 8), seed);
    const auto d = inc_components(p);
    CHECK(recompose(d) == p);
    for (std::size_t i = 0; i < d.parts.size(); ++i)
      for (std::size_t j = i + 1; j < d.parts.size(); ++j)
        for (auto x : d.parts[i])
          for (auto y : d.parts[j]) CHECK(p.lt(x, y));
    std::size_t best = 0;
    for (const auto& q : d.part_posets) best = std::max(best, cov(q));
    CHECK(cov(p) == best);
  }
}

TEST_CASE("inc_distance_path examples") {
  const auto g = grid_upper(4);
  const auto self = inc_distance_path(g.poset, 3, 3);
  REQUIRE(self.has_value());
  CHECK(self->distance == 0);
  CHECK(self->path == std::vector<std::size_t>{3});

  const auto edge = inc_distance_path(g.poset, g.index_of(0, 3), g.index_of(1, 2));
  REQUIRE(edge.has_value());
  CHECK(edge->distance == 1);
  CHECK(edge->path == std::vector<std::size_t>{g.index_of(0, 3), g.index_of(1, 2)});

  const auto p = four_point();
  const auto two = inc_distance_path(p, 0, 2);
  REQUIRE(two.has_value());
  CHECK(two->distance == 2);
  CHECK(two->path == std::vector<std::size_t>{0, 3, 2});

  CHECK_FALSE(inc_distance_path(chain(3), 0, 2).has_value());
  CHECK_THROWS_AS(inc_distance_path(chain(3), 0, 3), IndexError);
}

TEST_CASE("inc distance matches breadth-first oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = random_poset(18, 0.2 + 0.02 * static_cast<double>(seed % 10), seed);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) {
        const auto r = inc_distance_path(p, x, y);
        const auto d = oracle::inc_distance(p, x, y);
        if (d < 0) {
          CHECK_FALSE(r.has_value());
          continue;
        }
        REQUIRE(r.has_value());
        CHECK(r->distance == static_cast<std::size_t>(d));
        REQUIRE(r->path.size() == r->distance + 1);
        CHECK(r->path.front() == x);
        CHECK(r->path.back() == y);
        for (std::size_t i = 0; i + 1 < r->path.size(); ++i) CHECK(p.incomparable(r->path[i], r->path[i + 1]));
      }
  }
}

TEST_CASE("check_metric_lemma") {
  const auto r = check_metric_lemma(four_point(), 0, 2);
  CHECK(r.distance == 2);
  CHECK(r.item1_ok);
  CHECK(r.item2_ok);
  CHECK(r.violations.empty());

  CHECK_THROWS_AS(check_metric_lemma(chain(4), 0, 3), PreconditionError);
  CHECK_THROWS_AS(check_metric_lemma(four_point(), 2, 0), PreconditionError);
}

TEST_CASE("metric lemma on random posets") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = random_poset(20, 0.3, seed);
    const auto d = inc_components(p);
    for (const auto& part : d.parts)
      for (auto x : part)
        for (auto y : part)
          if (p.lt(x, y)) {
            const auto r = check_metric_lemma(p, x, y);
            CHECK(r.item1_ok);
            CHECK(r.item2_ok);
            ++checked;
          }
  }
  CHECK(checked > 0);
}
