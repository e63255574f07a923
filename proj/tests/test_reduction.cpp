#include <doctest.h>

#include "chaincov/cover.hpp"
#include "chaincov/generators.hpp"
#include "chaincov/incgraph.hpp"
#include "chaincov/reduction.hpp"
#include "chaincov/region.hpp"

using namespace chaincov;

namespace {

std::size_t cov_inc_within(const Poset& q, std::size_t x) { return cov(q, q.incomparable_to(x)); }

}  // namespace

TEST_CASE("claim1_reduce examples") {
  const auto a = claim1_reduce(antichain(3), 2);
  CHECK(a.antichain == std::vector<std::size_t>{0});
  CHECK(a.index_map == std::vector<std::size_t>{1, 2});
  CHECK(cov(a.q) == 2);
  CHECK(cov_inc_within(a.q, 0) == 1);

  const auto g = claim1_reduce(grid_upper(6).poset, 3);
  CHECK(g.antichain.empty());
  CHECK(g.q == grid_upper(6).poset);

  const auto c = claim1_reduce(chain(4), 1);
  CHECK(c.antichain.empty());
  CHECK(c.q == chain(4));

  CHECK_THROWS_AS(claim1_reduce(chain(4), 2), PreconditionError);
  CHECK_THROWS_AS(claim1_reduce(chain(4), 0), PreconditionError);
}

TEST_CASE("claim1 postconditions on random posets") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto p = random_poset(30, 0.05 + 0.03 * static_cast<double>(seed % 6), seed);
    const auto width = cov(p);
    for (std::size_t t = 1; t <= width; t += 1 + width / 4) {
      const auto r = claim1_reduce(p, t);
      CHECK(cov(r.q) >= t);
      for (std::size_t x = 0; x < r.q.size(); ++x) CHECK(cov_inc_within(r.q, x) < t);
      CHECK(is_antichain(p, r.antichain));
      CHECK(r.q == induced(p, std::span<const std::size_t>(r.index_map)).poset);
      for (auto x : r.index_map)
        for (auto l : r.antichain) CHECK(p.incomparable(x, l));
    }
  }
}

TEST_CASE("reduce on antichain(3)") {
  const auto r = reduce(antichain(3), 2);
  CHECK(r.kind == ReductionCase::case1);
  CHECK(r.antichain == std::vector<std::size_t>{0});
  CHECK(r.claim1_elements == std::vector<std::size_t>{1, 2});
  REQUIRE(r.components.size() == 1);
  CHECK(r.component_covs == std::vector<std::size_t>{2});
  REQUIRE(r.profiles.size() == 2);
  CHECK(r.profiles[0].element == 1);
  CHECK(r.profiles[0].cov_outside == 1);
  CHECK(r.x0 == std::optional<std::size_t>{1});
  CHECK(r.index_map == std::vector<std::size_t>{1});
  CHECK(r.subadditive);
}

TEST_CASE("reduce on two stacked 2-antichains, regression fixture") {
  const std::vector<Poset> parts{antichain(2), antichain(2)};
  const auto r = reduce(lex_sum(parts), 2);
  CHECK(r.antichain.empty());
  CHECK(r.claim1_elements == std::vector<std::size_t>{0, 1, 2, 3});
  const std::vector<std::vector<std::size_t>> comps{{0, 1}, {2, 3}};
  CHECK(r.components == comps);
  CHECK(r.component_covs == std::vector<std::size_t>{2, 2});
  CHECK(r.component == std::optional<std::size_t>{0});
  CHECK(r.kind == ReductionCase::case1);
  CHECK(r.x0 == std::optional<std::size_t>{0});
  CHECK(r.index_map == std::vector<std::size_t>{0});
  CHECK(r.reduced_profile == std::vector<std::size_t>{0});
}

TEST_CASE("reduce on a chain") {
  const auto r = reduce(chain(5), 1);
  CHECK(r.kind == ReductionCase::case1);
  // every element is its own incomparability component
  CHECK(r.components.size() == 5);
  CHECK(r.component == std::optional<std::size_t>{0});
  CHECK(r.x0 == std::optional<std::size_t>{0});
  CHECK(r.index_map == std::vector<std::size_t>{0});
  for (const auto& e : r.profiles) {
    CHECK(e.cov_inc == 0);
    CHECK(e.cov_up <= 1);
    CHECK(e.cov_down <= 1);
  }
  CHECK(to_string(r.kind) == "case1");
  CHECK_THROWS_AS(reduce(chain(5), 2), PreconditionError);
}

TEST_CASE("reduce invariants on random posets") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = random_poset(28, 0.08 + 0.04 * static_cast<double>(seed % 5), seed);
    const auto t = std::max<std::size_t>(1, cov(p) / 2);
    const auto r = reduce(p, t);
    CHECK(r.subadditive);
    if (r.kind == ReductionCase::case2) {
      for (auto c : r.component_covs) CHECK(c < t);
      continue;
    }
    REQUIRE(r.x0.has_value());
    REQUIRE(r.component.has_value());
    CHECK(r.component_covs[*r.component] >= t);
    for (const auto& e : r.profiles) CHECK(2 * std::max(e.cov_up, e.cov_down) + e.cov_inc >= t);
    CHECK(r.q == induced(p, std::span<const std::size_t>(r.index_map)).poset);
    const auto anchor = std::find(r.index_map.begin(), r.index_map.end(), *r.x0);
    REQUIRE(anchor != r.index_map.end());
    for (auto x : r.index_map)
      CHECK((r.kind == ReductionCase::case1 ? p.leq(*r.x0, x) : p.leq(x, *r.x0)));
    CHECK(r.reduced_profile.size() == r.q.size());
  }
}

TEST_CASE("cover_bound_report") {
  // x0 = 0 < z = 1 < y = 2, x1 = 3 incomparable to all
  const std::vector<Relation> rel{{0, 1}, {1, 2}};
  const auto p = Poset::from_relations(4, rel);
  const auto r = cover_bound_report(p, 0, 2);
  CHECK(r.path == std::vector<std::size_t>{0, 3, 2});
  CHECK(r.interval == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.inclusion1_ok);
  CHECK(r.inclusion2_ok);
  CHECK(r.outside_cov == 1);
  CHECK(r.bound_ok);

  CHECK_THROWS_AS(cover_bound_report(p, 0, 0), PreconditionError);
  CHECK_THROWS_AS(cover_bound_report(chain(3), 0, 2), PreconditionError);
}

TEST_CASE("claim-2 inclusions on random posets") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = random_poset(22, 0.3, seed);
    const auto comp = component_index(inc_components(p));
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.lt(x, y) && comp[x] == comp[y]) {
          const auto r = cover_bound_report(p, x, y);
          CHECK(r.inclusion1_ok);
          CHECK(r.inclusion2_ok);
          CHECK(r.bound_ok);
          ++checked;
        }
  }
  CHECK(checked > 0);
}
