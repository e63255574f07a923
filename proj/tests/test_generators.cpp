#include <doctest.h>

#include "chaincov/cover.hpp"
#include "chaincov/generators.hpp"
#include "chaincov/ideal_embed.hpp"
#include "chaincov/incgraph.hpp"
#include "chaincov/random.hpp"
#include "oracles.hpp"

using namespace chaincov;

TEST_CASE("grid_upper") {
  CHECK_THROWS_AS(grid_upper(1), SizeError);
  const auto g2 = grid_upper(2);
  CHECK(g2.poset.size() == 1);
  CHECK(g2.labels[0] == GridLabel{0, 1});
  CHECK(grid_upper(3).poset == chain(3));

  const auto g4 = grid_upper(4);
  std::size_t inc_pairs = 0;
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = x + 1; y < 6; ++y)
      if (g4.poset.incomparable(x, y)) ++inc_pairs;
  CHECK(inc_pairs == 1);
  CHECK(g4.poset.incomparable(g4.index_of(0, 3), g4.index_of(1, 2)));
  CHECK(g4.label_strings()[2] == "(0,3)");
}

TEST_CASE("grid order is coordinatewise") {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto g = grid_upper(n);
    CHECK(g.poset.size() == n * (n - 1) / 2);
    for (std::size_t x = 0; x < g.poset.size(); ++x) {
      CHECK(g.index_of(g.labels[x].alpha, g.labels[x].beta) == x);
      CHECK(grid_index(n, g.labels[x].alpha, g.labels[x].beta) == x);
      for (std::size_t y = 0; y < g.poset.size(); ++y) {
        const auto& a = g.labels[x];
        const auto& b = g.labels[y];
        CHECK(g.poset.leq(x, y) == (a.alpha <= b.alpha && a.beta <= b.beta));
      }
    }
  }
}

TEST_CASE("grid width is floor(n/2)") {
  for (std::size_t n = 2; n <= 40; ++n) CHECK(cov(grid_upper(n).poset) == n / 2);
}

TEST_CASE("lex_sum") {
  const std::vector<Poset> aa{antichain(2), antichain(3)};
  const auto p = lex_sum(aa);
  CHECK(p.size() == 5);
  CHECK(cov(p) == 3);
  CHECK(p.lt(0, 2));
  CHECK(p.incomparable(0, 1));

  const std::vector<Poset> cc{chain(2), chain(3)};
  CHECK(lex_sum(cc) == chain(5));

  const std::vector<Poset> gg{grid_upper(4).poset, grid_upper(6).poset};
  CHECK(cov(lex_sum(gg)) == 3);

  CHECK_THROWS_AS(lex_sum(std::span<const Poset>{}), PreconditionError);
}

TEST_CASE("lex_sum of connected parts is recovered by inc_components") {
  const std::vector<Poset> parts{antichain(3), grid_upper(5).poset, antichain(1), antichain(2)};
  const auto p = lex_sum(parts);
  const auto d = inc_components(p);
  const auto inner = inc_components(grid_upper(5).poset);
  CHECK(d.parts.size() == 1 + inner.parts.size() + 1 + 1);
  CHECK(d.parts.front() == std::vector<std::size_t>{0, 1, 2});
  CHECK(d.parts.back() == std::vector<std::size_t>{14, 15});
  std::size_t best = 0;
  for (const auto& q : parts) best = std::max(best, cov(q));
  CHECK(cov(p) == best);
}

TEST_CASE("random_poset") {
  CHECK(random_poset(0, 0.5, 1).size() == 0);
  CHECK(random_poset(12, 0.0, 7) == antichain(12));
  CHECK(random_poset(12, 1.0, 7) == chain(12));
  CHECK(random_poset(30, 0.2, 99) == random_poset(30, 0.2, 99));
  CHECK_FALSE(random_poset(30, 0.2, 99) == random_poset(30, 0.2, 100));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = random_poset(25, 0.3, seed);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y <= x; ++y) CHECK_FALSE(p.lt(x, y));
  }
}

TEST_CASE("xorshift64* stream is fixed") {
  Xorshift64Star a(42);
  Xorshift64Star b(42);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());
  Xorshift64Star c(42);
  const double u = c.uniform();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}

TEST_CASE("canonical_ideal_chain") {
  const auto c63 = canonical_ideal_chain(6, 3);
  REQUIRE(c63.chain.ideals.size() == 3);
  CHECK(c63.chain.ideals[0].count() == 5);
  CHECK(c63.chain.ideals[1].count() == 9);
  CHECK(c63.chain.ideals[2].count() == 12);

  const auto c42 = canonical_ideal_chain(4, 2);
  const auto& g = c42.grid;
  CHECK(c42.chain.ideals[0].to_vector() ==
        std::vector<std::size_t>{g.index_of(0, 1), g.index_of(0, 2), g.index_of(0, 3)});

  const auto c51 = canonical_ideal_chain(5, 1);
  REQUIRE(c51.chain.ideals.size() == 1);
  CHECK(c51.chain.ideals[0].count() == 4);

  CHECK_THROWS_AS(canonical_ideal_chain(4, 0), SizeError);
  CHECK_THROWS_AS(canonical_ideal_chain(4, 4), SizeError);

  for (std::size_t n = 3; n <= 10; ++n)
    for (std::size_t m = 1; m < n; ++m) CHECK(validate_ideal_chain(canonical_ideal_chain(n, m).chain).ok());
}
