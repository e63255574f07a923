#include <doctest.h>

#include "chaincov/cover.hpp"
#include "chaincov/generators.hpp"
#include "chaincov/region.hpp"
#include "oracles.hpp"

using namespace chaincov;

namespace {

void check_cover(const Poset& p, const ChainCover& c) {
  CHECK(is_chain_partition(p, c.chains, p.all()));
  CHECK(is_antichain(p, c.certificate));
  CHECK(c.certificate.size() == c.width());
}

}  // namespace

TEST_CASE("min_chain_cover examples") {
  const auto g4 = grid_upper(4);
  const auto c4 = min_chain_cover(g4.poset);
  CHECK(c4.width() == 2);
  check_cover(g4.poset, c4);

  const auto a5 = min_chain_cover(antichain(5));
  CHECK(a5.width() == 5);
  for (const auto& c : a5.chains) CHECK(c.size() == 1);

  const auto g6 = grid_upper(6);
  CHECK(min_chain_cover(g6.poset).width() == 3);

  const auto empty = min_chain_cover(Poset{});
  CHECK(empty.width() == 0);
  CHECK(empty.certificate.empty());
}

TEST_CASE("max_antichain examples") {
  CHECK(max_antichain(chain(7)).size() == 1);

  const auto g6 = grid_upper(6);
  const std::vector<std::size_t> expected{g6.index_of(0, 5), g6.index_of(1, 4), g6.index_of(2, 3)};
  auto a = max_antichain(g6.poset);
  std::sort(a.begin(), a.end());
  auto e = expected;
  std::sort(e.begin(), e.end());
  CHECK(a == e);

  const std::vector<Poset> parts{antichain(2), antichain(3)};
  auto b = max_antichain(lex_sum(parts));
  std::sort(b.begin(), b.end());
  CHECK(b == std::vector<std::size_t>{2, 3, 4});
}

TEST_CASE("verify_dilworth on grids and chains") {
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto r = verify_dilworth(grid_upper(n).poset);
    CHECK(r.width == n / 2);
    CHECK(r.antichain.size() == n / 2);
  }
  for (std::size_t n = 2; n <= 8; ++n) CHECK(oracle::max_antichain_size(grid_upper(n).poset) == n / 2);
  CHECK(verify_dilworth(chain(9)).width == 1);
}

TEST_CASE("cover matches brute force on small random posets") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto n = 1 + seed % 10;
    const auto p = random_poset(n, 0.1 + 0.1 * static_cast<double>(seed % 6), seed);
    const auto c = min_chain_cover(p);
    check_cover(p, c);
    CHECK(c.width() == oracle::min_chain_partition(p));
    CHECK(c.width() == oracle::max_antichain_size(p));
  }
}

TEST_CASE("cover properties on larger random posets") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto p = random_poset(40, 0.05 + 0.05 * static_cast<double>(seed % 5), seed);
    const auto r = verify_dilworth(p);
    check_cover(p, r.cover);
    CHECK(cov(dual(p)) == r.width);
    Bitset half(p.size());
    for (std::size_t x = 0; x < p.size(); x += 2) half.set(x);
    CHECK(cov(p, half) <= r.width);
    CHECK(cov(p, half) == cov(induced(p, half).poset));
    for (std::size_t x = 0; x < p.size(); ++x)
      CHECK(r.width <= cov(p, down_set(p, x).members) + cov(p, up_set(p, x).members) +
                           cov(p, inc_set(p, x).members));
  }
}

TEST_CASE("restricted cover uses original indices") {
  const auto g = grid_upper(5);
  Bitset s(g.poset.size());
  s.set(g.index_of(0, 4));
  s.set(g.index_of(1, 3));
  s.set(g.index_of(2, 3));
  const auto c = min_chain_cover(g.poset, s);
  CHECK(c.width() == 2);
  CHECK(is_chain_partition(g.poset, c.chains, s));
}

TEST_CASE("predicates") {
  const auto g = grid_upper(4);
  const std::vector<std::size_t> two{g.index_of(0, 3), g.index_of(1, 2)};
  CHECK(is_antichain(g.poset, two));
  CHECK_FALSE(is_chain(g.poset, two));
  const std::vector<std::size_t> c{0, 1, 2};
  CHECK(is_chain(g.poset, c));
  const std::vector<std::vector<std::size_t>> overlapping{{0, 1}, {1, 2, 3, 4, 5}};
  CHECK_FALSE(is_chain_partition(g.poset, overlapping, g.poset.all()));
  const std::vector<std::vector<std::size_t>> missing{{0, 1, 2, 4, 5}};
  CHECK_FALSE(is_chain_partition(g.poset, missing, g.poset.all()));
}
