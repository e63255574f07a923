#include "chaincov/generators.hpp"

#include "chaincov/random.hpp"

namespace chaincov {

std::size_t grid_index(std::size_t n, std::size_t alpha, std::size_t beta) {
  if (!(alpha < beta && beta < n)) {
    throw IndexError("(" + std::to_string(alpha) + "," + std::to_string(beta) + ") is not in the grid of size " +
                     std::to_string(n));
  }
  // rows 0..alpha-1 hold n-1, n-2, ..., n-alpha elements
  return alpha * (2 * n - alpha - 1) / 2 + (beta - alpha - 1);
}

std::size_t GridPoset::index_of(std::size_t alpha, std::size_t beta) const { return grid_index(n, alpha, beta); }

std::vector<std::string> GridPoset::label_strings() const {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (auto [a, b] : labels) out.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return out;
}

GridPoset grid_upper(std::size_t n) {
  if (n < 2) throw SizeError("grid_upper needs n >= 2");
  GridPoset g;
  g.n = n;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) g.labels.push_back({a, b});
  const auto size = g.labels.size();
  std::vector<Bitset> rows(size, Bitset(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (i != j && g.labels[i].alpha <= g.labels[j].alpha && g.labels[i].beta <= g.labels[j].beta) rows[i].set(j);
    }
  }
  g.poset = Poset(closed_relation, std::move(rows));
  return g;
}

Poset chain(std::size_t n) {
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rows[i].set(j);
  return Poset(closed_relation, std::move(rows));
}

Poset antichain(std::size_t n) { return Poset(closed_relation, std::vector<Bitset>(n, Bitset(n))); }

Poset lex_sum(std::span<const Poset> parts) {
  if (parts.empty()) throw PreconditionError("lex_sum needs at least one part");
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  std::vector<Bitset> rows(total, Bitset(total));
  std::size_t offset = 0;
  for (const auto& part : parts) {
    const auto end = offset + part.size();
    for (std::size_t x = 0; x < part.size(); ++x) {
      auto& row = rows[offset + x];
      part.above(x).for_each([&](std::size_t y) { row.set(offset + y); });
      for (std::size_t z = end; z < total; ++z) row.set(z);
    }
    offset = end;
  }
  return Poset(closed_relation, std::move(rows));
}

Poset random_poset(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
  Xorshift64Star rng(seed);
  std::vector<Relation> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform() < p) pairs.emplace_back(i, j);
  return Poset::from_relations(n, pairs);
}

CanonicalIdealChain canonical_ideal_chain(std::size_t n, std::size_t m) {
  if (m < 1 || m >= n) throw SizeError("canonical_ideal_chain needs 1 <= m < n");
  CanonicalIdealChain out{grid_upper(n), {}};
  out.chain.poset = out.grid.poset;
  for (std::size_t a = 0; a < m; ++a) {
    Bitset ideal(out.grid.labels.size());
    for (std::size_t i = 0; i < out.grid.labels.size(); ++i)
      if (out.grid.labels[i].alpha <= a) ideal.set(i);
    out.chain.ideals.push_back(std::move(ideal));
  }
  return out;
}

}  // namespace chaincov
