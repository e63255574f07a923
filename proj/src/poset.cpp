#include "chaincov/poset.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <string>

namespace chaincov {

namespace {

std::string describe_cycle(const std::vector<std::size_t>& cycle) {
  std::ostringstream os;
  os << "relation is not a strict order; cycle:";
  for (auto v : cycle) os << ' ' << v;
  if (!cycle.empty()) os << ' ' << cycle.front();
  return os.str();
}

// Shortest cycle through `start` along the input edges.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& adj, std::size_t start) {
  std::vector<std::size_t> parent(adj.size(), adj.size());
  std::deque<std::size_t> queue{start};
  std::vector<bool> seen(adj.size(), false);
  seen[start] = true;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : adj[u]) {
      if (v == start) {
        std::vector<std::size_t> cycle{u};
        while (cycle.back() != start) cycle.push_back(parent[cycle.back()]);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  return {start};
}

}  // namespace

CycleError::CycleError(std::vector<std::size_t> cycle)
    : Error(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

FormatError::FormatError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

Poset::Poset(closed_relation_t, std::vector<Bitset> above) : above_(std::move(above)) {
  const auto n = above_.size();
  below_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) above_[x].for_each([&](std::size_t y) { below_[y].set(x); });
}

Poset Poset::from_relations(std::size_t n, std::span<const Relation> pairs) {
  std::vector<Bitset> reach(n, Bitset(n));
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n) {
      throw IndexError("relation (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for " + std::to_string(n) + " elements");
    }
    if (u == v) throw CycleError({u});
    reach[u].set(v);
    adj[u].push_back(v);
  }
  // Warshall, one row at a time.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (reach[i].test(k)) reach[i] |= reach[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[i].test(i)) throw CycleError(find_cycle(adj, i));
  }
  return Poset(closed_relation, std::move(reach));
}

Bitset Poset::incomparable_to(std::size_t x) const {
  Bitset b = ~(above_[x] | below_[x]);
  b.reset(x);
  return b;
}

std::vector<Relation> Poset::relations() const {
  std::vector<Relation> out;
  for (std::size_t x = 0; x < size(); ++x) above_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
  return out;
}

std::vector<Relation> Poset::covers() const {
  std::vector<Relation> out;
  for (std::size_t x = 0; x < size(); ++x) {
    Bitset upper = above_[x];
    Bitset indirect(size());
    upper.for_each([&](std::size_t y) { indirect |= above_[y]; });
    (upper - indirect).for_each([&](std::size_t y) { out.emplace_back(x, y); });
  }
  return out;
}

Poset dual(const Poset& p) {
  std::vector<Bitset> rows;
  rows.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) rows.push_back(p.below(x));
  return Poset(closed_relation, std::move(rows));
}

InducedPoset induced(const Poset& p, std::span<const std::size_t> subset) {
  const auto n = p.size();
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    auto v = subset[i];
    if (v >= n) throw IndexError("element " + std::to_string(v) + " out of range");
    if (position[v] != n) throw IndexError("element " + std::to_string(v) + " repeated");
    position[v] = i;
  }
  std::vector<Bitset> rows(subset.size(), Bitset(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    p.above(subset[i]).for_each([&](std::size_t y) {
      if (position[y] != n) rows[i].set(position[y]);
    });
  }
  return {Poset(closed_relation, std::move(rows)), {subset.begin(), subset.end()}};
}

InducedPoset induced(const Poset& p, const Bitset& subset) {
  if (subset.size() != p.size()) throw IndexError("subset universe does not match poset size");
  auto members = subset.to_vector();
  return induced(p, std::span<const std::size_t>(members));
}

bool has_greatest_element(const Poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.below(x).count() + 1 == p.size()) return true;
  }
  return false;
}

std::size_t height(const Poset& p) {
  // Elements sorted by down-set size form a linear extension.
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return p.below(a).count() < p.below(b).count(); });
  std::vector<std::size_t> longest(p.size(), 1);
  std::size_t best = 0;
  for (auto x : order) {
    p.below(x).for_each([&](std::size_t y) { longest[x] = std::max(longest[x], longest[y] + 1); });
    best = std::max(best, longest[x]);
  }
  return best;
}

bool is_pure(const Poset& p) {
  if (p.empty()) throw EmptyPosetError();
  const auto n = p.size();
  for (std::size_t m = 0; m < n; ++m) {
    if (p.above(m).any()) continue;
    // The minimal nonempty up-set {m}; its complement is a maximal proper
    // initial segment, and the only candidate bound outside it is m.
    Bitset segment = p.all();
    segment.reset(m);
    Bitset outside = p.all() - segment;
    bool bounded = false;
    outside.for_each([&](std::size_t x) {
      if (!bounded && segment.is_subset_of(p.below(x))) bounded = true;
    });
    if (!bounded) return false;
  }
  return true;
}

bool is_pure_exhaustive(const Poset& p) {
  if (p.empty()) throw EmptyPosetError();
  const auto n = p.size();
  if (n > 20) throw SizeError("exhaustive purity check limited to 20 elements");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> below(n), above(n);
  for (std::size_t x = 0; x < n; ++x) {
    p.below(x).for_each([&](std::size_t y) { below[x] |= std::uint64_t{1} << y; });
    p.above(x).for_each([&](std::size_t y) { above[x] |= std::uint64_t{1} << y; });
  }
  for (std::uint64_t s = 0; s < full; ++s) {
    bool downward_closed = true;
    for (std::size_t x = 0; x < n && downward_closed; ++x) {
      if ((s >> x & 1u) && (below[x] & ~s)) downward_closed = false;
    }
    if (!downward_closed) continue;
    bool bounded = false;
    for (std::size_t x = 0; x < n && !bounded; ++x) {
      if (!(s >> x & 1u) && (s & ~below[x]) == 0) bounded = true;
    }
    if (!bounded) return false;
  }
  return true;
}

}  // namespace chaincov
