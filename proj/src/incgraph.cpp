#include "chaincov/incgraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "chaincov/region.hpp"

namespace chaincov {

namespace {

constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();

void check_index(const Poset& p, std::size_t x) {
  if (x >= p.size()) throw IndexError("element " + std::to_string(x) + " out of range");
}

std::vector<std::size_t> bfs_distances(const Poset& p, std::size_t source) {
  std::vector<std::size_t> dist(p.size(), unreached);
  Bitset unvisited = p.all();
  dist[source] = 0;
  unvisited.reset(source);
  std::deque<std::size_t> queue{source};
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    (p.incomparable_to(u) & unvisited).for_each([&](std::size_t v) {
      dist[v] = dist[u] + 1;
      unvisited.reset(v);
      queue.push_back(v);
    });
  }
  return dist;
}

}  // namespace

LexDecomposition inc_components(const Poset& p, DecomposeOptions options) {
  LexDecomposition d;
  d.size = p.size();
  Bitset unvisited = p.all();
  for (auto start = unvisited.find_first(); start < p.size(); start = unvisited.find_first()) {
    Bitset component(p.size());
    component.set(start);
    unvisited.reset(start);
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      Bitset next = p.incomparable_to(u) & unvisited;
      unvisited -= next;
      component |= next;
      next.for_each([&](std::size_t v) { queue.push_back(v); });
    }
    d.parts.push_back(component.to_vector());
  }
  // Distinct components are uniformly comparable, so one representative
  // pair fixes their order.
  std::stable_sort(d.parts.begin(), d.parts.end(),
                   [&](const auto& a, const auto& b) { return p.lt(a.front(), b.front()); });

  if (options.verify) {
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
      for (std::size_t j = i + 1; j < d.parts.size(); ++j) {
        for (auto x : d.parts[i])
          for (auto y : d.parts[j])
            if (!p.lt(x, y))
              throw InternalInconsistency("components out of order: " + std::to_string(x) + " not below " +
                                          std::to_string(y));
      }
    }
  }
  for (const auto& part : d.parts) d.part_posets.push_back(induced(p, std::span<const std::size_t>(part)).poset);
  return d;
}

std::vector<std::size_t> component_index(const LexDecomposition& d) {
  std::vector<std::size_t> index(d.size, unreached);
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    for (auto x : d.parts[i]) index.at(x) = i;
  return index;
}

Poset recompose(const LexDecomposition& d) {
  if (d.parts.size() != d.part_posets.size()) throw MalformedDecomposition("parts and part posets differ in number");
  Bitset seen(d.size);
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (d.parts[i].size() != d.part_posets[i].size())
      throw MalformedDecomposition("part " + std::to_string(i) + " has the wrong number of elements");
    for (auto x : d.parts[i]) {
      if (x >= d.size || seen.test(x)) throw MalformedDecomposition("parts do not partition the elements");
      seen.set(x);
    }
  }
  if (seen.count() != d.size) throw MalformedDecomposition("parts do not cover every element");

  std::vector<Bitset> rows(d.size, Bitset(d.size));
  Bitset later(d.size);
  for (std::size_t i = d.parts.size(); i-- > 0;) {
    const auto& part = d.parts[i];
    for (std::size_t local = 0; local < part.size(); ++local) {
      auto& row = rows[part[local]];
      row |= later;
      d.part_posets[i].above(local).for_each([&](std::size_t other) { row.set(part[other]); });
    }
    for (auto x : part) later.set(x);
  }
  return Poset(closed_relation, std::move(rows));
}

std::optional<IncPath> inc_distance_path(const Poset& p, std::size_t x, std::size_t y) {
  check_index(p, x);
  check_index(p, y);
  const auto to_y = bfs_distances(p, y);
  if (to_y[x] == unreached) return std::nullopt;
  IncPath result{to_y[x], {x}};
  // Walking greedily towards y by smallest index yields the
  // lexicographically least shortest path.
  for (auto u = x; u != y;) {
    const auto nbrs = p.incomparable_to(u);
    auto v = nbrs.find_first();
    while (to_y[v] != to_y[u] - 1) v = nbrs.find_next(v + 1);
    result.path.push_back(v);
    u = v;
  }
  return result;
}

MetricReport check_metric_lemma(const Poset& p, std::size_t x, std::size_t y) {
  check_index(p, x);
  check_index(p, y);
  if (!p.lt(x, y)) throw PreconditionError("check_metric_lemma needs x < y");
  auto found = inc_distance_path(p, x, y);
  if (!found) throw PreconditionError("x and y lie in different incomparability components");

  MetricReport r;
  r.x = x;
  r.y = y;
  r.distance = found->distance;
  r.path = std::move(found->path);
  const auto& path = r.path;

  r.item1_ok = true;
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 2; j < path.size(); ++j) {
      if (!p.lt(path[i], path[j])) {
        r.item1_ok = false;
        r.violations.push_back("x_" + std::to_string(i) + "=" + std::to_string(path[i]) + " not below x_" +
                               std::to_string(j) + "=" + std::to_string(path[j]));
      }
    }
  }

  Bitset covered(p.size());
  for (std::size_t i = 1; i + 1 < path.size(); ++i) covered |= p.incomparable_to(path[i]);
  const auto span = interval(p, x, y).members;
  r.item2_ok = span.is_subset_of(covered);
  (span - covered).for_each([&](std::size_t z) {
    r.violations.push_back("interval element " + std::to_string(z) + " comparable to every inner path vertex");
  });
  return r;
}

}  // namespace chaincov
