#include "chaincov/cover.hpp"

#include <deque>
#include <limits>

namespace chaincov {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

// Hopcroft-Karp on the split graph of `p` restricted to `subset`. Left and
// right copies share element indices. Vertices and neighbours are visited in
// increasing index order, so the matching is deterministic.
class SplitMatching {
 public:
  SplitMatching(const Poset& p, const Bitset& subset)
      : p_(p), subset_(subset), match_left_(p.size(), none), match_right_(p.size(), none), dist_(p.size()) {
    while (layer()) {
      subset_.for_each([&](std::size_t u) {
        if (match_left_[u] == none) augment(u);
      });
    }
  }

  const std::vector<std::size_t>& match_left() const { return match_left_; }
  const std::vector<std::size_t>& match_right() const { return match_right_; }

  std::size_t size() const {
    std::size_t m = 0;
    subset_.for_each([&](std::size_t u) { m += match_left_[u] != none; });
    return m;
  }

 private:
  Bitset neighbours(std::size_t u) const { return p_.above(u) & subset_; }

  bool layer() {
    std::deque<std::size_t> queue;
    subset_.for_each([&](std::size_t u) {
      if (match_left_[u] == none) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = none;
      }
    });
    bool found = false;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      neighbours(u).for_each([&](std::size_t v) {
        auto w = match_right_[v];
        if (w == none) {
          found = true;
        } else if (dist_[w] == none) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      });
    }
    return found;
  }

  bool augment(std::size_t u) {
    const auto adj = neighbours(u);
    for (auto v = adj.find_first(); v < adj.size(); v = adj.find_next(v + 1)) {
      auto w = match_right_[v];
      if (w == none || (dist_[w] == dist_[u] + 1 && augment(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = none;
    return false;
  }

  const Poset& p_;
  const Bitset& subset_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

std::vector<std::vector<std::size_t>> chains_from(const SplitMatching& m, const Bitset& subset) {
  std::vector<std::vector<std::size_t>> chains;
  subset.for_each([&](std::size_t x) {
    if (m.match_right()[x] != none) return;
    auto& chain = chains.emplace_back();
    for (auto y = x; y != none; y = m.match_left()[y]) chain.push_back(y);
  });
  return chains;
}

// Elements whose left copy is reachable from a free left vertex by an
// alternating path while the right copy is not.
std::vector<std::size_t> antichain_from(const Poset& p, const SplitMatching& m, const Bitset& subset) {
  const auto n = p.size();
  Bitset left(n), right(n);
  std::deque<std::size_t> queue;
  subset.for_each([&](std::size_t u) {
    if (m.match_left()[u] == none) {
      left.set(u);
      queue.push_back(u);
    }
  });
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    ((p.above(u) & subset) - right).for_each([&](std::size_t v) {
      if (m.match_left()[u] == v) return;
      right.set(v);
      auto w = m.match_right()[v];
      if (w != none && !left.test(w)) {
        left.set(w);
        queue.push_back(w);
      }
    });
  }
  return ((left - right) & subset).to_vector();
}

}  // namespace

ChainCover min_chain_cover(const Poset& p, const Bitset& subset) {
  SplitMatching m(p, subset);
  return {chains_from(m, subset), antichain_from(p, m, subset)};
}

ChainCover min_chain_cover(const Poset& p) { return min_chain_cover(p, p.all()); }

std::vector<std::size_t> max_antichain(const Poset& p) {
  const auto all = p.all();
  SplitMatching m(p, all);
  return antichain_from(p, m, all);
}

std::size_t cov(const Poset& p, const Bitset& subset) {
  SplitMatching m(p, subset);
  return subset.count() - m.size();
}

std::size_t cov(const Poset& p) { return cov(p, p.all()); }

bool is_chain(const Poset& p, std::span<const std::size_t> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!p.lt(elements[i], elements[j]) && !p.lt(elements[j], elements[i])) return false;
    }
  }
  return true;
}

bool is_antichain(const Poset& p, std::span<const std::size_t> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (p.comparable(elements[i], elements[j])) return false;
    }
  }
  return true;
}

bool is_chain_partition(const Poset& p, const std::vector<std::vector<std::size_t>>& chains,
                        const Bitset& universe) {
  Bitset seen(p.size());
  for (const auto& chain : chains) {
    if (chain.empty() || !is_chain(p, chain)) return false;
    for (auto x : chain) {
      if (x >= p.size() || seen.test(x) || !universe.test(x)) return false;
      seen.set(x);
    }
  }
  return seen == universe;
}

DilworthReport verify_dilworth(const Poset& p) {
  DilworthReport report;
  report.cover = min_chain_cover(p);
  report.antichain = max_antichain(p);
  report.width = report.cover.width();
  if (!is_chain_partition(p, report.cover.chains, p.all()))
    throw InternalInconsistency("chain cover is not a partition into chains");
  if (!is_antichain(p, report.antichain)) throw InternalInconsistency("certificate is not an antichain");
  if (report.antichain.size() != report.width)
    throw InternalInconsistency("antichain size " + std::to_string(report.antichain.size()) +
                                " differs from cover width " + std::to_string(report.width));
  if (report.cover.certificate != report.antichain)
    throw InternalInconsistency("cover certificate differs from extracted antichain");
  return report;
}

}  // namespace chaincov
