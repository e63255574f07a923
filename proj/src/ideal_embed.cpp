#include "chaincov/ideal_embed.hpp"

#include <algorithm>
#include <cassert>

#include "chaincov/generators.hpp"

namespace chaincov {

std::string to_string(IdealViolationKind kind) {
  switch (kind) {
    case IdealViolationKind::wrong_universe: return "wrong_universe";
    case IdealViolationKind::not_downward_closed: return "not_downward_closed";
    case IdealViolationKind::not_directed: return "not_directed";
    case IdealViolationKind::not_nested: return "not_nested";
    case IdealViolationKind::empty_layer: return "empty_layer";
    case IdealViolationKind::no_cofinal_chain: return "no_cofinal_chain";
  }
  return "?";
}

std::vector<Bitset> IdealChain::layers() const {
  std::vector<Bitset> out;
  Bitset earlier(poset.size());
  for (const auto& ideal : ideals) {
    out.push_back(ideal - earlier);
    earlier |= ideal;
  }
  return out;
}

namespace {

Bitset up_closed(const Poset& p, std::size_t x) {
  Bitset b = p.above(x);
  b.set(x);
  return b;
}

std::size_t longest_chain_in(const Poset& p, const Bitset& members) {
  if (members.none()) return 0;
  return height(induced(p, members).poset);
}

}  // namespace

IdealChainReport validate_ideal_chain(const IdealChain& c) {
  IdealChainReport report;
  const auto& p = c.poset;
  const auto m = c.ideals.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (c.ideals[a].size() != p.size()) {
      report.violations.push_back({IdealViolationKind::wrong_universe, a, {}});
      return report;
    }
  }

  for (std::size_t a = 0; a < m; ++a) {
    const auto& ideal = c.ideals[a];
    bool closed = true;
    ideal.for_each([&](std::size_t y) {
      if (!closed) return;
      const auto missing = p.below(y) - ideal;
      if (missing.any()) {
        closed = false;
        report.violations.push_back({IdealViolationKind::not_downward_closed, a, {missing.find_first(), y}});
      }
    });

    const auto members = ideal.to_vector();
    bool directed = true;
    for (std::size_t i = 0; i < members.size() && directed; ++i) {
      for (std::size_t j = i + 1; j < members.size() && directed; ++j) {
        if (!(up_closed(p, members[i]) & up_closed(p, members[j])).intersects(ideal)) {
          directed = false;
          report.violations.push_back({IdealViolationKind::not_directed, a, {members[i], members[j]}});
        }
      }
    }

    // A finite chain is cofinal in J exactly when its top is the greatest
    // element of J.
    if (ideal.any()) {
      bool has_top = false;
      std::vector<std::size_t> maximal;
      ideal.for_each([&](std::size_t x) {
        Bitset down = p.below(x);
        down.set(x);
        if (ideal.is_subset_of(down)) has_top = true;
        if (!p.above(x).intersects(ideal)) maximal.push_back(x);
      });
      if (!has_top) report.violations.push_back({IdealViolationKind::no_cofinal_chain, a, maximal});
    }

    if (a + 1 < m) {
      const auto& next = c.ideals[a + 1];
      const auto missing = ideal - next;
      if (missing.any()) {
        report.violations.push_back({IdealViolationKind::not_nested, a, {missing.find_first()}});
      } else if (ideal == next) {
        report.violations.push_back({IdealViolationKind::not_nested, a, {}});
      }
    }
  }

  const auto layers = c.layers();
  for (std::size_t a = 0; a < m; ++a) {
    if (layers[a].none()) report.violations.push_back({IdealViolationKind::empty_layer, a, {}});
    report.layer_supply.push_back(longest_chain_in(p, layers[a]) >= m - a);
  }
  return report;
}

bool satisfies_layer_condition(const IdealChain& c, const Embedding& e) {
  const auto m = c.ideals.size();
  if (m < 2 || e.map.size() != m * (m - 1) / 2) return false;
  const auto layers = c.layers();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto image = e.map[grid_index(m, a, b)];
      if (image >= c.poset.size() || !layers[a].test(image)) return false;
    }
  return true;
}

namespace {

struct Position {
  std::size_t alpha;
  std::size_t beta;
};

class LayeredSearch {
 public:
  LayeredSearch(const IdealChain& c, std::uint64_t budget)
      : p_(c.poset), layers_(c.layers()), budget_(budget), m_(c.ideals.size()) {
    for (std::size_t b = 1; b < m_; ++b)
      for (std::size_t a = 0; a < b; ++a) positions_.push_back({a, b});
    image_.assign(positions_.size(), 0);
    extension_.resize(p_.size());
    for (std::size_t i = 0; i < extension_.size(); ++i) extension_[i] = i;
    std::stable_sort(extension_.begin(), extension_.end(),
                     [&](auto x, auto y) { return p_.below(x).count() < p_.below(y).count(); });
  }

  IdealEmbedStatus run(IdealEmbedResult& result) {
    Bitset used(p_.size());
    const auto status = place(0, used, result);
    result.nodes = nodes_;
    if (status == IdealEmbedStatus::found) {
      std::vector<std::size_t> map(positions_.size());
      for (std::size_t k = 0; k < positions_.size(); ++k)
        map[grid_index(m_, positions_[k].alpha, positions_[k].beta)] = image_[k];
      result.embedding = Embedding{grid_upper(m_).poset, p_, std::move(map)};
    }
    return status;
  }

 private:
  IdealEmbedStatus place(std::size_t k, Bitset& used, IdealEmbedResult& result) {
    if (k == positions_.size()) return IdealEmbedStatus::found;
    const auto [a, b] = positions_[k];
    Bitset candidates = layers_[a] - used;
    std::vector<std::size_t> above, not_below;
    for (std::size_t j = 0; j < k; ++j) {
      const auto [a2, b2] = positions_[j];
      const auto f = image_[j];
      if (a2 <= a && b2 <= b) {
        candidates &= p_.above(f);
        above.push_back(f);
      } else {
        // placed earlier and not below (a, b): a2 > a, b2 < b
        candidates -= p_.below(f);
        candidates.reset(f);
        not_below.push_back(f);
      }
    }
    if (candidates.none() && (k > farthest_ || !blocked_)) {
      farthest_ = k;
      blocked_ = true;
      result.blocked_alpha = a;
      result.blocked_beta = b;
      result.required_above = above;
      result.required_not_below = not_below;
    }
    for (auto x : extension_) {
      if (!candidates.test(x)) continue;
      if (nodes_ >= budget_) return IdealEmbedStatus::budget_exhausted;
      ++nodes_;
      // f(a2, b2) <= x is impossible for a2 > a: x sits in J_a, which is
      // downward closed and misses layer a2.
      for (auto f : not_below) {
        (void)f;
        assert(!p_.lt(f, x));
      }
      image_[k] = x;
      used.set(x);
      const auto status = place(k + 1, used, result);
      used.reset(x);
      if (status != IdealEmbedStatus::failed) return status;
    }
    return IdealEmbedStatus::failed;
  }

  const Poset& p_;
  std::vector<Bitset> layers_;
  std::uint64_t budget_;
  std::size_t m_;
  std::vector<Position> positions_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> extension_;
  std::uint64_t nodes_ = 0;
  std::size_t farthest_ = 0;
  bool blocked_ = false;
};

}  // namespace

IdealEmbedResult embed_from_ideal_chain(const IdealChain& c, IdealEmbedOptions options) {
  if (c.ideals.size() < 2) throw InvalidChain("an ideal chain of length at least 2 is required");
  const auto report = validate_ideal_chain(c);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw InvalidChain("ideal " + std::to_string(v.ideal) + ": " + to_string(v.kind));
  }
  IdealEmbedResult result;
  LayeredSearch search(c, options.budget);
  result.status = search.run(result);
  if (result.status == IdealEmbedStatus::found) {
    if (!validate_embedding(*result.embedding) || !satisfies_layer_condition(c, *result.embedding))
      throw InternalInconsistency("layered construction produced an invalid embedding");
  }
  return result;
}

}  // namespace chaincov
