#include "chaincov/patterns.hpp"

#include <algorithm>

#include "chaincov/cover.hpp"
#include "chaincov/generators.hpp"

namespace chaincov {

bool validate_embedding(const Embedding& e) {
  const auto& q = e.source;
  const auto& p = e.target;
  if (e.map.size() != q.size()) return false;
  Bitset image(p.size());
  for (auto v : e.map) {
    if (v >= p.size() || image.test(v)) return false;
    image.set(v);
  }
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y)
      if (q.lt(x, y) != p.lt(e.map[x], e.map[y])) return false;
  return true;
}

namespace {

struct Signature {
  std::size_t up, down, inc;

  bool fits_in(const Signature& o) const { return up <= o.up && down <= o.down && inc <= o.inc; }
};

Signature signature(const Poset& p, std::size_t x) {
  const auto up = p.above(x).count();
  const auto down = p.below(x).count();
  return {up, down, p.size() - 1 - up - down};
}

class Search {
 public:
  Search(const Poset& target, const Poset& source, EmbedOptions options)
      : p_(target), q_(source), options_(options), order_(source.size()), map_(source.size()) {
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](auto a, auto b) { return q_.below(a).count() < q_.below(b).count(); });
    std::vector<Signature> target_sig;
    for (std::size_t x = 0; x < p_.size(); ++x) target_sig.push_back(signature(p_, x));
    base_.assign(q_.size(), Bitset(p_.size()));
    for (std::size_t x = 0; x < q_.size(); ++x) {
      const auto sig = signature(q_, x);
      for (std::size_t y = 0; y < p_.size(); ++y)
        if (sig.fits_in(target_sig[y])) base_[x].set(y);
    }
  }

  SearchStatus run() {
    Bitset used(p_.size());
    return extend(0, used);
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::size_t>& map() const { return map_; }

 private:
  SearchStatus extend(std::size_t depth, Bitset& used) {
    if (depth == order_.size()) return SearchStatus::found;
    const auto x = order_[depth];
    Bitset candidates = base_[x] - used;
    for (std::size_t k = 0; k < depth && candidates.any(); ++k) {
      const auto w = order_[k];
      const auto fw = map_[w];
      if (q_.lt(w, x)) {
        candidates &= p_.above(fw);
      } else if (q_.lt(x, w)) {
        candidates &= p_.below(fw);
      } else {
        candidates &= p_.incomparable_to(fw);
      }
    }
    for (auto c = candidates.find_first(); c < candidates.size(); c = candidates.find_next(c + 1)) {
      if (options_.budget && nodes_ >= *options_.budget) return SearchStatus::unknown;
      ++nodes_;
      map_[x] = c;
      used.set(c);
      const auto status = extend(depth + 1, used);
      used.reset(c);
      if (status != SearchStatus::not_found) return status;
    }
    return SearchStatus::not_found;
  }

  const Poset& p_;
  const Poset& q_;
  EmbedOptions options_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> base_;
  std::vector<std::size_t> map_;
  std::uint64_t nodes_ = 0;
};

EmbedResult search(const Poset& target, const Poset& source, EmbedOptions options) {
  Search s(target, source, options);
  EmbedResult result;
  result.status = s.run();
  result.nodes = s.nodes();
  if (result.status == SearchStatus::found) {
    Embedding e{source, target, s.map()};
    if (!validate_embedding(e)) throw InternalInconsistency("embedding search produced an invalid map");
    result.embedding = std::move(e);
  }
  return result;
}

}  // namespace

EmbedResult embeds(const Poset& target, const Poset& source, EmbedOptions options) {
  if (source.size() > target.size() || height(source) > height(target) || cov(source) > cov(target)) return {};
  return search(target, source, options);
}

EmbedResult embeds_grid(const Poset& target, std::size_t k, bool want_dual, EmbedOptions options) {
  if (k < 2) throw PreconditionError("embeds_grid needs k >= 2");
  // [k]^2 has k(k-1)/2 elements, longest chain 2k-3 and width floor(k/2);
  // all three are self-dual.
  if (k * (k - 1) / 2 > target.size() || 2 * k - 3 > height(target) || k / 2 > cov(target)) return {};
  auto grid = grid_upper(k).poset;
  return search(target, want_dual ? dual(grid) : grid, options);
}

}  // namespace chaincov
