#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "chaincov/bitset.hpp"
#include "chaincov/errors.hpp"

namespace chaincov {

using Relation = std::pair<std::size_t, std::size_t>;

/// Tag selecting the unchecked constructor of Poset.
struct closed_relation_t {
  explicit closed_relation_t() = default;
};
inline constexpr closed_relation_t closed_relation{};

/// Finite strict partial order on the elements 0..n-1.
///
/// The relation is stored reachability-closed as one bit row per element in
/// both directions, so `lt` is a single bit test and up/down sets are rows.
/// Values are immutable after construction.
class Poset {
 public:
  /// The empty poset.
  Poset() = default;

  /// Adopts `above`, where above[x] = {y : x < y}. The caller guarantees the
  /// rows describe a transitively closed strict order.
  Poset(closed_relation_t, std::vector<Bitset> above);

  /// Transitive closure of the pairs (u, v), each asserting u < v.
  /// Throws IndexError on an out-of-range index and CycleError if the
  /// closure is not irreflexive.
  static Poset from_relations(std::size_t n, std::span<const Relation> pairs);

  std::size_t size() const noexcept { return above_.size(); }
  bool empty() const noexcept { return above_.empty(); }

  bool lt(std::size_t x, std::size_t y) const noexcept { return above_[x].test(y); }
  bool leq(std::size_t x, std::size_t y) const noexcept { return x == y || lt(x, y); }
  bool comparable(std::size_t x, std::size_t y) const noexcept { return leq(x, y) || lt(y, x); }
  bool incomparable(std::size_t x, std::size_t y) const noexcept { return !comparable(x, y); }

  /// Strict upper set {y : x < y}.
  const Bitset& above(std::size_t x) const noexcept { return above_[x]; }
  /// Strict lower set {y : y < x}.
  const Bitset& below(std::size_t x) const noexcept { return below_[x]; }
  /// Elements incomparable to x (x excluded).
  Bitset incomparable_to(std::size_t x) const;

  Bitset all() const { return Bitset::full(size()); }

  /// Every pair (x, y) with x < y, sorted.
  std::vector<Relation> relations() const;
  /// Cover pairs of the Hasse diagram, sorted.
  std::vector<Relation> covers() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.above_ == b.above_; }

 private:
  std::vector<Bitset> above_;
  std::vector<Bitset> below_;
};

/// Poset induced on a subset, with `map[i]` the original index of element i.
struct InducedPoset {
  Poset poset;
  std::vector<std::size_t> map;
};

/// Same elements, opposite order.
Poset dual(const Poset& p);

/// Restriction of `p` to `subset`, elements numbered in the given order.
/// Throws IndexError on an out-of-range or repeated index.
InducedPoset induced(const Poset& p, std::span<const std::size_t> subset);
/// Restriction to the members of `subset`, in increasing index order.
InducedPoset induced(const Poset& p, const Bitset& subset);

bool has_greatest_element(const Poset& p);

/// Number of elements of a longest chain.
std::size_t height(const Poset& p);

/// True iff every proper initial segment has an upper bound outside it.
/// Only the maximal proper initial segments P \ {m}, m maximal, are tested:
/// strict boundedness passes from a segment to all its subsets.
/// Throws EmptyPosetError when p is empty.
bool is_pure(const Poset& p);

/// Purity by enumerating every proper downward-closed subset.
/// Exponential; throws SizeError for more than 20 elements.
bool is_pure_exhaustive(const Poset& p);

}  // namespace chaincov
