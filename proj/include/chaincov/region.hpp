#pragma once

#include <cstddef>
#include <span>

#include "chaincov/bitset.hpp"
#include "chaincov/poset.hpp"

namespace chaincov {

enum class RegionKind { up, down, interval, inc };

/// A set of elements of a poset together with the construction that
/// produced it.
struct Region {
  RegionKind kind;
  Bitset members;
};

/// Upward closure of `seeds` (seeds included).
Region up_set(const Poset& p, std::span<const std::size_t> seeds);
Region up_set(const Poset& p, std::size_t x);

/// Downward closure of `seeds` (seeds included).
Region down_set(const Poset& p, std::span<const std::size_t> seeds);
Region down_set(const Poset& p, std::size_t x);

/// {z : a <= z <= b}. Throws PreconditionError unless a <= b.
Region interval(const Poset& p, std::size_t a, std::size_t b);

/// Elements incomparable to every seed. With no seeds this is the whole
/// poset (vacuous condition).
Region inc_set(const Poset& p, std::span<const std::size_t> seeds);
Region inc_set(const Poset& p, std::size_t x);

/// Same as inc_set but with the seeds given as a bitset.
Bitset incomparable_to_all(const Poset& p, const Bitset& seeds);

/// Checks the closure property that belongs to `r.kind`.
bool has_closure_property(const Poset& p, const Region& r);

}  // namespace chaincov
