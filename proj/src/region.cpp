#include "chaincov/region.hpp"

#include <string>

namespace chaincov {

namespace {

void check_index(const Poset& p, std::size_t x) {
  if (x >= p.size()) throw IndexError("element " + std::to_string(x) + " out of range");
}

}  // namespace

Region up_set(const Poset& p, std::span<const std::size_t> seeds) {
  Bitset members(p.size());
  for (auto x : seeds) {
    check_index(p, x);
    members.set(x);
    members |= p.above(x);
  }
  return {RegionKind::up, std::move(members)};
}

Region up_set(const Poset& p, std::size_t x) { return up_set(p, std::span<const std::size_t>(&x, 1)); }

Region down_set(const Poset& p, std::span<const std::size_t> seeds) {
  Bitset members(p.size());
  for (auto x : seeds) {
    check_index(p, x);
    members.set(x);
    members |= p.below(x);
  }
  return {RegionKind::down, std::move(members)};
}

Region down_set(const Poset& p, std::size_t x) { return down_set(p, std::span<const std::size_t>(&x, 1)); }

Region interval(const Poset& p, std::size_t a, std::size_t b) {
  check_index(p, a);
  check_index(p, b);
  if (!p.leq(a, b)) {
    throw PreconditionError("interval [" + std::to_string(a) + ", " + std::to_string(b) +
                            "] requires a <= b");
  }
  Bitset members = p.above(a) & p.below(b);
  members.set(a);
  members.set(b);
  return {RegionKind::interval, std::move(members)};
}

Bitset incomparable_to_all(const Poset& p, const Bitset& seeds) {
  Bitset members = p.all();
  seeds.for_each([&](std::size_t x) {
    members -= p.above(x);
    members -= p.below(x);
    members.reset(x);
  });
  return members;
}

Region inc_set(const Poset& p, std::span<const std::size_t> seeds) {
  Bitset s(p.size());
  for (auto x : seeds) {
    check_index(p, x);
    s.set(x);
  }
  return {RegionKind::inc, incomparable_to_all(p, s)};
}

Region inc_set(const Poset& p, std::size_t x) { return inc_set(p, std::span<const std::size_t>(&x, 1)); }

bool has_closure_property(const Poset& p, const Region& r) {
  if (r.members.size() != p.size()) return false;
  bool ok = true;
  switch (r.kind) {
    case RegionKind::up:
      r.members.for_each([&](std::size_t x) { ok = ok && p.above(x).is_subset_of(r.members); });
      break;
    case RegionKind::down:
      r.members.for_each([&](std::size_t x) { ok = ok && p.below(x).is_subset_of(r.members); });
      break;
    case RegionKind::interval:
      // convex: x, y in r and x < z < y force z in r
      r.members.for_each([&](std::size_t x) {
        r.members.for_each([&](std::size_t y) {
          if (p.lt(x, y)) ok = ok && (p.above(x) & p.below(y)).is_subset_of(r.members);
        });
      });
      break;
    case RegionKind::inc:
      break;
  }
  return ok;
}

}  // namespace chaincov
