#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "chaincov/cardinal.hpp"
#include "chaincov/errors.hpp"
#include "chaincov/poset.hpp"
#include "chaincov/term.hpp"

namespace chaincov {

class FiniteCardinalError : public Error {
 public:
  using Error::Error;
};
class DomainError : public Error {
 public:
  using Error::Error;
};
class BadFamily : public Error {
 public:
  using Error::Error;
};
class CapMissing : public Error {
 public:
  using Error::Error;
};

/// Chain covering number of a term:
///   grid(v) = v for infinite v, floor(k/2) for finite k;
///   dual(T) = T;  lexsum = join of the parts;  lexsumfam = join of its
///   family;  chain(v) = 1 (0 for the empty chain);  antichain(k) = k.
Cardinal cov_symbolic(const PosetTerm& t);

/// cf(aleph_0) = aleph_0, cf(aleph_{b+1}) = aleph_{b+1}, and for a limit
/// index L, cf(aleph_L) is the cardinal of the ordinal cofinality of L,
/// which is aleph_0 for every index below epsilon_0.
/// Throws FiniteCardinalError for finite input.
Cardinal cofinality(const Cardinal& c);

/// A strictly increasing w-sequence of successor cardinals
/// aleph_{limit[n]+1}, n < count (count empty for w).
struct AlephFamily {
  Ordinal limit;
  std::optional<std::uint64_t> count;

  Cardinal join() const;
};

/// Posets that some induced subposet must copy when cov >= v.
/// Successor v: grid(v) and its dual. Limit v: the increasing and the
/// decreasing w-sum of grids over the family and their duals, with the
/// family aleph_{L[n]+1} synthesised from v = aleph_L when omitted.
/// Throws DomainError for v <= aleph_0 and BadFamily when the family's join
/// is not v.
std::vector<PosetTerm> obstruction_list(const Cardinal& v, const std::optional<AlephFamily>& family = std::nullopt);

/// Finite sizes substituted for cardinals by realize(). Finite cardinals
/// default to their own value; infinite ones use `caps`, then `fallback`.
struct RealizeCaps {
  std::map<Cardinal, std::size_t> caps;
  std::optional<std::size_t> fallback;
  /// Parts taken from a family constructor.
  std::size_t family_width = 4;

  /// Throws CapMissing when an infinite cardinal has no size.
  std::size_t size_of(const Cardinal& c) const;
};

/// Finite instance of a term: grid(v) -> grid_upper(size_of(v)),
/// chain/antichain by size, dual and lexsum homomorphically, a family
/// truncated to its first family_width parts.
Poset realize(const PosetTerm& t, const RealizeCaps& caps = {});

}  // namespace chaincov
