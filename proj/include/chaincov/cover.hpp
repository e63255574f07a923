#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chaincov/bitset.hpp"
#include "chaincov/poset.hpp"

namespace chaincov {

/// Partition into chains together with an antichain of the same size, which
/// certifies that no smaller chain partition exists.
struct ChainCover {
  /// Each chain listed bottom to top.
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> certificate;

  std::size_t width() const noexcept { return chains.size(); }
};

/// Minimum chain partition via maximum matching in the split graph
/// (u on the left, v on the right, edge iff u < v): width = n - |matching|.
/// The certificate is the complement of a König vertex cover.
ChainCover min_chain_cover(const Poset& p);
/// Same, restricted to `subset`; chains and certificate use indices of `p`.
ChainCover min_chain_cover(const Poset& p, const Bitset& subset);

std::vector<std::size_t> max_antichain(const Poset& p);

/// Chain covering number.
std::size_t cov(const Poset& p);
/// Chain covering number of the subposet induced on `subset`.
std::size_t cov(const Poset& p, const Bitset& subset);

bool is_chain(const Poset& p, std::span<const std::size_t> elements);
bool is_antichain(const Poset& p, std::span<const std::size_t> elements);
/// Chains pairwise disjoint, each totally ordered, union equal to `universe`.
bool is_chain_partition(const Poset& p, const std::vector<std::vector<std::size_t>>& chains,
                        const Bitset& universe);

struct DilworthReport {
  ChainCover cover;
  std::vector<std::size_t> antichain;
  std::size_t width = 0;
};

/// Recomputes the chain partition and the antichain, checks each witness on
/// its own and checks that their sizes agree. Throws InternalInconsistency
/// on any failure.
DilworthReport verify_dilworth(const Poset& p);

}  // namespace chaincov
