#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "chaincov/poset.hpp"

namespace chaincov {

/// Injective map from `source` into `target` that is an order isomorphism
/// onto its image: x < y in source iff map[x] < map[y] in target.
struct Embedding {
  Poset source;
  Poset target;
  std::vector<std::size_t> map;
};

/// Rechecks injectivity, range and the order biconditional on every pair.
bool validate_embedding(const Embedding& e);

enum class SearchStatus { found, not_found, unknown };

struct EmbedOptions {
  /// Search-node limit; when it runs out the status is `unknown`.
  std::optional<std::uint64_t> budget;
};

struct EmbedResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

/// Does `target` contain an induced copy of `source`?
///
/// Complete backtracking over the elements of `source` in a fixed linear
/// extension, lowest target index first, so the embedding returned is the
/// lexicographically least one in that order. Candidates are filtered by
/// up-set size, down-set size and incomparability degree; sizes, heights
/// and widths are compared up front.
EmbedResult embeds(const Poset& target, const Poset& source, EmbedOptions options = {});

/// embeds() with source grid_upper(k) or its dual. Requires k >= 2.
EmbedResult embeds_grid(const Poset& target, std::size_t k, bool want_dual, EmbedOptions options = {});

}  // namespace chaincov
