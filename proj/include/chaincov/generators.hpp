#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chaincov/ideal_embed.hpp"
#include "chaincov/poset.hpp"

namespace chaincov {

/// Coordinates (alpha, beta), alpha < beta, of an element of the upper grid.
struct GridLabel {
  std::size_t alpha;
  std::size_t beta;

  friend bool operator==(const GridLabel&, const GridLabel&) = default;
};

/// The pairs alpha < beta < n ordered coordinatewise. Elements are numbered
/// in lexicographic order of (alpha, beta).
struct GridPoset {
  std::size_t n = 0;
  Poset poset;
  std::vector<GridLabel> labels;

  std::size_t index_of(std::size_t alpha, std::size_t beta) const;
  /// "(alpha,beta)" for each element.
  std::vector<std::string> label_strings() const;
};

/// Index of (alpha, beta) in grid_upper(n) numbering.
std::size_t grid_index(std::size_t n, std::size_t alpha, std::size_t beta);

/// Throws SizeError for n < 2.
GridPoset grid_upper(std::size_t n);

Poset chain(std::size_t n);
Poset antichain(std::size_t n);

/// Parts stacked bottom to top: every element of an earlier part lies below
/// every element of a later part. Elements are numbered part by part.
/// Throws PreconditionError when `parts` is empty.
Poset lex_sum(std::span<const Poset> parts);

/// Each pair i < j is related (i below j) independently with probability p,
/// then the relation is closed. Acyclic by construction; reproducible from
/// (n, p, seed) through Xorshift64Star: pairs are drawn in order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... with one uniform() draw each.
Poset random_poset(std::size_t n, double p, std::uint64_t seed);

/// grid_upper(n) with the ideals J_a = {(x, y) : x <= a} for a < m.
/// Throws SizeError unless 1 <= m < n.
struct CanonicalIdealChain {
  GridPoset grid;
  IdealChain chain;
};
CanonicalIdealChain canonical_ideal_chain(std::size_t n, std::size_t m);

}  // namespace chaincov
