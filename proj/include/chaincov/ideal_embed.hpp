#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaincov/bitset.hpp"
#include "chaincov/patterns.hpp"
#include "chaincov/poset.hpp"

namespace chaincov {

/// Increasing sequence of ideals J_0 ⊊ J_1 ⊊ ... of a poset.
struct IdealChain {
  Poset poset;
  std::vector<Bitset> ideals;

  /// J_a minus the union of the earlier ideals.
  std::vector<Bitset> layers() const;
};

enum class IdealViolationKind {
  wrong_universe,
  not_downward_closed,
  not_directed,
  not_nested,
  empty_layer,
  no_cofinal_chain,
};

std::string to_string(IdealViolationKind kind);

struct IdealViolation {
  IdealViolationKind kind;
  std::size_t ideal;
  /// Offending elements: (x, y) with y in J, x < y, x not in J; a pair with
  /// no upper bound in J; an element of J_a missing from J_{a+1}.
  std::vector<std::size_t> witness;
};

struct IdealChainReport {
  std::vector<IdealViolation> violations;
  /// Per layer: does it contain a chain with at least (m - a) elements?
  std::vector<bool> layer_supply;

  bool ok() const noexcept { return violations.empty(); }
  bool supply_ok() const noexcept {
    for (bool b : layer_supply)
      if (!b) return false;
    return true;
  }
};

IdealChainReport validate_ideal_chain(const IdealChain& c);

class InvalidChain : public Error {
 public:
  using Error::Error;
};

enum class IdealEmbedStatus { found, failed, budget_exhausted };

struct IdealEmbedOptions {
  std::uint64_t budget = 1'000'000;
};

struct IdealEmbedResult {
  IdealEmbedStatus status = IdealEmbedStatus::failed;
  /// map[grid_index(m, a, b)] = image of (a, b); filled when found.
  std::optional<Embedding> embedding;
  /// On failure: the farthest position, in construction order, whose
  /// candidate set ran out, and the elements its image had to lie above
  /// and must not lie below.
  std::size_t blocked_alpha = 0;
  std::size_t blocked_beta = 0;
  std::vector<std::size_t> required_above;
  std::vector<std::size_t> required_not_below;
  std::uint64_t nodes = 0;
};

/// Builds an embedding f of grid_upper(m), m = number of ideals, with
/// f(a, b) in layer a. Positions are filled in the order (a', b') before
/// (a, b) iff b' < b, or b' = b and a' < a. The image of (a, b) must lie
/// strictly above the images of every placed (a', b') <= (a, b), and must
/// not lie below the image of any placed pair incomparable to (a, b).
/// Candidates are tried in a fixed linear extension of the poset with
/// chronological backtracking under the node budget.
/// Throws InvalidChain if validation fails or m < 2.
IdealEmbedResult embed_from_ideal_chain(const IdealChain& c, IdealEmbedOptions options = {});

/// f(a, b) lies in layer a for every pair.
bool satisfies_layer_condition(const IdealChain& c, const Embedding& e);

}  // namespace chaincov
