#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chaincov/poset.hpp"

namespace chaincov {

/// Subposet on the elements incomparable to an inclusion-maximal antichain L
/// whose incomparability set still needs at least t chains.
struct Claim1Result {
  Poset q;
  /// Element i of q is element index_map[i] of the input.
  std::vector<std::size_t> index_map;
  /// L, in input indices; empty when no single element qualifies.
  std::vector<std::size_t> antichain;
};

/// Greedy search for L: the lowest-index x with cov(Inc_x) >= t, then the
/// lowest-index element that keeps cov(Inc_L) >= t, until none does.
/// Guarantees cov(q) >= t and cov(Inc_x(q)) < t for every x in q; both are
/// rechecked before returning (InternalInconsistency otherwise).
/// Throws PreconditionError if t == 0 or cov(p) < t.
Claim1Result claim1_reduce(const Poset& p, std::size_t t);

enum class ReductionCase {
  /// the kept subposet is an up-set of some x0
  case1,
  /// same for the dual: a down-set of some x0
  case1_dual,
  /// every incomparability component of the Claim-1 subposet needs < t chains
  case2,
};

std::string to_string(ReductionCase c);

/// Chain covering numbers around one element x of the chosen component C.
struct ElementProfile {
  std::size_t element;
  std::size_t cov_down;
  std::size_t cov_up;
  std::size_t cov_inc;
  /// cov(C \ up(x)) in case1, cov(C \ down(x)) in case1_dual
  std::size_t cov_outside;
};

struct ReductionOutcome {
  ReductionCase kind = ReductionCase::case2;
  std::size_t threshold = 0;
  /// Claim-1 step, input indices.
  std::vector<std::size_t> antichain;
  std::vector<std::size_t> claim1_elements;
  /// Incomparability components of the Claim-1 subposet and their widths.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_covs;
  /// Component with cov >= threshold that was used (case1 / case1_dual).
  std::optional<std::size_t> component;
  std::vector<ElementProfile> profiles;
  /// cov(C) <= cov(down x) + cov(up x) + cov(Inc_x) held for every x in C.
  bool subadditive = true;
  std::optional<std::size_t> x0;
  /// Kept subposet: up(x0) / down(x0) inside C, or the Claim-1 subposet in
  /// case2.
  Poset q;
  std::vector<std::size_t> index_map;
  /// cov(q \ up(x)) (dual: \ down(x)) per element of q, in q order.
  std::vector<std::size_t> reduced_profile;
};

/// Claim-1 step, then the component split. When some component C needs at
/// least t chains, x0 ranges over the x in C with
/// max(cov(up x), cov(down x)) >= ceil((t - cov(Inc_x)) / 2), which every x
/// satisfies; the x0 maximising cov(up x0) (or cov(down x0), when strictly
/// larger, giving case1_dual) is kept, lowest index first.
/// Throws PreconditionError if t == 0 or cov(p) < t.
ReductionOutcome reduce(const Poset& p, std::size_t t);

/// Set inclusions and the additive chain bound for the up-set of x0 when
/// x0 < y are joined by a shortest incomparability path x0, x1, ..., y.
struct Claim2Report {
  std::size_t x0 = 0;
  std::size_t y = 0;
  std::vector<std::size_t> path;
  std::vector<std::size_t> interval;
  /// [x0, y] is covered by Inc_{x_i} over the inner path vertices.
  bool inclusion1_ok = false;
  /// up(x0) \ up(y) lies inside [x0, y] ∪ Inc_y.
  bool inclusion2_ok = false;
  std::size_t outside_cov = 0;
  /// cov(Inc_{x_i}) for the inner path vertices, then cov(Inc_y).
  std::vector<std::size_t> inner_inc_covs;
  std::size_t inc_y_cov = 0;
  bool bound_ok = false;
};

/// Throws PreconditionError unless x0 < y in one incomparability component.
Claim2Report cover_bound_report(const Poset& p, std::size_t x0, std::size_t y);

}  // namespace chaincov
