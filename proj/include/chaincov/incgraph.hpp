#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chaincov/poset.hpp"

namespace chaincov {

/// A poset written as the lexicographic sum of the subposets induced on the
/// connected components of its incomparability graph. `parts` is listed in
/// the order of the index chain, bottom part first; each part is sorted.
struct LexDecomposition {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> parts;
  std::vector<Poset> part_posets;
};

struct DecomposeOptions {
  /// Recheck every cross-part pair before returning.
  bool verify = true;
};

/// Components by breadth-first search on incomparability computed from the
/// relation rows; parts ordered by comparing one representative each.
/// Throws InternalInconsistency if verification finds a cross-part pair in
/// the wrong order.
LexDecomposition inc_components(const Poset& p, DecomposeOptions options = {});

/// Rebuilds the poset on the original indices. Throws MalformedDecomposition
/// when the parts do not partition 0..size-1 or sizes disagree.
Poset recompose(const LexDecomposition& d);

/// Index of the component (in decomposition order) of every element.
std::vector<std::size_t> component_index(const LexDecomposition& d);

struct IncPath {
  std::size_t distance = 0;
  /// x = path.front(), ..., path.back() = y; consecutive entries incomparable.
  std::vector<std::size_t> path;
};

/// Shortest path in the incomparability graph, lexicographically least among
/// the shortest ones. Empty when x and y lie in different components.
/// Throws IndexError on bad indices.
std::optional<IncPath> inc_distance_path(const Poset& p, std::size_t x, std::size_t y);

struct MetricReport {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t distance = 0;
  std::vector<std::size_t> path;
  /// path[i] < path[j] whenever i + 2 <= j
  bool item1_ok = false;
  /// [x, y] covered by the elements incomparable to some inner path vertex
  bool item2_ok = false;
  std::vector<std::string> violations;
};

/// Checks both conclusions of the shortest-path lemma for x < y in one
/// incomparability component. Throws PreconditionError otherwise.
MetricReport check_metric_lemma(const Poset& p, std::size_t x, std::size_t y);

}  // namespace chaincov
