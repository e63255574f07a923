#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "chaincov/bitset.hpp"
#include "chaincov/poset.hpp"

namespace chaincov {

/// A poset plus optional display labels (empty vector when absent).
struct LabeledPoset {
  Poset poset;
  std::vector<std::string> labels;
};

/// Reads the poset text format:
///
///     n <count>
///     <u> <v>        # asserts u < v
///
/// `#` starts a comment. A comment of the form `# label <i> <text>` attaches
/// a display label to element i. The relation is transitively closed on load.
/// Throws FormatError on malformed input and CycleError/IndexError from
/// Poset::from_relations.
LabeledPoset read_poset(std::istream& in);
LabeledPoset read_poset_file(const std::string& path);

/// Writes the header, one label comment per labelled element, then the cover
/// pairs in increasing order.
void write_poset(std::ostream& out, const Poset& p, const std::vector<std::string>& labels = {});

/// Reads one ideal per line as space-separated indices into sets over `n`
/// elements. Blank lines and `#` comments are skipped.
std::vector<Bitset> read_ideals(std::istream& in, std::size_t n);

struct DotOptions {
  bool incomparability_edges = false;
};

/// Hasse diagram in Graphviz DOT, labels used when present. Incomparable
/// pairs become dashed undirected edges when requested.
void write_dot(std::ostream& out, const Poset& p, const std::vector<std::string>& labels = {},
               DotOptions options = {});

}  // namespace chaincov
