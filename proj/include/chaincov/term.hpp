#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chaincov/cardinal.hpp"
#include "chaincov/errors.hpp"
#include "chaincov/ordinal.hpp"

namespace chaincov {

enum class Direction { increasing, decreasing };

/// Symbolic poset expression.
///
/// Text grammar (no whitespace required; spaces between tokens ignored):
///
///     term     := "grid(" card ")" | "dual(" term ")"
///               | "lexsum([" term ("," term)* "])"
///               | "lexsumfam(" dir "," count "," famspec ")"
///               | "chain(" card ")" | "antichain(" nat ")"
///     card     := "aleph(" ord ")" | nat
///     ord      := cnfterm ("+" cnfterm)*
///     cnfterm  := "w^" exponent ["*" nat] | "w" ["*" nat] | nat
///     exponent := nat | "w" | "w^" exponent | "(" ord ")"
///     dir      := "inc" | "dec"
///     count    := nat | "w"
///     famspec  := "aleph(succ_n)" | "aleph(succ(" ord "[n]))"
///
/// `lexsumfam(dir, count, F)` is the lexicographic sum of grid(F_n) over
/// n < count, stacked in increasing (inc) or decreasing (dec) order of n.
/// `aleph(succ_n)` is the family F_n = aleph_{n+1}; `aleph(succ(L[n]))` is
/// F_n = aleph_{L[n]+1} for a limit ordinal L and its fundamental sequence,
/// so `aleph(succ_n)` and `aleph(succ(w[n]))` denote the same family.
class PosetTerm {
 public:
  struct Grid {
    Cardinal size;
  };
  struct Dual {
    std::shared_ptr<const PosetTerm> inner;
  };
  struct LexSum {
    std::vector<PosetTerm> parts;
  };
  struct LexSumFamily {
    Direction direction = Direction::increasing;
    /// Number of parts; empty for w.
    std::optional<std::uint64_t> count;
    /// Limit ordinal L of the family aleph_{L[n]+1}.
    Ordinal limit;

    Cardinal member(std::uint64_t n) const { return Cardinal::aleph(limit.fundamental(n).successor()); }
  };
  struct Chain {
    Cardinal size;
  };
  struct Antichain {
    std::uint64_t size = 0;
  };
  using Node = std::variant<Grid, Dual, LexSum, LexSumFamily, Chain, Antichain>;

  static PosetTerm grid(Cardinal size);
  static PosetTerm dual(PosetTerm inner);
  static PosetTerm lexsum(std::vector<PosetTerm> parts);
  static PosetTerm lexsum_family(Direction direction, std::optional<std::uint64_t> count, Ordinal limit);
  static PosetTerm chain(Cardinal size);
  static PosetTerm antichain(std::uint64_t size);

  const Node& node() const noexcept { return node_; }

  /// Canonical text; parse_term(t.to_string()) == t.
  std::string to_string() const;

  friend bool operator==(const PosetTerm& a, const PosetTerm& b) { return a.to_string() == b.to_string(); }

 private:
  explicit PosetTerm(Node node) : node_(std::move(node)) {}
  Node node_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);
  /// 0-based offset into the input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

PosetTerm parse_term(std::string_view text);
Cardinal parse_cardinal(std::string_view text);
Ordinal parse_ordinal(std::string_view text);

}  // namespace chaincov
