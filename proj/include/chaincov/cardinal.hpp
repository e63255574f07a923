#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "chaincov/ordinal.hpp"

namespace chaincov {

/// A natural number or aleph_i for an ordinal index i below epsilon_0.
class Cardinal {
 public:
  Cardinal() = default;

  static Cardinal finite(std::uint64_t k) { return Cardinal(k); }
  static Cardinal aleph(Ordinal index) { return Cardinal(std::move(index)); }

  bool is_finite() const noexcept { return std::holds_alternative<std::uint64_t>(value_); }
  bool is_infinite() const noexcept { return !is_finite(); }
  /// aleph with a successor index.
  bool is_successor_aleph() const noexcept { return is_infinite() && aleph_index().is_successor(); }
  /// aleph with a limit index (aleph_0 excluded).
  bool is_limit_aleph() const noexcept { return is_infinite() && aleph_index().is_limit(); }

  /// Throws std::domain_error when infinite.
  std::uint64_t finite_value() const;
  /// Throws std::domain_error when finite.
  const Ordinal& aleph_index() const;

  /// k + 1, or aleph_{i+1}.
  Cardinal successor() const;

  /// "6" or "aleph(w+1)".
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b);
  friend bool operator==(const Cardinal& a, const Cardinal& b) { return (a <=> b) == 0; }

 private:
  explicit Cardinal(std::uint64_t k) : value_(k) {}
  explicit Cardinal(Ordinal index) : value_(std::move(index)) {}

  std::variant<std::uint64_t, Ordinal> value_{std::uint64_t{0}};
};

/// Least upper bound of two cardinals.
inline Cardinal join(const Cardinal& a, const Cardinal& b) { return a < b ? b : a; }

}  // namespace chaincov
