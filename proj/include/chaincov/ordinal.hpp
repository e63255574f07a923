#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace chaincov {

/// Ordinal below epsilon_0 in Cantor normal form:
/// w^e1*c1 + w^e2*c2 + ... with e1 > e2 > ... and every ci >= 1.
/// The empty sum is 0. The representation is canonical, so structural
/// equality is ordinal equality.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;

  static Ordinal finite(std::uint64_t k);
  static Ordinal omega();
  /// w^exponent * coefficient; coefficient 0 gives 0.
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept;
  bool is_successor() const noexcept;
  bool is_limit() const noexcept { return !is_zero() && !is_successor(); }

  /// Throws std::domain_error if infinite.
  std::uint64_t finite_value() const;
  /// Throws std::domain_error unless this is a successor.
  Ordinal predecessor() const;
  Ordinal successor() const;

  /// Standard fundamental sequence of a limit ordinal: for
  /// lambda = beta + w^g, lambda[n] = beta + w^(g-1)*n when g is a successor
  /// and beta + w^(g[n]) when g is a limit. Strictly increasing with
  /// supremum lambda. Throws std::domain_error unless this is a limit.
  Ordinal fundamental(std::uint64_t n) const;

  /// 0, 1 or w: cofinality of an ordinal below epsilon_0.
  Ordinal cofinality() const;

  /// Grammar form: "w^2*3+w+5", "w^(w+1)", "0".
  std::string to_string() const;

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

}  // namespace chaincov
