#include "chaincov/ordinal.hpp"

#include <algorithm>
#include <stdexcept>

namespace chaincov {

Ordinal Ordinal::finite(std::uint64_t k) {
  Ordinal o;
  if (k) o.terms_.push_back({Ordinal{}, k});
  return o;
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  Ordinal o;
  if (coefficient) o.terms_.push_back({exponent, coefficient});
  return o;
}

bool Ordinal::is_finite() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

bool Ordinal::is_successor() const noexcept { return !terms_.empty() && terms_.back().exponent.is_zero(); }

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw std::domain_error("ordinal is infinite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw std::domain_error("ordinal has no predecessor");
  Ordinal o = *this;
  if (--o.terms_.back().coefficient == 0) o.terms_.pop_back();
  return o;
}

Ordinal Ordinal::successor() const { return *this + finite(1); }

Ordinal Ordinal::fundamental(std::uint64_t n) const {
  if (!is_limit()) throw std::domain_error("fundamental sequences exist only for limit ordinals");
  Ordinal beta = *this;
  const Ordinal g = beta.terms_.back().exponent;
  if (--beta.terms_.back().coefficient == 0) beta.terms_.pop_back();
  if (g.is_successor()) return beta + omega_power(g.predecessor(), n);
  return beta + omega_power(g.fundamental(n));
}

Ordinal Ordinal::cofinality() const {
  if (is_zero()) return {};
  if (is_successor()) return finite(1);
  const auto& g = terms_.back().exponent;
  return g.is_successor() ? omega() : g.cofinality();
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != finite(1)) {
      const auto& e = t.exponent;
      // bare exponents: naturals and single terms with coefficient 1
      const bool bare = e.is_finite() || (e.terms_.size() == 1 && e.terms_[0].coefficient == 1);
      out += '^';
      out += bare ? e.to_string() : "(" + e.to_string() + ")";
    }
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms_.front();
  Ordinal out;
  for (const auto& t : a.terms_) {
    if (t.exponent > lead.exponent) {
      out.terms_.push_back(t);
    } else {
      if (t.exponent == lead.exponent) {
        out.terms_.push_back({lead.exponent, t.coefficient + lead.coefficient});
        out.terms_.insert(out.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
        return out;
      }
      break;
    }
  }
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return (a <=> b) == 0; }

}  // namespace chaincov
