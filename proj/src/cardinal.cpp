#include "chaincov/cardinal.hpp"

#include <stdexcept>

namespace chaincov {

std::uint64_t Cardinal::finite_value() const {
  if (!is_finite()) throw std::domain_error("cardinal is infinite");
  return std::get<std::uint64_t>(value_);
}

const Ordinal& Cardinal::aleph_index() const {
  if (is_finite()) throw std::domain_error("cardinal is finite");
  return std::get<Ordinal>(value_);
}

Cardinal Cardinal::successor() const {
  return is_finite() ? finite(finite_value() + 1) : aleph(aleph_index().successor());
}

std::string Cardinal::to_string() const {
  return is_finite() ? std::to_string(finite_value()) : "aleph(" + aleph_index().to_string() + ")";
}

std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() != b.is_finite()) return a.is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_finite()) return a.finite_value() <=> b.finite_value();
  return a.aleph_index() <=> b.aleph_index();
}

}  // namespace chaincov
