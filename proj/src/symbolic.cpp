#include "chaincov/symbolic.hpp"

#include <algorithm>

#include "chaincov/generators.hpp"

namespace chaincov {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Cardinal AlephFamily::join() const {
  if (!count) return Cardinal::aleph(limit);
  return Cardinal::aleph(limit.fundamental(*count - 1).successor());
}

Cardinal cov_symbolic(const PosetTerm& t) {
  return std::visit(
      overloaded{
          [](const PosetTerm::Grid& g) {
            return g.size.is_finite() ? Cardinal::finite(g.size.finite_value() / 2) : g.size;
          },
          [](const PosetTerm::Dual& d) { return cov_symbolic(*d.inner); },
          [](const PosetTerm::LexSum& s) {
            Cardinal acc = Cardinal::finite(0);
            for (const auto& part : s.parts) acc = join(acc, cov_symbolic(part));
            return acc;
          },
          [](const PosetTerm::LexSumFamily& f) { return AlephFamily{f.limit, f.count}.join(); },
          [](const PosetTerm::Chain& c) {
            return Cardinal::finite(c.size.is_finite() && c.size.finite_value() == 0 ? 0 : 1);
          },
          [](const PosetTerm::Antichain& a) { return Cardinal::finite(a.size); },
      },
      t.node());
}

Cardinal cofinality(const Cardinal& c) {
  if (c.is_finite()) throw FiniteCardinalError("cofinality is defined for infinite cardinals only");
  const auto& index = c.aleph_index();
  if (index.is_zero() || index.is_successor()) return c;
  // Ordinal cofinality of a limit index below epsilon_0 is w, whose
  // cardinal is aleph_0.
  const auto cf = index.cofinality();
  if (cf != Ordinal::omega()) throw InternalInconsistency("limit index with cofinality other than w");
  return Cardinal::aleph(Ordinal{});
}

std::vector<PosetTerm> obstruction_list(const Cardinal& v, const std::optional<AlephFamily>& family) {
  if (v.is_finite() || v.aleph_index().is_zero())
    throw DomainError("obstruction lists are defined for uncountable cardinals, got " + v.to_string());
  if (v.is_successor_aleph()) {
    return {PosetTerm::grid(v), PosetTerm::dual(PosetTerm::grid(v))};
  }
  AlephFamily f = family.value_or(AlephFamily{v.aleph_index(), std::nullopt});
  if (!f.limit.is_limit()) throw BadFamily("family index " + f.limit.to_string() + " is not a limit ordinal");
  if (f.join() != v) throw BadFamily("family join " + f.join().to_string() + " differs from " + v.to_string());
  auto up = PosetTerm::lexsum_family(Direction::increasing, f.count, f.limit);
  auto down = PosetTerm::lexsum_family(Direction::decreasing, f.count, f.limit);
  return {up, down, PosetTerm::dual(up), PosetTerm::dual(down)};
}

std::size_t RealizeCaps::size_of(const Cardinal& c) const {
  if (auto it = caps.find(c); it != caps.end()) return it->second;
  if (c.is_finite()) return static_cast<std::size_t>(c.finite_value());
  if (fallback) return *fallback;
  throw CapMissing("no finite size given for " + c.to_string());
}

Poset realize(const PosetTerm& t, const RealizeCaps& caps) {
  return std::visit(
      overloaded{
          [&](const PosetTerm::Grid& g) { return grid_upper(caps.size_of(g.size)).poset; },
          [&](const PosetTerm::Dual& d) { return dual(realize(*d.inner, caps)); },
          [&](const PosetTerm::LexSum& s) {
            std::vector<Poset> parts;
            for (const auto& part : s.parts) parts.push_back(realize(part, caps));
            return lex_sum(parts);
          },
          [&](const PosetTerm::LexSumFamily& f) {
            const auto width = std::min<std::uint64_t>(f.count.value_or(caps.family_width), caps.family_width);
            if (width == 0) throw PreconditionError("family_width must be positive");
            std::vector<Poset> parts;
            for (std::uint64_t n = 0; n < width; ++n) parts.push_back(grid_upper(caps.size_of(f.member(n))).poset);
            if (f.direction == Direction::decreasing) std::reverse(parts.begin(), parts.end());
            return lex_sum(parts);
          },
          [&](const PosetTerm::Chain& c) { return chain(caps.size_of(c.size)); },
          [&](const PosetTerm::Antichain& a) { return antichain(static_cast<std::size_t>(a.size)); },
      },
      t.node());
}

}  // namespace chaincov
