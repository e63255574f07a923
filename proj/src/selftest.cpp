#include "chaincov/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "chaincov/cover.hpp"
#include "chaincov/generators.hpp"
#include "chaincov/incgraph.hpp"
#include "chaincov/patterns.hpp"
#include "chaincov/poset_io.hpp"
#include "chaincov/random.hpp"
#include "chaincov/reduction.hpp"
#include "chaincov/region.hpp"
#include "chaincov/symbolic.hpp"

namespace chaincov {

namespace {

class Tally {
 public:
  void record(const std::string& name, const std::function<bool()>& check) {
    auto& c = entry(name);
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception&) {
      ok = false;
    }
    ok ? ++c.passed : ++c.failed;
  }

  SelftestReport report() const { return {checks_}; }

 private:
  SelftestCheck& entry(const std::string& name) {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const auto& c) { return c.name == name; });
    if (it != checks_.end()) return *it;
    return checks_.emplace_back(SelftestCheck{name});
  }

  std::vector<SelftestCheck> checks_;
};

bool order_axioms(const Poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.lt(x, x)) return false;
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.lt(x, y) && p.lt(y, x)) return false;
      if (p.lt(x, y) && !p.above(y).is_subset_of(p.above(x))) return false;
    }
  }
  return true;
}

PosetTerm random_finite_term(Xorshift64Star& rng, int depth) {
  const auto pick = depth <= 0 ? rng.below(3) : rng.below(5);
  switch (pick) {
    case 0: return PosetTerm::grid(Cardinal::finite(2 + rng.below(6)));
    case 1: return PosetTerm::chain(Cardinal::finite(1 + rng.below(4)));
    case 2: return PosetTerm::antichain(1 + rng.below(4));
    case 3: return PosetTerm::dual(random_finite_term(rng, depth - 1));
    default: {
      std::vector<PosetTerm> parts;
      const auto k = 1 + rng.below(3);
      for (std::uint64_t i = 0; i < k; ++i) parts.push_back(random_finite_term(rng, depth - 1));
      return PosetTerm::lexsum(std::move(parts));
    }
  }
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  static constexpr double probabilities[] = {0.05, 0.1, 0.3};
  Tally tally;
  Xorshift64Star rng(options.seed);

  for (std::size_t i = 0; i < options.instances; ++i) {
    const auto p = random_poset(options.elements, probabilities[i % 3], options.seed * 1000003 + i);
    const auto n = p.size();

    tally.record("order axioms", [&] { return order_axioms(p); });
    tally.record("dual involution", [&] { return dual(dual(p)) == p; });
    tally.record("text format round trip", [&] {
      std::stringstream s;
      write_poset(s, p);
      return read_poset(s).poset == p;
    });
    tally.record("region identity", [&] {
      for (std::size_t x = 0; x < n; ++x) {
        const auto up = up_set(p, x).members;
        const auto down = down_set(p, x).members;
        Bitset only_x(n);
        only_x.set(x);
        if ((up & down) != only_x) return false;
        if ((up | down | inc_set(p, x).members) != p.all()) return false;
      }
      return true;
    });
    tally.record("purity iff greatest element", [&] { return is_pure(p) == has_greatest_element(p); });
    tally.record("dilworth equality", [&] { return verify_dilworth(p).width == max_antichain(p).size(); });
    const auto width = cov(p);
    tally.record("cov self-dual", [&] { return cov(dual(p)) == width; });
    tally.record("lex round trip", [&] { return recompose(inc_components(p)) == p; });
    tally.record("cov is max over components", [&] {
      std::size_t best = 0;
      for (const auto& part : inc_components(p).part_posets) best = std::max(best, cov(part));
      return best == width;
    });
    tally.record("covering subadditivity", [&] {
      for (std::size_t x = 0; x < n; ++x) {
        if (width > cov(p, down_set(p, x).members) + cov(p, up_set(p, x).members) + cov(p, inc_set(p, x).members))
          return false;
      }
      return true;
    });
    tally.record("metric lemma", [&] {
      const auto index = component_index(inc_components(p));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (p.lt(x, y) && index[x] == index[y]) {
            const auto r = check_metric_lemma(p, x, y);
            if (!r.item1_ok || !r.item2_ok) return false;
          }
      return true;
    });
    tally.record("claim-2 inclusions", [&] {
      const auto index = component_index(inc_components(p));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (p.lt(x, y) && index[x] == index[y]) {
            const auto r = cover_bound_report(p, x, y);
            if (!r.inclusion1_ok || !r.inclusion2_ok || !r.bound_ok) return false;
          }
      return true;
    });
    tally.record("claim-1 postconditions", [&] {
      if (width == 0) return true;
      const auto r = claim1_reduce(p, width);
      if (cov(r.q) < width) return false;
      for (std::size_t x = 0; x < r.q.size(); ++x)
        if (cov(r.q, r.q.incomparable_to(x)) >= width) return false;
      return true;
    });
    tally.record("embedding soundness", [&] {
      std::vector<std::size_t> pick;
      for (std::size_t x = 0; x < n; ++x)
        if (rng.below(4) == 0 && pick.size() < 6) pick.push_back(x);
      const auto q = induced(p, std::span<const std::size_t>(pick)).poset;
      const auto r = embeds(p, q);
      return r.status == SearchStatus::found && validate_embedding(*r.embedding);
    });
    tally.record("symbolic finite consistency", [&] {
      const auto t = random_finite_term(rng, 3);
      return cov_symbolic(t) == Cardinal::finite(cov(realize(t)));
    });
  }
  return tally.report();
}

}  // namespace chaincov
