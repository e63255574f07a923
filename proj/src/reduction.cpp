#include "chaincov/reduction.hpp"

#include "chaincov/cover.hpp"
#include "chaincov/incgraph.hpp"
#include "chaincov/region.hpp"

namespace chaincov {

namespace {

void check_threshold(const Poset& p, std::size_t t) {
  if (t == 0) throw PreconditionError("threshold must be at least 1");
  if (cov(p) < t) throw PreconditionError("cov(P) is below the threshold " + std::to_string(t));
}


}  // namespace

std::string to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::case1: return "case1";
    case ReductionCase::case1_dual: return "case1_dual";
    case ReductionCase::case2: return "case2";
  }
  return "?";
}

Claim1Result claim1_reduce(const Poset& p, std::size_t t) {
  check_threshold(p, t);
  const auto n = p.size();
  Bitset chosen(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (cov(p, p.incomparable_to(x)) >= t) {
      chosen.set(x);
      break;
    }
  }
  if (chosen.any()) {
    bool extended = true;
    while (extended) {
      extended = false;
      const auto room = incomparable_to_all(p, chosen);
      for (auto y = room.find_first(); y < n; y = room.find_next(y + 1)) {
        if (cov(p, room & p.incomparable_to(y)) >= t) {
          chosen.set(y);
          extended = true;
          break;
        }
      }
    }
  }

  const auto keep = chosen.any() ? incomparable_to_all(p, chosen) : p.all();
  auto sub = induced(p, keep);
  Claim1Result r{std::move(sub.poset), std::move(sub.map), chosen.to_vector()};

  if (cov(r.q) < t) throw InternalInconsistency("claim-1 subposet lost the threshold");
  for (std::size_t x = 0; x < r.q.size(); ++x)
    if (cov(r.q, r.q.incomparable_to(x)) >= t)
      throw InternalInconsistency("claim-1 antichain is not maximal");
  return r;
}

ReductionOutcome reduce(const Poset& p, std::size_t t) {
  ReductionOutcome out;
  out.threshold = t;
  auto step1 = claim1_reduce(p, t);
  out.antichain = step1.antichain;
  out.claim1_elements = step1.index_map;
  const auto& q = step1.q;

  const auto decomposition = inc_components(q);
  std::optional<std::size_t> chosen;
  for (std::size_t i = 0; i < decomposition.parts.size(); ++i) {
    std::vector<std::size_t> members;
    for (auto x : decomposition.parts[i]) members.push_back(step1.index_map[x]);
    out.components.push_back(std::move(members));
    out.component_covs.push_back(cov(decomposition.part_posets[i]));
    if (!chosen && out.component_covs.back() >= t) chosen = i;
  }

  if (!chosen) {
    out.kind = ReductionCase::case2;
    out.q = q;
    out.index_map = step1.index_map;
    return out;
  }
  out.component = chosen;

  const auto& c = decomposition.part_posets[*chosen];
  const auto& c_in_q = decomposition.parts[*chosen];
  const auto n = c.size();
  const auto cov_c = out.component_covs[*chosen];

  std::vector<ElementProfile> local(n);
  std::optional<std::size_t> best_up, best_down;
  for (std::size_t x = 0; x < n; ++x) {
    auto& e = local[x];
    e.element = step1.index_map[c_in_q[x]];
    e.cov_down = cov(c, down_set(c, x).members);
    e.cov_up = cov(c, up_set(c, x).members);
    e.cov_inc = cov(c, c.incomparable_to(x));
    if (cov_c > e.cov_down + e.cov_up + e.cov_inc) out.subadditive = false;
    const auto need = t > e.cov_inc ? (t - e.cov_inc + 1) / 2 : 0;
    if (e.cov_up >= need && (!best_up || e.cov_up > local[*best_up].cov_up)) best_up = x;
    if (e.cov_down >= need && (!best_down || e.cov_down > local[*best_down].cov_down)) best_down = x;
  }
  if (!out.subadditive) throw InternalInconsistency("covering subadditivity failed");

  const bool use_dual = best_down && (!best_up || local[*best_down].cov_down > local[*best_up].cov_up);
  out.kind = use_dual ? ReductionCase::case1_dual : ReductionCase::case1;
  const auto x0 = use_dual ? *best_down : *best_up;
  out.x0 = local[x0].element;

  auto cone_of = [&](std::size_t x) { return use_dual ? down_set(c, x).members : up_set(c, x).members; };
  for (std::size_t x = 0; x < n; ++x) local[x].cov_outside = cov(c, c.all() - cone_of(x));
  out.profiles = std::move(local);

  const auto kept = cone_of(x0);
  auto sub = induced(c, kept);
  out.q = std::move(sub.poset);
  for (auto x : sub.map) out.index_map.push_back(step1.index_map[c_in_q[x]]);
  for (std::size_t x = 0; x < out.q.size(); ++x) {
    const auto cone = use_dual ? down_set(out.q, x).members : up_set(out.q, x).members;
    out.reduced_profile.push_back(cov(out.q, out.q.all() - cone));
  }
  return out;
}

Claim2Report cover_bound_report(const Poset& p, std::size_t x0, std::size_t y) {
  if (x0 >= p.size() || y >= p.size()) throw IndexError("element out of range");
  if (!p.lt(x0, y)) throw PreconditionError("cover_bound_report needs x0 < y");
  auto found = inc_distance_path(p, x0, y);
  if (!found) throw PreconditionError("x0 and y lie in different incomparability components");

  Claim2Report r;
  r.x0 = x0;
  r.y = y;
  r.path = std::move(found->path);
  const auto span = interval(p, x0, y).members;
  r.interval = span.to_vector();

  Bitset covered(p.size());
  for (std::size_t i = 1; i + 1 < r.path.size(); ++i) {
    const auto inc = p.incomparable_to(r.path[i]);
    covered |= inc;
    r.inner_inc_covs.push_back(cov(p, inc));
  }
  r.inclusion1_ok = span.is_subset_of(covered);

  const auto inc_y = p.incomparable_to(y);
  const auto outside = up_set(p, x0).members - up_set(p, y).members;
  r.inclusion2_ok = outside.is_subset_of(span | inc_y);

  r.outside_cov = cov(p, outside);
  r.inc_y_cov = cov(p, inc_y);
  std::size_t total = r.inc_y_cov;
  for (auto v : r.inner_inc_covs) total += v;
  r.bound_ok = r.outside_cov <= total;
  return r;
}

}  // namespace chaincov
