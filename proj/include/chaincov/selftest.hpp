#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace chaincov {

struct SelftestOptions {
  std::size_t instances = 60;
  std::size_t elements = 24;
  std::uint64_t seed = 1;
};

struct SelftestCheck {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;

  bool ok() const noexcept {
    for (const auto& c : checks)
      if (c.failed) return false;
    return true;
  }
};

/// Runs the cross-module invariants on seeded random posets (edge
/// probabilities cycling through 0.05, 0.1, 0.3) and random finite terms.
SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace chaincov
