#pragma once

#include <string>
#include <vector>

namespace trilie {
namespace suite {

/// One end-to-end check of the built-in example battery.
struct SuiteItem {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail; // first failure, or a short summary of what ran
};

/// Runs the full battery of built-in reproductions: catalog identity checks,
/// cohomology squares, the closed-form comultiplications, the 4-dimensional
/// worked example, rigidity solves, the dual-structure equivalences, the
/// operator-to-solution round trips, the induced product chain, the map-form
/// identities, and invariance of the standard pairing. Deterministic: all
/// sampling is internally seeded.
std::vector<SuiteItem> run_reference_suite();

} // namespace suite
} // namespace trilie
