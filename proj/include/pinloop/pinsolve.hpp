#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pinloop/mobidisc.hpp"

namespace pinloop {

using RegionSet = std::vector<RegionId>;  // sorted, no duplicates

// Caps on exponential searches; exceeding one raises ResourceBudgetExceeded.
struct Budget {
  std::size_t max_sets = 1'000'000;
  std::size_t max_nodes = 1'000'000;
};

struct PinningReport {
  int pinning_number = 0;
  std::vector<RegionSet> minimal_sets;
  std::map<int, std::size_t> counts_by_size;
  std::size_t optimal_count = 0;
};

struct OptimalPinning {
  int value = 0;
  RegionSet pins;
};

struct HasseSlice {
  std::vector<RegionSet> nodes;             // by size, then lexicographic
  std::vector<std::pair<int, int>> edges;   // (covered node, covering node)
};

bool verify_pinning(const MobidiscFormula& f, const RegionSet& pins);

// All inclusion-minimal hitting sets, sorted by size then lexicographically.
std::vector<RegionSet> minimal_pinning_sets(const MobidiscFormula& f, const Budget& budget = {});

// Berge multiplication; slow, kept as an independent cross-check.
std::vector<RegionSet> minimal_pinning_sets_berge(const MobidiscFormula& f,
                                                  const Budget& budget = {});

OptimalPinning optimal_pinning(const MobidiscFormula& f, const Budget& budget = {});
int pinning_number(const MobidiscFormula& f, const Budget& budget = {});
bool decide(const MobidiscFormula& f, int k, const Budget& budget = {});

PinningReport pinning_report(const MobidiscFormula& f, const Budget& budget = {});

HasseSlice ideal_hasse_slice(const std::vector<RegionSet>& minimal_sets, int depth,
                             const Budget& budget = {});

}  // namespace pinloop
