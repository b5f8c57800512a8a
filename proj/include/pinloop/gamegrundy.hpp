#pragma once

#include <optional>
#include <vector>

#include "pinloop/pinsolve.hpp"

namespace pinloop {

// Unpinning avoidance game: starting from a pin in every region, players
// alternately remove one pin so that a pinning set remains; a player with
// no legal move loses.
struct GrundyReport {
  int grundy = 0;
  bool first_player_wins = false;
  std::optional<RegionId> optimal_move;  // pin to remove, lowest id first
};

// States reachable in one move from the pinning set `pins`.
std::vector<RegionSet> legal_moves(const MobidiscFormula& f, const RegionSet& pins);

GrundyReport grundy(const MobidiscFormula& f, int max_regions = 20);

}  // namespace pinloop
