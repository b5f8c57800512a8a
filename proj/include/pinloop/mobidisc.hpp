#pragma once

#include <vector>

#include "pinloop/multiloop.hpp"

namespace pinloop {

// An embedded bigon between two distinct strands together with the side of
// its boundary curve that is a disc.
struct BigonWitness {
  StrandId strand_i = 0;
  StrandId strand_j = 0;
  CrossingId x = 0;
  CrossingId y = 0;
  // Exit darts walking from x to y along strand i (resp. j).
  std::vector<DartId> arc_i;
  std::vector<DartId> arc_j;
  std::vector<RegionId> disc_faces;  // sorted
  // Region of the disc in the corner at each marked crossing, or -1 when
  // the disc wraps three sectors there.
  RegionId corner_x = -1;
  RegionId corner_y = -1;
};

// Positive CNF over region variables: every clause must contain a pin.
struct MobidiscFormula {
  std::vector<RegionId> variables;              // sorted
  std::vector<std::vector<RegionId>> clauses;   // each sorted

  friend bool operator==(const MobidiscFormula&, const MobidiscFormula&) = default;
};

std::vector<BigonWitness> enumerate_embedded_bigons(const Multiloop& m);

// Region universe of the pinning problem: every region except the outer one
// when the ambient surface is the plane.
std::vector<RegionId> pinnable_regions(const Multiloop& m);

MobidiscFormula mobidisc_formula(const Multiloop& m);

// Keeps only inclusion-minimal clauses (duplicates collapse), sorted by
// size then lexicographically.
MobidiscFormula prune(const MobidiscFormula& f);

bool is_antichain(const std::vector<std::vector<RegionId>>& sets);

}  // namespace pinloop
