#pragma once

#include <optional>
#include <vector>

namespace pinloop {

using DartId = int;
using CrossingId = int;
using RegionId = int;
using StrandId = int;

// Ambient surface of a multiloop. `closed` is the closed orientable surface
// determined by the crossing map (the sphere in genus 0); `plane` is the
// sphere punctured in a designated outer region.
enum class Ambient { closed, plane };

struct FreeCircle {
  int circle_id = 0;
  RegionId host = 0;

  friend bool operator==(const FreeCircle&, const FreeCircle&) = default;
};

// Unvalidated permutation data, as read from disk.
struct RawMultiloop {
  int crossings = 0;
  std::vector<DartId> arc_involution;
  std::vector<FreeCircle> free_circles;
  Ambient ambient = Ambient::closed;
  // Any dart bounding the outer region; required when ambient == plane and
  // crossings > 0.
  std::optional<DartId> outer_dart;

  friend bool operator==(const RawMultiloop&, const RawMultiloop&) = default;
};

struct TopologyReport {
  int strands = 0;
  int regions = 0;
  int genus = 0;
  int crossing_count = 0;
  int components = 0;
  std::vector<int> component_genus;
};

// A multiloop encoded as a 4-valent map: darts 4c..4c+3 sit around crossing c
// in counterclockwise order, the arc involution pairs the two ends of every
// edge, and strands go straight through each crossing (local index +2).
// Regions are the orbits of face_next = rotate . arc; a region id is the
// smallest dart in its orbit. With no crossings there is a single region, 0.
class Multiloop {
 public:
  static Multiloop validate(const RawMultiloop& raw);

  static constexpr DartId rotate(DartId d) { return (d & ~3) | ((d + 1) & 3); }
  static constexpr DartId rotate_back(DartId d) { return (d & ~3) | ((d + 3) & 3); }
  static constexpr DartId opposite(DartId d) { return (d & ~3) | ((d + 2) & 3); }
  static constexpr CrossingId crossing_of(DartId d) { return d >> 2; }
  static constexpr int local_index(DartId d) { return d & 3; }

  int crossing_count() const { return raw_.crossings; }
  int dart_count() const { return 4 * raw_.crossings; }
  DartId arc(DartId d) const { return raw_.arc_involution[d]; }
  DartId face_next(DartId d) const { return rotate(arc(d)); }
  // Next exit dart when walking straight along a strand.
  DartId straight_next(DartId d) const { return opposite(arc(d)); }

  RegionId region_of(DartId d) const { return region_of_dart_[d]; }
  // Region containing the sector between local darts i and i+1 at crossing c.
  RegionId sector_region(CrossingId c, int i) const {
    return region_of_dart_[4 * c + ((i + 1) & 3)];
  }
  const std::vector<RegionId>& regions() const { return regions_; }
  bool is_region(RegionId r) const;

  StrandId strand_of(DartId d) const { return strand_of_dart_[d]; }
  int crossing_strand_count() const { return crossing_strands_; }
  int strand_count() const {
    return crossing_strands_ + static_cast<int>(raw_.free_circles.size());
  }
  // One directed traversal per crossing strand: the exit darts in order.
  const std::vector<DartId>& strand_walk(StrandId s) const { return strand_walks_[s]; }

  int component_count() const { return static_cast<int>(component_genus_.size()); }
  int component_of(CrossingId c) const { return component_of_crossing_[c]; }
  const std::vector<int>& component_genus() const { return component_genus_; }
  int genus() const;
  bool is_connected() const { return component_count() <= 1; }

  Ambient ambient() const { return raw_.ambient; }
  std::optional<RegionId> outer_region() const { return outer_region_; }
  const std::vector<FreeCircle>& free_circles() const { return raw_.free_circles; }
  const RawMultiloop& raw() const { return raw_; }

 private:
  Multiloop() = default;

  RawMultiloop raw_;
  std::vector<RegionId> region_of_dart_;
  std::vector<RegionId> regions_;
  std::vector<StrandId> strand_of_dart_;
  std::vector<std::vector<DartId>> strand_walks_;
  int crossing_strands_ = 0;
  std::vector<int> component_of_crossing_;
  std::vector<int> component_genus_;
  std::optional<RegionId> outer_region_;
};

bool is_simple(const Multiloop& m);
TopologyReport topology_report(const Multiloop& m);

}  // namespace pinloop
