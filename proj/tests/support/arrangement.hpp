#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pinloop/multiloop.hpp"

namespace pinloop::testing {

using Point = std::pair<double, double>;
using Polygon = std::vector<Point>;

// A plane multiloop traced from closed polygons, one strand per polygon.
struct Arrangement {
  RawMultiloop raw;
  // Closed boundary path of each face-walk orbit, keyed by its smallest dart.
  std::vector<std::pair<RegionId, Polygon>> face_paths;

  // Region containing p; the outer region when no bounded face does.
  RegionId locate(const Point& p) const;
};

// nullopt when two segments meet in a degenerate way (touching, overlapping
// or crossing at a polygon vertex).
std::optional<Arrangement> arrange(const std::vector<Polygon>& polygons);

Polygon rectangle(double x0, double x1, double y0, double y1);
Polygon random_star(std::mt19937_64& rng, double cx, double cy, double radius, int corners);

}  // namespace pinloop::testing
