#include "support/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace pinloop::testing {

namespace {

constexpr double kEps = 1e-9;

double cross(const Point& a, const Point& b) { return a.first * b.second - a.second * b.first; }
Point sub(const Point& a, const Point& b) { return {a.first - b.first, a.second - b.second}; }

double signed_area(const Polygon& path) {
  double area = 0.0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    area += cross(path[i], path[(i + 1) % path.size()]);
  }
  return area / 2.0;
}

int winding(const Polygon& path, const Point& p) {
  int w = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Point& a = path[i];
    const Point& b = path[(i + 1) % path.size()];
    const double side = cross(sub(b, a), sub(p, a));
    if (a.second <= p.second) {
      if (b.second > p.second && side > 0) ++w;
    } else if (b.second <= p.second && side < 0) {
      --w;
    }
  }
  return w;
}

struct Occurrence {
  int segment;
  double param;
  int crossing;
  DartId forward;  // dart leaving the crossing along the polygon's direction
};

}  // namespace

RegionId Arrangement::locate(const Point& p) const {
  std::optional<RegionId> outer;
  for (const auto& [region, path] : face_paths) {
    if (signed_area(path) > 0) {
      if (!outer) outer = region;
      continue;
    }
    if (winding(path, p) == -1) return region;
  }
  return outer.value_or(0);
}

std::optional<Arrangement> arrange(const std::vector<Polygon>& polygons) {
  const int count = static_cast<int>(polygons.size());
  std::vector<std::vector<Occurrence>> occ(count);
  std::vector<Point> crossing_point;

  for (int a = 0; a < count; ++a) {
    const int na = static_cast<int>(polygons[a].size());
    for (int s = 0; s < na; ++s) {
      const Point& p1 = polygons[a][s];
      const Point r = sub(polygons[a][(s + 1) % na], p1);
      for (int b = a; b < count; ++b) {
        const int nb = static_cast<int>(polygons[b].size());
        for (int t = (b == a ? s + 1 : 0); t < nb; ++t) {
          if (b == a && (t == s + 1 || (s == 0 && t == na - 1))) continue;
          const Point& p3 = polygons[b][t];
          const Point q = sub(polygons[b][(t + 1) % nb], p3);
          const double denom = cross(r, q);
          const Point d = sub(p3, p1);
          if (std::fabs(denom) < kEps) {
            if (std::fabs(cross(d, r)) < kEps) {
              // Collinear: only a shared stretch is degenerate.
              const double rr = r.first * r.first + r.second * r.second;
              const double t0 = (d.first * r.first + d.second * r.second) / rr;
              const double t1 = t0 + (q.first * r.first + q.second * r.second) / rr;
              if (std::max(t0, t1) > -kEps && std::min(t0, t1) < 1 + kEps) return std::nullopt;
            }
            continue;
          }
          const double tp = cross(d, q) / denom;
          const double up = cross(d, r) / denom;
          const bool in_t = tp > kEps && tp < 1 - kEps;
          const bool in_u = up > kEps && up < 1 - kEps;
          const bool near_t = tp > -kEps && tp < 1 + kEps;
          const bool near_u = up > -kEps && up < 1 + kEps;
          if (in_t && in_u) {
            const int c = static_cast<int>(crossing_point.size());
            crossing_point.emplace_back(p1.first + tp * r.first, p1.second + tp * r.second);
            // Counterclockwise: a+, then b+ or b- depending on orientation.
            const DartId b_forward = denom > 0 ? 4 * c + 1 : 4 * c + 3;
            occ[a].push_back({s, tp, c, 4 * c});
            occ[b].push_back({t, up, c, b_forward});
          } else if (near_t && near_u) {
            return std::nullopt;
          }
        }
      }
    }
  }

  Arrangement out;
  RawMultiloop& raw = out.raw;
  const int crossings = static_cast<int>(crossing_point.size());
  raw.crossings = crossings;
  raw.arc_involution.assign(4 * crossings, -1);
  raw.ambient = Ambient::plane;
  std::vector<Polygon> dart_path(4 * crossings);

  for (int a = 0; a < count; ++a) {
    auto& list = occ[a];
    std::sort(list.begin(), list.end(), [](const Occurrence& x, const Occurrence& y) {
      return std::tie(x.segment, x.param) < std::tie(y.segment, y.param);
    });
    const int n = static_cast<int>(polygons[a].size());
    const int k = static_cast<int>(list.size());
    for (int i = 0; i < k; ++i) {
      const Occurrence& from = list[i];
      const Occurrence& to = list[(i + 1) % k];
      const DartId exit = from.forward;
      const DartId entry = Multiloop::opposite(to.forward);
      raw.arc_involution[exit] = entry;
      raw.arc_involution[entry] = exit;
      Polygon path{crossing_point[from.crossing]};
      const bool wraps = i + 1 == k;
      if (!wraps) {
        for (int v = from.segment + 1; v <= to.segment; ++v) path.push_back(polygons[a][v]);
      } else {
        for (int v = from.segment + 1; v < n; ++v) path.push_back(polygons[a][v]);
        for (int v = 0; v <= to.segment; ++v) path.push_back(polygons[a][v]);
      }
      path.push_back(crossing_point[to.crossing]);
      dart_path[exit] = path;
      std::reverse(path.begin(), path.end());
      dart_path[entry] = path;
    }
  }

  std::vector<char> seen(4 * crossings, 0);
  std::optional<DartId> outer;
  double outer_area = 0.0;
  for (DartId d = 0; d < 4 * crossings; ++d) {
    if (seen[d]) continue;
    Polygon walk;
    DartId e = d;
    do {
      seen[e] = 1;
      walk.insert(walk.end(), dart_path[e].begin(), dart_path[e].end() - 1);
      e = Multiloop::rotate(raw.arc_involution[e]);
    } while (e != d);
    const double area = signed_area(walk);
    if (area > outer_area) {
      outer_area = area;
      outer = d;
    }
    out.face_paths.emplace_back(d, std::move(walk));
  }
  if (crossings > 0) {
    if (!outer) return std::nullopt;
    raw.outer_dart = *outer;
  }

  int circle = 0;
  for (int a = 0; a < count; ++a) {
    if (!occ[a].empty()) continue;
    const RegionId host = crossings == 0 ? 0 : out.locate(polygons[a].front());
    raw.free_circles.push_back({circle++, host});
  }
  return out;
}

Polygon rectangle(double x0, double x1, double y0, double y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

Polygon random_star(std::mt19937_64& rng, double cx, double cy, double radius, int corners) {
  std::uniform_real_distribution<double> scale(0.55, 1.0);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  const double pi = std::acos(-1.0);
  Polygon poly;
  for (int i = 0; i < corners; ++i) {
    const double angle = 2.0 * pi * (i + 0.5 + jitter(rng)) / corners;
    const double r = radius * scale(rng);
    poly.emplace_back(cx + r * std::cos(angle), cy + r * std::sin(angle));
  }
  return poly;
}

}  // namespace pinloop::testing
