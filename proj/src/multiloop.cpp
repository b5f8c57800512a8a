#include "pinloop/multiloop.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pinloop/error.hpp"

namespace pinloop {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Multiloop Multiloop::validate(const RawMultiloop& raw) {
  if (raw.crossings < 0) fail(ErrorCode::ParseError, "negative crossing count");
  const int n = 4 * raw.crossings;
  if (static_cast<int>(raw.arc_involution.size()) != n) {
    fail(ErrorCode::NotInvolution, "arc_involution must have " + std::to_string(n) +
                                       " entries, got " +
                                       std::to_string(raw.arc_involution.size()));
  }
  for (int d = 0; d < n; ++d) {
    int e = raw.arc_involution[d];
    if (e < 0 || e >= n) {
      fail(ErrorCode::NotInvolution, "dart " + std::to_string(d) + " maps out of range");
    }
    if (e == d) fail(ErrorCode::FixedPointInInvolution, "dart " + std::to_string(d) + " is fixed");
    if (raw.arc_involution[e] != d) {
      fail(ErrorCode::NotInvolution, "arc_involution is not an involution at dart " +
                                         std::to_string(d));
    }
  }

  Multiloop m;
  m.raw_ = raw;

  // Regions: orbits of face_next, labelled by their smallest dart.
  m.region_of_dart_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (m.region_of_dart_[d] != -1) continue;
    int e = d;
    do {
      m.region_of_dart_[e] = d;
      e = m.face_next(e);
    } while (e != d);
    m.regions_.push_back(d);
  }
  if (n == 0) m.regions_.push_back(0);

  // Strands: orbits of straight_next come in reversed pairs.
  m.strand_of_dart_.assign(n, -1);
  std::vector<int> orbit_of(n, -1);
  int orbit_count = 0;
  for (int d = 0; d < n; ++d) {
    if (orbit_of[d] != -1) continue;
    int e = d;
    do {
      orbit_of[e] = orbit_count;
      e = m.straight_next(e);
    } while (e != d);
    ++orbit_count;
  }
  for (int d = 0; d < n; ++d) {
    if (orbit_of[opposite(d)] == orbit_of[d]) {
      fail(ErrorCode::BadTransversalPairing,
           "strand through dart " + std::to_string(d) + " revisits its crossing reversed");
    }
  }
  for (int d = 0; d < n; ++d) {
    if (m.strand_of_dart_[d] != -1) continue;
    const StrandId s = m.crossing_strands_++;
    std::vector<DartId> walk;
    int e = d;
    do {
      walk.push_back(e);
      m.strand_of_dart_[e] = s;
      m.strand_of_dart_[opposite(e)] = s;
      e = m.straight_next(e);
    } while (e != d);
    m.strand_walks_.push_back(std::move(walk));
  }

  // Connected components of the crossing map and their genus.
  DisjointSets components(raw.crossings);
  for (int d = 0; d < n; ++d) components.unite(crossing_of(d), crossing_of(m.arc(d)));
  std::vector<int> component_index(raw.crossings, -1);
  m.component_of_crossing_.assign(raw.crossings, -1);
  int component_total = 0;
  for (int c = 0; c < raw.crossings; ++c) {
    int root = components.find(c);
    if (component_index[root] == -1) component_index[root] = component_total++;
    m.component_of_crossing_[c] = component_index[root];
  }
  std::vector<int> vertices(component_total, 0), faces(component_total, 0);
  for (int c = 0; c < raw.crossings; ++c) ++vertices[m.component_of_crossing_[c]];
  for (RegionId r : m.regions_) {
    if (n > 0) ++faces[m.component_of_crossing_[crossing_of(r)]];
  }
  for (int k = 0; k < component_total; ++k) {
    // Each crossing is 4-valent, so a component has twice as many edges.
    const int euler = vertices[k] - 2 * vertices[k] + faces[k];
    if ((2 - euler) % 2 != 0 || euler > 2) {
      fail(ErrorCode::NonIntegerGenus,
           "component " + std::to_string(k) + " has Euler characteristic " + std::to_string(euler));
    }
    m.component_genus_.push_back((2 - euler) / 2);
  }

  for (const FreeCircle& fc : raw.free_circles) {
    if (!m.is_region(fc.host)) {
      fail(ErrorCode::DanglingFreeCircleHost, "free circle " + std::to_string(fc.circle_id) +
                                                  " names unknown region " +
                                                  std::to_string(fc.host));
    }
  }

  if (raw.ambient == Ambient::plane && n > 0) {
    if (!raw.outer_dart || *raw.outer_dart < 0 || *raw.outer_dart >= n) {
      fail(ErrorCode::UnknownRegionId, "plane multiloop needs an outer dart in range");
    }
    m.outer_region_ = m.region_of(*raw.outer_dart);
  } else if (raw.ambient == Ambient::plane) {
    m.outer_region_ = 0;
  }
  return m;
}

bool Multiloop::is_region(RegionId r) const {
  return std::binary_search(regions_.begin(), regions_.end(), r);
}

int Multiloop::genus() const {
  return std::accumulate(component_genus_.begin(), component_genus_.end(), 0);
}

bool is_simple(const Multiloop& m) {
  for (CrossingId c = 0; c < m.crossing_count(); ++c) {
    if (m.strand_of(4 * c) == m.strand_of(4 * c + 1)) return false;
  }
  return true;
}

TopologyReport topology_report(const Multiloop& m) {
  TopologyReport report;
  report.strands = m.strand_count();
  report.regions = static_cast<int>(m.regions().size());
  report.genus = m.genus();
  report.crossing_count = m.crossing_count();
  report.components = m.component_count();
  report.component_genus = m.component_genus();
  return report;
}

}  // namespace pinloop
