#include "pinloop/mobidisc.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "pinloop/error.hpp"

namespace pinloop {

namespace {

// Per-strand positions of crossings along the canonical walk.
struct StrandIndex {
  std::vector<DartId> walk;
  std::vector<int> position;  // by crossing, -1 if the strand misses it
};

std::vector<DartId> forward_arc(const StrandIndex& s, int from, int to) {
  const int len = static_cast<int>(s.walk.size());
  std::vector<DartId> arc;
  for (int p = from; p != to; p = (p + 1) % len) arc.push_back(s.walk[p]);
  return arc;
}

std::vector<DartId> backward_arc(const StrandIndex& s, int from, int to) {
  const int len = static_cast<int>(s.walk.size());
  std::vector<DartId> arc;
  for (int p = from; p != to; p = (p + len - 1) % len) {
    arc.push_back(Multiloop::opposite(s.walk[p]));
  }
  return arc;
}

class BigonSearch {
 public:
  explicit BigonSearch(const Multiloop& m) : m_(m) {
    const auto& regions = m.regions();
    face_index_.assign(m.dart_count(), -1);
    for (DartId d = 0; d < m.dart_count(); ++d) {
      face_index_[d] = static_cast<int>(
          std::lower_bound(regions.begin(), regions.end(), m.region_of(d)) - regions.begin());
    }
    outer_index_ = -1;
    if (m.ambient() == Ambient::plane && m.outer_region()) {
      outer_index_ = static_cast<int>(
          std::lower_bound(regions.begin(), regions.end(), *m.outer_region()) - regions.begin());
    }
    // Face adjacency through every edge, keyed by the edge's smaller dart.
    edges_by_face_.resize(regions.size());
    for (DartId d = 0; d < m.dart_count(); ++d) {
      edges_by_face_[face_index_[d]].push_back(d);
    }
  }

  void run(std::vector<BigonWitness>& out) {
    const int strands = m_.crossing_strand_count();
    std::vector<StrandIndex> index(strands);
    for (StrandId s = 0; s < strands; ++s) {
      index[s].walk = m_.strand_walk(s);
      index[s].position.assign(m_.crossing_count(), -1);
      for (int p = 0; p < static_cast<int>(index[s].walk.size()); ++p) {
        index[s].position[Multiloop::crossing_of(index[s].walk[p])] = p;
      }
    }
    std::set<std::pair<std::vector<int>, std::vector<RegionId>>> seen;
    for (StrandId i = 0; i < strands; ++i) {
      for (StrandId j = i + 1; j < strands; ++j) {
        std::vector<CrossingId> shared;
        for (CrossingId c = 0; c < m_.crossing_count(); ++c) {
          if (index[i].position[c] >= 0 && index[j].position[c] >= 0) shared.push_back(c);
        }
        for (size_t a = 0; a < shared.size(); ++a) {
          for (size_t b = a + 1; b < shared.size(); ++b) {
            const CrossingId x = shared[a], y = shared[b];
            const int pix = index[i].position[x], piy = index[i].position[y];
            const int pjx = index[j].position[x], pjy = index[j].position[y];
            const std::vector<DartId> arcs_i[2] = {forward_arc(index[i], pix, piy),
                                                   backward_arc(index[i], pix, piy)};
            const std::vector<DartId> arcs_j[2] = {forward_arc(index[j], pjx, pjy),
                                                   backward_arc(index[j], pjx, pjy)};
            for (const auto& ai : arcs_i) {
              for (const auto& aj : arcs_j) {
                consider(i, j, x, y, ai, aj, seen, out);
              }
            }
          }
        }
      }
    }
  }

 private:
  static std::vector<CrossingId> interior(const std::vector<DartId>& arc) {
    std::vector<CrossingId> cs;
    for (size_t t = 1; t < arc.size(); ++t) cs.push_back(Multiloop::crossing_of(arc[t]));
    std::sort(cs.begin(), cs.end());
    return cs;
  }

  void consider(StrandId i, StrandId j, CrossingId x, CrossingId y,
                const std::vector<DartId>& arc_i, const std::vector<DartId>& arc_j,
                std::set<std::pair<std::vector<int>, std::vector<RegionId>>>& seen,
                std::vector<BigonWitness>& out) {
    const auto inner_i = interior(arc_i);
    const auto inner_j = interior(arc_j);
    std::vector<CrossingId> common;
    std::set_intersection(inner_i.begin(), inner_i.end(), inner_j.begin(), inner_j.end(),
                          std::back_inserter(common));
    if (!common.empty()) return;  // not embedded

    // Directed boundary: along arc_i from x to y, then back along arc_j.
    std::vector<DartId> curve = arc_i;
    for (auto it = arc_j.rbegin(); it != arc_j.rend(); ++it) curve.push_back(m_.arc(*it));

    std::vector<char> on_curve(m_.dart_count(), 0);
    std::vector<char> crossing_on_curve(m_.crossing_count(), 0);
    std::vector<int> edge_ids;
    for (DartId d : curve) {
      on_curve[d] = on_curve[m_.arc(d)] = 1;
      crossing_on_curve[Multiloop::crossing_of(d)] = 1;
      edge_ids.push_back(std::min(d, m_.arc(d)));
    }
    std::sort(edge_ids.begin(), edge_ids.end());

    const int faces = static_cast<int>(m_.regions().size());
    std::vector<int> side(faces, -1);
    const int right = 0, left = 1;
    std::vector<int> stack;
    for (DartId d : curve) {
      for (int which : {right, left}) {
        const int f = which == right ? face_index_[d] : face_index_[m_.arc(d)];
        if (side[f] == -1) {
          side[f] = which;
          stack.push_back(f);
        } else if (side[f] != which) {
          return;  // one face on both sides: the curve does not separate
        }
      }
    }
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (DartId d : edges_by_face_[f]) {
        if (on_curve[d]) continue;
        const int g = face_index_[m_.arc(d)];
        if (side[g] == -1) {
          side[g] = side[f];
          stack.push_back(g);
        } else if (side[g] != side[f]) {
          return;
        }
      }
    }

    for (int which : {right, left}) {
      if (outer_index_ >= 0 && side[outer_index_] == which) continue;
      if (euler_characteristic(side, which, on_curve, crossing_on_curve, curve.size()) != 1) {
        continue;
      }
      BigonWitness w;
      w.strand_i = i;
      w.strand_j = j;
      w.x = x;
      w.y = y;
      w.arc_i = arc_i;
      w.arc_j = arc_j;
      for (int f = 0; f < faces; ++f) {
        if (side[f] == which) w.disc_faces.push_back(m_.regions()[f]);
      }
      w.corner_x = corner(side, which, x);
      w.corner_y = corner(side, which, y);
      if (seen.emplace(edge_ids, w.disc_faces).second) out.push_back(std::move(w));
    }
  }

  int euler_characteristic(const std::vector<int>& side, int which,
                           const std::vector<char>& on_curve,
                           const std::vector<char>& crossing_on_curve, size_t curve_edges) const {
    int vertices = 0, edges = static_cast<int>(curve_edges), faces = 0;
    for (int s : side) faces += (s == which);
    for (CrossingId c = 0; c < m_.crossing_count(); ++c) {
      if (crossing_on_curve[c] || side[face_index_[4 * c]] == which) ++vertices;
    }
    for (DartId d = 0; d < m_.dart_count(); ++d) {
      if (d < m_.arc(d) && !on_curve[d] && side[face_index_[d]] == which) ++edges;
    }
    return vertices - edges + faces;
  }

  RegionId corner(const std::vector<int>& side, int which, CrossingId c) const {
    int count = 0;
    RegionId found = -1;
    for (int k = 0; k < 4; ++k) {
      const RegionId r = m_.sector_region(c, k);
      if (side[face_index_[4 * c + ((k + 1) & 3)]] == which) {
        ++count;
        found = r;
      }
    }
    return count == 1 ? found : -1;
  }

  const Multiloop& m_;
  std::vector<int> face_index_;
  std::vector<std::vector<DartId>> edges_by_face_;
  int outer_index_ = -1;
};

void require_simple_connected(const Multiloop& m) {
  if (!is_simple(m)) fail(ErrorCode::NotSimple, "a strand crosses itself");
  if (!m.is_connected()) {
    fail(ErrorCode::DisconnectedMap, "mobidisc search needs a connected crossing map");
  }
}

bool is_subset(const std::vector<RegionId>& a, const std::vector<RegionId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<BigonWitness> enumerate_embedded_bigons(const Multiloop& m) {
  require_simple_connected(m);
  std::vector<BigonWitness> out;
  if (m.crossing_count() == 0) return out;
  BigonSearch(m).run(out);
  std::sort(out.begin(), out.end(), [](const BigonWitness& a, const BigonWitness& b) {
    return std::tie(a.disc_faces, a.strand_i, a.strand_j, a.x, a.y, a.arc_i, a.arc_j) <
           std::tie(b.disc_faces, b.strand_i, b.strand_j, b.x, b.y, b.arc_i, b.arc_j);
  });
  return out;
}

std::vector<RegionId> pinnable_regions(const Multiloop& m) {
  std::vector<RegionId> vars;
  for (RegionId r : m.regions()) {
    if (m.ambient() == Ambient::plane && m.outer_region() == r) continue;
    vars.push_back(r);
  }
  return vars;
}

MobidiscFormula mobidisc_formula(const Multiloop& m) {
  MobidiscFormula f;
  f.variables = pinnable_regions(m);
  for (const BigonWitness& w : enumerate_embedded_bigons(m)) f.clauses.push_back(w.disc_faces);
  return prune(f);
}

MobidiscFormula prune(const MobidiscFormula& f) {
  std::vector<std::vector<RegionId>> clauses = f.clauses;
  for (auto& c : clauses) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(clauses.begin(), clauses.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  MobidiscFormula out;
  out.variables = f.variables;
  std::sort(out.variables.begin(), out.variables.end());
  for (const auto& c : clauses) {
    bool absorbed = false;
    for (const auto& kept : out.clauses) {
      if (is_subset(kept, c)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) out.clauses.push_back(c);
  }
  return out;
}

bool is_antichain(const std::vector<std::vector<RegionId>>& sets) {
  for (size_t a = 0; a < sets.size(); ++a) {
    for (size_t b = 0; b < sets.size(); ++b) {
      if (a != b && is_subset(sets[a], sets[b])) return false;
    }
  }
  return true;
}

}  // namespace pinloop
