#include <string>

#include "pinloop/error.hpp"
#include "pinloop/graphred.hpp"

namespace pinloop {

// Crossing h (one per half-edge, at the tail u) is where the loops of the
// faces left and right of h meet inside the triangle T_u. Its darts:
//   0: loop of the right face, heading into T_u
//   1: loop of the left face, heading along succ(h)
//   2: loop of the right face, heading along pred(h)
//   3: loop of the left face, heading into T_u
FaceLoopMultiloop face_loop_multiloop(const EmbeddedGraph& g) {
  validate_graph(g);
  if (!is_cubic(g) || !is_simple_graph(g)) {
    fail(ErrorCode::NotCubic, "face loops need a simple cubic graph");
  }
  if (euler_genus(g) != 0) fail(ErrorCode::NotGenusZero, "rotation system is not planar");
  if (component_count(g) > 1 || vertex_connectivity(g) < 3) {
    fail(ErrorCode::Not3Connected, "face loops need a 3-connected graph");
  }

  const int halves = 2 * g.edge_count();
  RawMultiloop raw;
  raw.crossings = halves;
  raw.arc_involution.assign(4 * halves, -1);
  auto pair = [&](int a, int b) {
    raw.arc_involution[a] = b;
    raw.arc_involution[b] = a;
  };
  for (int h = 0; h < halves; ++h) {
    pair(4 * h + 3, 4 * g.succ(h) + 0);
    pair(4 * g.succ(h) + 2, 4 * g.pred(h ^ 1) + 1);
  }

  const std::vector<int> face_of = face_of_half_edges(g);
  if (g.outer_face) {
    raw.ambient = Ambient::plane;
    for (int h = 0; h < halves; ++h) {
      if (face_of[g.succ(h)] == *g.outer_face) {
        raw.outer_dart = 4 * h + 2;
        break;
      }
    }
  }

  FaceLoopMultiloop out{Multiloop::validate(raw), {}};
  const Multiloop& m = out.multiloop;
  FaceLoopLabels& labels = out.labels;
  labels.vertex_region.assign(g.n, -1);
  labels.edge_region.assign(g.edge_count(), -1);
  labels.face_region.assign(faces(g).size(), -1);
  for (int h = 0; h < halves; ++h) {
    labels.vertex_region[g.tail(h)] = m.region_of(4 * h + 0);
    labels.edge_region[h >> 1] = m.region_of(4 * g.pred(h) + 1);
    labels.face_region[face_of[g.succ(h)]] = m.region_of(4 * h + 2);
  }
  return out;
}

}  // namespace pinloop
