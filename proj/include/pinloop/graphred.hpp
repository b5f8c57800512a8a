#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinloop/multiloop.hpp"
#include "pinloop/tristrand.hpp"

namespace pinloop {

// Graph with a rotation system. Half-edge 2e runs from edges[e].first to
// edges[e].second and 2e+1 runs back. rotation[v] lists the incident edge ids
// counterclockwise. Faces are the orbits of h -> (edge before twin(h) at its
// head), so each face lies to the left of its half-edges.
struct EmbeddedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rotation;
  std::optional<int> outer_face;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
  int tail(int h) const { return h & 1 ? edges[h >> 1].second : edges[h >> 1].first; }
  int head(int h) const { return tail(h ^ 1); }
  // Half-edge leaving v along edge e.
  int half_from(int v, int e) const { return edges[e].first == v ? 2 * e : 2 * e + 1; }
  int succ(int h) const;  // next half-edge counterclockwise around the tail
  int pred(int h) const;
  int face_next(int h) const { return pred(h ^ 1); }

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;
};

// Rotation built from a straight-line drawing; the outer face is the one
// traced clockwise with the largest area.
EmbeddedGraph from_drawing(const std::vector<std::pair<double, double>>& points,
                           const std::vector<std::pair<int, int>>& edges);

// Checks endpoints and that every vertex rotates exactly its incident edges.
void validate_graph(const EmbeddedGraph& g);

// Face walks as half-edge cycles, ordered by smallest half-edge.
std::vector<std::vector<int>> faces(const EmbeddedGraph& g);
// Face index per half-edge, consistent with faces().
std::vector<int> face_of_half_edges(const EmbeddedGraph& g);
// Sum of component genera; isolated vertices count as spheres.
int euler_genus(const EmbeddedGraph& g);
int component_count(const EmbeddedGraph& g);
bool is_simple_graph(const EmbeddedGraph& g);
bool is_cubic(const EmbeddedGraph& g);
PlainGraph to_plain(const EmbeddedGraph& g);

// Exhaustive edge branching; the reference oracle for small graphs.
int vc_min_bruteforce(const PlainGraph& g, std::size_t node_budget = 50'000'000);
// Branch and reduce with a matching lower bound, for graphs of a few hundred
// vertices.
int vc_min_exact(const PlainGraph& g, std::size_t node_budget = 50'000'000);

struct BipartiteCover {
  int size = 0;
  std::vector<int> cover;
};
BipartiteCover bipartite_vc(const PlainGraph& g);

int vertex_connectivity(const EmbeddedGraph& g);

struct ReductionTrace {
  std::string stage;
  int applications = 0;  // n
  int k_before = 0;
  int k_after = 0;
  EmbeddedGraph before;
  EmbeddedGraph after;
};

struct Reduction {
  EmbeddedGraph graph;
  int k = 0;
  std::vector<ReductionTrace> trace;
};

Reduction prune_degree1(const EmbeddedGraph& g, int k);
Reduction connectify(const EmbeddedGraph& g, int k);
Reduction cubify(const EmbeddedGraph& g, int k);
Reduction three_connectify(const EmbeddedGraph& g, int k);
Reduction reduce_3c3pvc(const EmbeddedGraph& g, int k);

// Piece inserted by three_connectify: four triangles (3i, 3i+1, 3i+2) in a
// ring, joined by edges 3i+2 -- 3i+4. Vertex 12+i is a stub standing in for
// the attachment point of terminal 3i; stubs appear counterclockwise.
EmbeddedGraph terminal_ring_gadget();

struct FaceLoopLabels {
  std::vector<RegionId> vertex_region;  // T_v
  std::vector<RegionId> edge_region;    // Q_e
  std::vector<RegionId> face_region;    // inside the loop of each face
};

struct FaceLoopMultiloop {
  Multiloop multiloop;
  FaceLoopLabels labels;
};

// One simple loop per face (outer face included) of a 3-connected cubic
// plane graph; loops of faces sharing an edge cross once beyond each
// endpoint. Plane ambient when the graph names an outer face.
FaceLoopMultiloop face_loop_multiloop(const EmbeddedGraph& g);

namespace families {
EmbeddedGraph complete4();
EmbeddedGraph cube();
EmbeddedGraph prism(int sides);
EmbeddedGraph path(int vertices);
EmbeddedGraph cycle(int vertices);
// Small plane graphs of maximum degree 3, each with at most 14 vertices.
std::vector<std::pair<std::string, EmbeddedGraph>> small_subcubic();
}  // namespace families

}  // namespace pinloop
