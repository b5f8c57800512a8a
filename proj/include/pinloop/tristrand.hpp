#pragma once

#include <utility>
#include <vector>

#include "pinloop/mobidisc.hpp"
#include "pinloop/pinsolve.hpp"

namespace pinloop {

// Undirected graph on vertices 0..n-1; parallel edges are allowed.
struct PlainGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Triangular regions joined by one edge per non-regional innermost bigon.
struct BigonGraph {
  std::vector<RegionId> vertices;                      // sorted
  std::vector<std::pair<RegionId, RegionId>> edges;    // (smaller, larger), clause order
  int forced_regional_count = 0;
  std::vector<RegionId> forced_regions;                // sorted
};

struct TwoColoring {
  std::vector<int> side;       // 0 or 1 per vertex; empty when not bipartite
  std::vector<int> odd_cycle;  // closed walk of odd length when not bipartite

  bool bipartite() const { return odd_cycle.empty(); }
};

struct Matching {
  std::vector<int> mate;  // partner vertex, or -1
  int size = 0;
};

struct ThreeStrandPinning {
  int value = 0;
  RegionSet pins;
  BigonGraph graph;
};

BigonGraph build_bigon_graph(const Multiloop& m);

// Vertex i of the result is graph.vertices[i].
PlainGraph to_plain(const BigonGraph& graph);

TwoColoring two_color(const PlainGraph& g);

// Hopcroft-Karp from the side-0 vertices of the breadth-first 2-coloring.
Matching max_matching_bipartite(const PlainGraph& g);

// Minimum vertex cover from a maximum matching by alternating reachability.
std::vector<int> koenig_cover(const PlainGraph& g, const Matching& matching);

ThreeStrandPinning pinning_number_3strand(const Multiloop& m);

}  // namespace pinloop
