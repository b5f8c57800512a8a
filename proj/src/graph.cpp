#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "pinloop/error.hpp"
#include "pinloop/graphred.hpp"

namespace pinloop {

namespace {

int rotation_index(const EmbeddedGraph& g, int v, int e) {
  const auto& rot = g.rotation[v];
  auto it = std::find(rot.begin(), rot.end(), e);
  if (it == rot.end()) {
    fail(ErrorCode::InvalidGraph,
         "edge " + std::to_string(e) + " missing from rotation of " + std::to_string(v));
  }
  return static_cast<int>(it - rot.begin());
}

std::vector<int> component_labels(const EmbeddedGraph& g, int& count) {
  std::vector<int> label(g.n, -1);
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  count = 0;
  for (int s = 0; s < g.n; ++s) {
    if (label[s] != -1) continue;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (label[w] == -1) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

int EmbeddedGraph::succ(int h) const {
  const int v = tail(h);
  const int i = rotation_index(*this, v, h >> 1);
  const auto& rot = rotation[v];
  return half_from(v, rot[(i + 1) % rot.size()]);
}

int EmbeddedGraph::pred(int h) const {
  const int v = tail(h);
  const int i = rotation_index(*this, v, h >> 1);
  const auto& rot = rotation[v];
  return half_from(v, rot[(i + rot.size() - 1) % rot.size()]);
}

void validate_graph(const EmbeddedGraph& g) {
  if (g.n < 0 || static_cast<int>(g.rotation.size()) != g.n) {
    fail(ErrorCode::InvalidGraph, "rotation must list one entry per vertex");
  }
  std::vector<int> seen(g.edges.size(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
      fail(ErrorCode::InvalidGraph, "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (u == v) fail(ErrorCode::InvalidGraph, "edge " + std::to_string(e) + " is a loop");
  }
  for (int v = 0; v < g.n; ++v) {
    for (int e : g.rotation[v]) {
      if (e < 0 || e >= g.edge_count() ||
          (g.edges[e].first != v && g.edges[e].second != v)) {
        fail(ErrorCode::InvalidGraph,
             "rotation of " + std::to_string(v) + " lists a non-incident edge");
      }
      ++seen[e];
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (seen[e] != 2) {
      fail(ErrorCode::InvalidGraph,
           "edge " + std::to_string(e) + " must appear once at each endpoint");
    }
  }
  if (g.outer_face) {
    const int f = *g.outer_face;
    if (f < 0 || f >= static_cast<int>(faces(g).size())) {
      fail(ErrorCode::InvalidGraph, "outer face " + std::to_string(f) + " does not exist");
    }
  }
}

std::vector<std::vector<int>> faces(const EmbeddedGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> used(2 * g.edges.size(), 0);
  for (int h = 0; h < 2 * g.edge_count(); ++h) {
    if (used[h]) continue;
    std::vector<int> walk;
    int x = h;
    do {
      used[x] = 1;
      walk.push_back(x);
      x = g.face_next(x);
    } while (x != h);
    out.push_back(std::move(walk));
  }
  return out;
}

std::vector<int> face_of_half_edges(const EmbeddedGraph& g) {
  std::vector<int> face(2 * g.edges.size(), -1);
  const auto all = faces(g);
  for (int f = 0; f < static_cast<int>(all.size()); ++f) {
    for (int h : all[f]) face[h] = f;
  }
  return face;
}

int component_count(const EmbeddedGraph& g) {
  int count = 0;
  component_labels(g, count);
  return count;
}

int euler_genus(const EmbeddedGraph& g) {
  int components = 0;
  const auto label = component_labels(g, components);
  int face_count = static_cast<int>(faces(g).size());
  for (int v = 0; v < g.n; ++v) {
    if (g.rotation[v].empty()) ++face_count;
  }
  const int twice = 2 * components - g.n + g.edge_count() - face_count;
  return twice / 2;
}

bool is_simple_graph(const EmbeddedGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u == v || !seen.emplace(std::min(u, v), std::max(u, v)).second) return false;
  }
  return true;
}

bool is_cubic(const EmbeddedGraph& g) {
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

PlainGraph to_plain(const EmbeddedGraph& g) {
  PlainGraph p;
  p.n = g.n;
  p.edges = g.edges;
  return p;
}

EmbeddedGraph from_drawing(const std::vector<std::pair<double, double>>& points,
                           const std::vector<std::pair<int, int>>& edges) {
  EmbeddedGraph g;
  g.n = static_cast<int>(points.size());
  g.edges = edges;
  g.rotation.assign(g.n, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    g.rotation[edges[e].first].push_back(e);
    g.rotation[edges[e].second].push_back(e);
  }
  for (int v = 0; v < g.n; ++v) {
    auto angle = [&](int e) {
      const int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
      return std::atan2(points[w].second - points[v].second, points[w].first - points[v].first);
    };
    std::sort(g.rotation[v].begin(), g.rotation[v].end(),
              [&](int a, int b) { return angle(a) < angle(b); });
  }
  validate_graph(g);
  const auto walks = faces(g);
  double most_negative = 0.0;
  for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
    double area = 0.0;
    for (int h : walks[f]) {
      const auto [x0, y0] = points[g.tail(h)];
      const auto [x1, y1] = points[g.head(h)];
      area += x0 * y1 - x1 * y0;
    }
    if (area < most_negative - 1e-12) {
      most_negative = area;
      g.outer_face = f;
    }
  }
  // A lone edge or a tree has a single face of zero area.
  if (!g.outer_face && !walks.empty()) g.outer_face = 0;
  return g;
}

namespace families {

namespace {

std::vector<std::pair<double, double>> regular_polygon(int sides, double radius, double turn) {
  std::vector<std::pair<double, double>> pts;
  const double pi = std::acos(-1.0);
  for (int i = 0; i < sides; ++i) {
    const double a = turn + 2.0 * pi * i / sides;
    pts.emplace_back(radius * std::cos(a), radius * std::sin(a));
  }
  return pts;
}

// Disjoint union of drawings, the second shifted to the right.
EmbeddedGraph side_by_side(const std::vector<std::pair<double, double>>& p1,
                           const std::vector<std::pair<int, int>>& e1,
                           const std::vector<std::pair<double, double>>& p2,
                           const std::vector<std::pair<int, int>>& e2) {
  auto points = p1;
  auto edges = e1;
  const int offset = static_cast<int>(p1.size());
  for (auto [x, y] : p2) points.emplace_back(x + 10.0, y);
  for (auto [u, v] : e2) edges.emplace_back(u + offset, v + offset);
  return from_drawing(points, edges);
}

std::vector<std::pair<int, int>> cycle_edges(int n, int offset = 0) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(offset + i, offset + (i + 1) % n);
  return edges;
}

}  // namespace

EmbeddedGraph complete4() {
  return from_drawing({{0, 0}, {4, 0}, {2, 3.5}, {2, 1.2}},
                      {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
}

EmbeddedGraph cube() { return prism(4); }

EmbeddedGraph prism(int sides) {
  if (sides < 3) fail(ErrorCode::InvalidGraph, "a prism needs at least 3 sides");
  auto points = regular_polygon(sides, 2.0, 0.5);
  auto inner = regular_polygon(sides, 1.0, 0.5);
  points.insert(points.end(), inner.begin(), inner.end());
  auto edges = cycle_edges(sides);
  auto inner_edges = cycle_edges(sides, sides);
  edges.insert(edges.end(), inner_edges.begin(), inner_edges.end());
  for (int i = 0; i < sides; ++i) edges.emplace_back(i, sides + i);
  return from_drawing(points, edges);
}

EmbeddedGraph path(int vertices) {
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i) {
    points.emplace_back(i, 0.0);
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return from_drawing(points, edges);
}

EmbeddedGraph cycle(int vertices) {
  return from_drawing(regular_polygon(vertices, 1.0, 0.0), cycle_edges(vertices));
}

std::vector<std::pair<std::string, EmbeddedGraph>> small_subcubic() {
  std::vector<std::pair<std::string, EmbeddedGraph>> out;
  out.emplace_back("empty", EmbeddedGraph{});
  out.emplace_back("K2", path(2));
  out.emplace_back("P3", path(3));
  out.emplace_back("P6", path(6));
  out.emplace_back("C4", cycle(4));
  out.emplace_back("C5", cycle(5));
  out.emplace_back("C7", cycle(7));
  out.emplace_back("triangle", cycle(3));
  out.emplace_back("claw", from_drawing({{0, 0}, {1, 0}, {-1, 0.5}, {-1, -0.5}},
                                        {{0, 1}, {0, 2}, {0, 3}}));
  out.emplace_back("paw", from_drawing({{0, 0}, {2, 0}, {1, 1.5}, {1, 3}},
                                       {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
  out.emplace_back("diamond", from_drawing({{0, 0}, {1, 1}, {2, 0}, {1, -1}},
                                           {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}));
  out.emplace_back("theta", from_drawing({{0, 0}, {4, 0}, {2, 1}, {2, 0}, {2, -1}},
                                         {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}));
  out.emplace_back("binary-tree",
                   from_drawing({{0, 0}, {-2, -1}, {2, -1}, {-3, -2}, {-1, -2}, {1, -2}, {3, -2}},
                                {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}));
  out.emplace_back("two-triangles",
                   side_by_side(regular_polygon(3, 1.0, 0.0), cycle_edges(3),
                                regular_polygon(3, 1.0, 0.0), cycle_edges(3)));
  out.emplace_back("triangle+path",
                   side_by_side(regular_polygon(3, 1.0, 0.0), cycle_edges(3),
                                {{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}}));
  out.emplace_back("K4", complete4());
  out.emplace_back("ladder4",
                   from_drawing({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}},
                                {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7},
                                 {0, 4}, {1, 5}, {2, 6}, {3, 7}}));
  out.emplace_back("prism3", prism(3));
  out.emplace_back("cube", cube());
  out.emplace_back("prism5", prism(5));
  // Two copies of K4 with one edge subdivided, the subdivision points joined.
  out.emplace_back("K4-bridge-K4",
                   from_drawing({{0, 0}, {0, 4}, {-3, 2}, {-1, 2}, {0, 2},
                                 {5, 0}, {5, 4}, {8, 2}, {6, 2}, {5, 2}},
                                {{0, 4}, {4, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3},
                                 {5, 9}, {9, 6}, {6, 7}, {7, 5}, {5, 8}, {6, 8}, {7, 8},
                                 {4, 9}}));
  out.emplace_back("prism6", prism(6));
  out.emplace_back("prism7", prism(7));
  return out;
}

}  // namespace families

}  // namespace pinloop
