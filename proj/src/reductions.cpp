#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "pinloop/error.hpp"
#include "pinloop/graphred.hpp"

namespace pinloop {

namespace {

int add_vertex(EmbeddedGraph& g) {
  g.rotation.emplace_back();
  return g.n++;
}

int add_edge(EmbeddedGraph& g, int u, int v) {
  g.edges.emplace_back(u, v);
  return g.edge_count() - 1;
}

// Places `e` right after `anchor` in the counterclockwise order at v.
void insert_after(EmbeddedGraph& g, int v, int anchor, int e) {
  auto& rot = g.rotation[v];
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it == rot.end() ? rot.end() : it + 1, e);
}

void replace_in_rotation(EmbeddedGraph& g, int v, int from, int to) {
  auto& rot = g.rotation[v];
  std::replace(rot.begin(), rot.end(), from, to);
}

// Splits edge e = (u, v) into (u, w) and (w, v); returns w.
int subdivide(EmbeddedGraph& g, int e) {
  const auto [u, v] = g.edges[e];
  const int w = add_vertex(g);
  g.edges[e] = {u, w};
  const int f = add_edge(g, w, v);
  replace_in_rotation(g, v, e, f);
  g.rotation[w] = {e, f};
  return w;
}

EmbeddedGraph keep_vertices(const EmbeddedGraph& g, const std::vector<char>& keep) {
  std::vector<int> vid(g.n, -1), eid(g.edges.size(), -1);
  EmbeddedGraph out;
  for (int v = 0; v < g.n; ++v) {
    if (keep[v]) vid[v] = out.n++;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (keep[u] && keep[v]) {
      eid[e] = out.edge_count();
      out.edges.emplace_back(vid[u], vid[v]);
    }
  }
  out.rotation.resize(out.n);
  for (int v = 0; v < g.n; ++v) {
    if (!keep[v]) continue;
    for (int e : g.rotation[v]) {
      if (eid[e] >= 0) out.rotation[vid[v]].push_back(eid[e]);
    }
  }
  return out;
}

int max_degree(const EmbeddedGraph& g) {
  int d = 0;
  for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
  return d;
}

void require_plane_subcubic(const EmbeddedGraph& g) {
  validate_graph(g);
  if (max_degree(g) > 3) fail(ErrorCode::DegreeOutOfRange, "maximum degree exceeds 3");
  if (euler_genus(g) != 0) fail(ErrorCode::NotGenusZero, "rotation system is not planar");
}

void require_genus_zero_after(const EmbeddedGraph& g, const char* stage) {
  if (euler_genus(g) != 0) {
    fail(ErrorCode::NotGenusZero, std::string(stage) + " produced a non-planar rotation");
  }
}

Reduction single_stage(const char* name, const EmbeddedGraph& before, EmbeddedGraph after,
                       int k_before, int k_after, int n) {
  if (n > 0) after.outer_face.reset();
  Reduction r;
  r.graph = after;
  r.k = k_after;
  r.trace.push_back({name, n, k_before, k_after, before, std::move(after)});
  return r;
}

std::vector<int> component_of(const EmbeddedGraph& g) {
  std::vector<int> label(g.n, -1);
  int count = 0;
  for (int s = 0; s < g.n; ++s) {
    if (label[s] != -1) continue;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int e : g.rotation[u]) {
        const int w = g.edges[e].first == u ? g.edges[e].second : g.edges[e].first;
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

// Whether removing the given edges disconnects a connected graph; `side`
// receives the vertices still reachable from vertex 0.
bool separates(const EmbeddedGraph& g, const std::vector<int>& removed, std::vector<char>& side) {
  side.assign(g.n, 0);
  if (g.n == 0) return false;
  std::vector<int> stack{0};
  side[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int e : g.rotation[u]) {
      if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
      const int w = g.edges[e].first == u ? g.edges[e].second : g.edges[e].first;
      if (!side[w]) {
        side[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached < g.n;
}

// Smallest edge cut of size at most two, bridges first; empty if none.
std::vector<int> small_edge_cut(const EmbeddedGraph& g) {
  std::vector<char> side;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (separates(g, {e}, side)) return {e};
  }
  for (int a = 0; a < g.edge_count(); ++a) {
    for (int b = a + 1; b < g.edge_count(); ++b) {
      if (separates(g, {a, b}, side)) return {a, b};
    }
  }
  return {};
}

// Connects the ring piece inside the face left of half-edge h: edges before
// and after h on that face are each subdivided twice and the four new
// vertices are joined to the terminals. Returns false if neither
// orientation of the ring keeps the embedding planar.
bool insert_ring(EmbeddedGraph& g, int h) {
  int prev = h;
  while (g.face_next(prev) != h) prev = g.face_next(prev);
  const int before_edge = prev >> 1;
  const int after_edge = g.face_next(h) >> 1;
  if (before_edge == after_edge || before_edge == (h >> 1) || after_edge == (h >> 1)) return false;

  for (bool reversed : {false, true}) {
    EmbeddedGraph trial = g;
    std::vector<int> fresh;
    fresh.push_back(subdivide(trial, before_edge));
    fresh.push_back(subdivide(trial, trial.edge_count() - 1));
    fresh.push_back(subdivide(trial, after_edge));
    fresh.push_back(subdivide(trial, trial.edge_count() - 1));

    // First corner of each fresh vertex along the face walk from h.
    std::vector<std::pair<int, int>> corners;  // (vertex, outgoing edge)
    std::vector<char> done(trial.n, 0);
    int x = h;
    do {
      const int v = trial.tail(x);
      if (std::find(fresh.begin(), fresh.end(), v) != fresh.end() && !done[v]) {
        done[v] = 1;
        corners.emplace_back(v, x >> 1);
      }
      x = trial.face_next(x);
    } while (x != h);
    if (corners.size() != 4) return false;
    if (reversed) std::reverse(corners.begin(), corners.end());

    const EmbeddedGraph ring = terminal_ring_gadget();
    const int base = trial.n;
    for (int i = 0; i < 12; ++i) add_vertex(trial);
    std::vector<int> edge_map(ring.edges.size());
    for (int e = 0; e < ring.edge_count(); ++e) {
      auto [u, v] = ring.edges[e];
      const int tu = u < 12 ? base + u : corners[u - 12].first;
      const int tv = v < 12 ? base + v : corners[v - 12].first;
      edge_map[e] = add_edge(trial, tu, tv);
    }
    for (int v = 0; v < 12; ++v) {
      for (int e : ring.rotation[v]) trial.rotation[base + v].push_back(edge_map[e]);
    }
    for (int i = 0; i < 4; ++i) {
      const int stub_edge = edge_map[ring.rotation[12 + i].front()];
      // The corner sits between the outgoing edge and the edge after it.
      insert_after(trial, corners[i].first, corners[i].second, stub_edge);
    }
    if (euler_genus(trial) == 0) {
      g = std::move(trial);
      return true;
    }
  }
  return false;
}

// Unit-capacity max flow between s and t with every other vertex split.
int disjoint_paths(const std::vector<std::vector<int>>& adj, int s, int t) {
  const int n = static_cast<int>(adj.size());
  // Node v_in = 2v, v_out = 2v+1.
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> net(2 * n);
  auto link = [&](int a, int b, int cap) {
    net[a].push_back({b, cap, static_cast<int>(net[b].size())});
    net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1});
  };
  for (int v = 0; v < n; ++v) link(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (int u = 0; u < n; ++u) {
    for (int w : adj[u]) link(2 * u + 1, 2 * w, 1);
  }
  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<std::pair<int, int>> parent(2 * n, {-1, -1});
    std::queue<int> queue;
    queue.push(source);
    parent[source] = {source, -1};
    while (!queue.empty() && parent[sink].first == -1) {
      const int u = queue.front();
      queue.pop();
      for (int i = 0; i < static_cast<int>(net[u].size()); ++i) {
        const Arc& a = net[u][i];
        if (a.cap > 0 && parent[a.to].first == -1) {
          parent[a.to] = {u, i};
          queue.push(a.to);
        }
      }
    }
    if (parent[sink].first == -1) break;
    for (int v = sink; v != source; v = parent[v].first) {
      Arc& a = net[parent[v].first][parent[v].second];
      a.cap -= 1;
      net[v][a.rev].cap += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const EmbeddedGraph& g) {
  if (component_count(g) > 1) fail(ErrorCode::Disconnected, "graph is disconnected");
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  int best = std::max(0, g.n - 1);
  // Some vertex among the first best+1 avoids a minimum separator.
  for (int s = 0; s <= best && s < g.n; ++s) {
    for (int t = s + 1; t < g.n; ++t) {
      if (std::binary_search(adj[s].begin(), adj[s].end(), t)) continue;
      best = std::min(best, disjoint_paths(adj, s, t));
    }
  }
  return best;
}

EmbeddedGraph terminal_ring_gadget() {
  std::vector<std::pair<double, double>> points(16);
  std::vector<std::pair<int, int>> edges;
  const double pi = std::acos(-1.0);
  auto polar = [](double r, double a) { return std::pair{r * std::cos(a), r * std::sin(a)}; };
  for (int i = 0; i < 4; ++i) {
    const double a = pi / 2.0 * i;
    points[3 * i] = polar(1.8, a);
    points[3 * i + 1] = polar(1.0, a - pi / 9.0);
    points[3 * i + 2] = polar(1.0, a + pi / 9.0);
    points[12 + i] = polar(3.0, a);
    edges.emplace_back(3 * i, 3 * i + 1);
    edges.emplace_back(3 * i, 3 * i + 2);
    edges.emplace_back(3 * i + 1, 3 * i + 2);
    edges.emplace_back(3 * i + 2, 3 * ((i + 1) % 4) + 1);
    edges.emplace_back(3 * i, 12 + i);
  }
  EmbeddedGraph g = from_drawing(points, edges);
  g.outer_face.reset();
  return g;
}

Reduction prune_degree1(const EmbeddedGraph& g, int k) {
  require_plane_subcubic(g);
  std::vector<char> keep(g.n, 1);
  std::vector<int> degree(g.n);
  for (int v = 0; v < g.n; ++v) degree[v] = g.degree(v);
  int n = 0;
  auto neighbours = [&](int v) {
    std::vector<int> out;
    for (int e : g.rotation[v]) {
      const int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
      if (keep[w]) out.push_back(w);
    }
    return out;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (!keep[v] || degree[v] != 1) continue;
      const int w = neighbours(v).front();
      for (int x : {v, w}) {
        keep[x] = 0;
        for (int y : neighbours(x)) --degree[y];
      }
      ++n;
      changed = true;
      break;
    }
  }
  for (int v = 0; v < g.n; ++v) {
    if (keep[v] && degree[v] == 0) keep[v] = 0;
  }
  const EmbeddedGraph out = std::all_of(keep.begin(), keep.end(), [](char c) { return c; })
                                ? g
                                : keep_vertices(g, keep);
  return single_stage("prune_degree1", g, out, k, k - n, n);
}

Reduction connectify(const EmbeddedGraph& g, int k) {
  require_plane_subcubic(g);
  const std::vector<int> label = component_of(g);
  const int comps = g.n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<int> chosen(comps, -1);
  for (int e = g.edge_count() - 1; e >= 0; --e) chosen[label[g.edges[e].first]] = e;
  for (int c = 0; c < comps; ++c) {
    if (chosen[c] == -1) {
      fail(ErrorCode::ComponentWithoutEdge, "component " + std::to_string(c) + " has no edge");
    }
  }
  EmbeddedGraph out = g;
  out.outer_face.reset();
  std::vector<int> b(comps), a(comps);
  for (int c = 0; c < comps; ++c) {
    const int e = chosen[c];
    const int x = subdivide(out, e);
    const int y = subdivide(out, out.edge_count() - 1);
    const int xy = out.edge_count() - 2;
    // Triangle x y z inside the face to the left of x -> y.
    const int z = add_vertex(out);
    const int xz = add_edge(out, x, z);
    const int yz = add_edge(out, y, z);
    insert_after(out, x, xy, xz);
    {
      auto& rot = out.rotation[y];
      rot.insert(std::find(rot.begin(), rot.end(), xy), yz);
    }
    a[c] = add_vertex(out);
    b[c] = add_vertex(out);
    const int za = add_edge(out, z, a[c]);
    const int ab = add_edge(out, a[c], b[c]);
    out.rotation[z] = {xz, yz, za};
    out.rotation[a[c]] = {za, ab};
    out.rotation[b[c]] = {ab};
  }
  // Cycle b_1 c_1 b_2 c_2 ... b_n c_n.
  std::vector<int> cycle_in(comps, -1), cycle_out(comps, -1);
  for (int c = 0; c < comps; ++c) {
    const int cv = add_vertex(out);
    const int first = add_edge(out, b[c], cv);
    const int second = add_edge(out, cv, b[(c + 1) % comps]);
    out.rotation[cv] = {first, second};
    cycle_out[c] = first;
    cycle_in[(c + 1) % comps] = second;
  }
  for (int c = 0; c < comps; ++c) {
    auto& rot = out.rotation[b[c]];
    rot = {cycle_in[c], rot.front(), cycle_out[c]};
  }
  require_genus_zero_after(out, "connectify");
  return single_stage("connectify", g, std::move(out), k, k + 3 * comps, comps);
}

Reduction cubify(const EmbeddedGraph& g, int k) {
  validate_graph(g);
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) != 2 && g.degree(v) != 3) {
      fail(ErrorCode::DegreeOutOfRange,
           "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  if (euler_genus(g) != 0) fail(ErrorCode::NotGenusZero, "rotation system is not planar");
  EmbeddedGraph out = g;
  out.outer_face.reset();
  int n = 0;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) != 2) continue;
    ++n;
    const int e1 = out.rotation[v][0];
    const int e2 = out.rotation[v][1];
    const int s2 = v;
    const int s1 = add_vertex(out), s3 = add_vertex(out), s4 = add_vertex(out);
    // e2 now ends at s4 instead of v.
    if (out.edges[e2].first == v) {
      out.edges[e2].first = s4;
    } else {
      out.edges[e2].second = s4;
    }
    const int e12 = add_edge(out, s1, s2);
    const int e23 = add_edge(out, s2, s3);
    const int e34 = add_edge(out, s3, s4);
    const int e14 = add_edge(out, s1, s4);
    const int e13 = add_edge(out, s1, s3);
    out.rotation[s2] = {e23, e12, e1};
    out.rotation[s4] = {e2, e14, e34};
    out.rotation[s1] = {e12, e13, e14};
    out.rotation[s3] = {e34, e13, e23};
  }
  require_genus_zero_after(out, "cubify");
  return single_stage("cubify", g, std::move(out), k, k + 2 * n, n);
}

Reduction three_connectify(const EmbeddedGraph& g, int k) {
  validate_graph(g);
  if (!is_cubic(g)) fail(ErrorCode::NotCubic, "three_connectify needs a cubic graph");
  if (component_count(g) > 1) fail(ErrorCode::Disconnected, "graph is disconnected");
  if (euler_genus(g) != 0) fail(ErrorCode::NotGenusZero, "rotation system is not planar");
  EmbeddedGraph out = g;
  out.outer_face.reset();
  int n = 0;
  const int cap = 4 * g.edge_count() + 4;
  while (true) {
    const std::vector<int> cut = small_edge_cut(out);
    if (cut.empty()) break;
    if (n >= cap) fail(ErrorCode::Not3Connected, "edge cuts persist after repeated gadgets");
    const int e = cut.front();
    if (!insert_ring(out, 2 * e) && !insert_ring(out, 2 * e + 1)) {
      fail(ErrorCode::Not3Connected, "no face admits the ring gadget at edge " + std::to_string(e));
    }
    ++n;
  }
  if (out.n > 0 && vertex_connectivity(out) < 3) {
    fail(ErrorCode::Not3Connected, "result is not 3-connected");
  }
  return single_stage("three_connectify", g, std::move(out), k, k + 10 * n, n);
}

Reduction reduce_3c3pvc(const EmbeddedGraph& g, int k) {
  Reduction all;
  all.graph = g;
  all.k = k;
  for (auto stage : {prune_degree1, connectify, cubify, three_connectify}) {
    Reduction r = stage(all.graph, all.k);
    all.graph = std::move(r.graph);
    all.k = r.k;
    all.trace.push_back(std::move(r.trace.front()));
  }
  return all;
}

}  // namespace pinloop
