#include "pinloop/tristrand.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <string>

#include "pinloop/error.hpp"

namespace pinloop {

namespace {

std::vector<std::vector<int>> adjacency(const PlainGraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
      fail(ErrorCode::InvalidGraph, "edge endpoint out of range");
    }
    adj[u].push_back(v);
    if (u != v) adj[v].push_back(u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

std::vector<int> path_to_root(int v, const std::vector<int>& parent) {
  std::vector<int> path{v};
  while (parent[v] != v) {
    v = parent[v];
    path.push_back(v);
  }
  return path;
}

std::string describe_cycle(const std::vector<int>& cycle) {
  std::string s;
  for (int v : cycle) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

}  // namespace

BigonGraph build_bigon_graph(const Multiloop& m) {
  if (m.strand_count() > 3) {
    fail(ErrorCode::TooManyStrands,
         "bigon graph needs at most 3 strands, got " + std::to_string(m.strand_count()));
  }
  if (!is_simple(m)) fail(ErrorCode::NotSimple, "a strand crosses itself");

  const std::vector<BigonWitness> witnesses = enumerate_embedded_bigons(m);
  MobidiscFormula raw;
  raw.variables = pinnable_regions(m);
  for (const BigonWitness& w : witnesses) raw.clauses.push_back(w.disc_faces);
  const MobidiscFormula pruned = prune(raw);

  BigonGraph g;
  for (const auto& clause : pruned.clauses) {
    if (clause.size() == 1) {
      g.forced_regions.push_back(clause.front());
      continue;
    }
    const BigonWitness* chosen = nullptr;
    for (const BigonWitness& w : witnesses) {
      if (w.disc_faces != clause) continue;
      if (w.corner_x >= 0 && w.corner_y >= 0 && w.corner_x != w.corner_y) {
        chosen = &w;
        break;
      }
    }
    if (chosen == nullptr) {
      fail(ErrorCode::SelfLoopDetected,
           "innermost bigon over " + std::to_string(clause.size()) +
               " regions lacks two distinct triangular corners");
    }
    const RegionId a = std::min(chosen->corner_x, chosen->corner_y);
    const RegionId b = std::max(chosen->corner_x, chosen->corner_y);
    g.edges.emplace_back(a, b);
    g.vertices.push_back(a);
    g.vertices.push_back(b);
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  std::sort(g.forced_regions.begin(), g.forced_regions.end());
  g.forced_regional_count = static_cast<int>(g.forced_regions.size());
  return g;
}

PlainGraph to_plain(const BigonGraph& graph) {
  PlainGraph g;
  g.n = static_cast<int>(graph.vertices.size());
  auto index = [&](RegionId r) {
    return static_cast<int>(std::lower_bound(graph.vertices.begin(), graph.vertices.end(), r) -
                            graph.vertices.begin());
  };
  for (auto [a, b] : graph.edges) g.edges.emplace_back(index(a), index(b));
  return g;
}

TwoColoring two_color(const PlainGraph& g) {
  const auto adj = adjacency(g);
  for (auto [u, v] : g.edges) {
    if (u == v) return {{}, {u}};
  }
  std::vector<int> side(g.n, -1), parent(g.n, -1);
  for (int root = 0; root < g.n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    parent[root] = root;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adj[u]) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          parent[v] = u;
          queue.push(v);
        } else if (side[v] == side[u]) {
          // Join the two tree paths at their lowest common ancestor.
          auto pu = path_to_root(u, parent);
          auto pv = path_to_root(v, parent);
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          std::vector<int> cycle = pu;
          for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
          return {{}, cycle};
        }
      }
    }
  }
  return {side, {}};
}

Matching max_matching_bipartite(const PlainGraph& g) {
  const TwoColoring coloring = two_color(g);
  if (!coloring.bipartite()) {
    fail(ErrorCode::NotBipartite, "odd cycle " + describe_cycle(coloring.odd_cycle));
  }
  const auto adj = adjacency(g);
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> left;
  for (int v = 0; v < g.n; ++v) {
    if (coloring.side[v] == 0) left.push_back(v);
  }
  Matching m;
  m.mate.assign(g.n, -1);
  std::vector<int> dist(g.n, inf);

  auto bfs = [&]() {
    std::queue<int> queue;
    bool found = false;
    for (int u : left) {
      if (m.mate[u] == -1) {
        dist[u] = 0;
        queue.push(u);
      } else {
        dist[u] = inf;
      }
    }
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adj[u]) {
        const int w = m.mate[v];
        if (w == -1) {
          found = true;
        } else if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      const int w = m.mate[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && self(self, w))) {
        m.mate[u] = v;
        m.mate[v] = u;
        return true;
      }
    }
    dist[u] = inf;
    return false;
  };

  while (bfs()) {
    for (int u : left) {
      if (m.mate[u] == -1 && dfs(dfs, u)) ++m.size;
    }
  }
  return m;
}

std::vector<int> koenig_cover(const PlainGraph& g, const Matching& matching) {
  const TwoColoring coloring = two_color(g);
  if (!coloring.bipartite()) {
    fail(ErrorCode::NotBipartite, "odd cycle " + describe_cycle(coloring.odd_cycle));
  }
  const auto adj = adjacency(g);
  const auto& mate = matching.mate;
  if (static_cast<int>(mate.size()) != g.n) {
    fail(ErrorCode::InvalidGraph, "matching does not cover the vertex range");
  }
  for (int v = 0; v < g.n; ++v) {
    if (mate[v] == -1) continue;
    if (mate[v] < 0 || mate[v] >= g.n || mate[mate[v]] != v ||
        !std::binary_search(adj[v].begin(), adj[v].end(), mate[v])) {
      fail(ErrorCode::InvalidGraph, "vertex " + std::to_string(v) + " has an invalid mate");
    }
  }

  // Alternating reachability from free left vertices.
  std::vector<char> reached(g.n, 0);
  std::deque<int> queue;
  for (int v = 0; v < g.n; ++v) {
    if (coloring.side[v] == 0 && mate[v] == -1) {
      reached[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (reached[v] || mate[u] == v) continue;
      reached[v] = 1;
      if (mate[v] == -1) {
        fail(ErrorCode::MatchingNotMaximum,
             "augmenting path ends at vertex " + std::to_string(v));
      }
      if (!reached[mate[v]]) {
        reached[mate[v]] = 1;
        queue.push_back(mate[v]);
      }
    }
  }
  std::vector<int> cover;
  for (int v = 0; v < g.n; ++v) {
    const bool left = coloring.side[v] == 0;
    if ((left && !reached[v]) || (!left && reached[v])) {
      if (!adj[v].empty()) cover.push_back(v);
    }
  }
  return cover;
}

ThreeStrandPinning pinning_number_3strand(const Multiloop& m) {
  ThreeStrandPinning result;
  result.graph = build_bigon_graph(m);
  const PlainGraph plain = to_plain(result.graph);
  const TwoColoring coloring = two_color(plain);
  if (!coloring.bipartite()) {
    std::vector<int> regions;
    for (int v : coloring.odd_cycle) regions.push_back(result.graph.vertices[v]);
    fail(ErrorCode::NotBipartite, "bigon graph has odd cycle through regions " +
                                      describe_cycle(regions));
  }
  const Matching matching = max_matching_bipartite(plain);
  const std::vector<int> cover = koenig_cover(plain, matching);
  result.pins = result.graph.forced_regions;
  for (int v : cover) result.pins.push_back(result.graph.vertices[v]);
  std::sort(result.pins.begin(), result.pins.end());
  result.pins.erase(std::unique(result.pins.begin(), result.pins.end()), result.pins.end());
  result.value = static_cast<int>(result.pins.size());
  return result;
}

}  // namespace pinloop
