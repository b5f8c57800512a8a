#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "support/arrangement.hpp"

namespace pinloop::testing {

namespace {

std::vector<std::uint32_t> clause_masks(const MobidiscFormula& f) {
  std::vector<std::uint32_t> masks;
  for (const auto& clause : f.clauses) {
    std::uint32_t mask = 0;
    for (RegionId r : clause) {
      const auto it = std::lower_bound(f.variables.begin(), f.variables.end(), r);
      mask |= 1u << (it - f.variables.begin());
    }
    masks.push_back(mask);
  }
  return masks;
}

bool hits_all(const std::vector<std::uint32_t>& masks, std::uint32_t set) {
  for (auto m : masks) {
    if (!(m & set)) return false;
  }
  return true;
}

}  // namespace

bool naive_hits(const MobidiscFormula& f, const RegionSet& pins) {
  for (const auto& clause : f.clauses) {
    bool hit = false;
    for (RegionId r : clause) hit = hit || std::binary_search(pins.begin(), pins.end(), r);
    if (!hit) return false;
  }
  return true;
}

std::vector<RegionSet> naive_minimal_sets(const MobidiscFormula& f) {
  const int n = static_cast<int>(f.variables.size());
  const auto masks = clause_masks(f);
  std::vector<RegionSet> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (!hits_all(masks, s)) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if ((s >> i & 1) && hits_all(masks, s & ~(1u << i))) minimal = false;
    }
    if (!minimal) continue;
    RegionSet set;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) set.push_back(f.variables[i]);
    }
    out.push_back(set);
  }
  std::sort(out.begin(), out.end(), [](const RegionSet& a, const RegionSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

int naive_pinning_number(const MobidiscFormula& f) {
  const int n = static_cast<int>(f.variables.size());
  const auto masks = clause_masks(f);
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) < best && hits_all(masks, s)) best = std::popcount(s);
  }
  return best;
}

bool is_vertex_cover(const PlainGraph& g, const std::vector<int>& cover) {
  std::vector<char> in(g.n, 0);
  for (int v : cover) in[v] = 1;
  for (auto [a, b] : g.edges) {
    if (!in[a] && !in[b]) return false;
  }
  return true;
}

int naive_vertex_cover(const PlainGraph& g) {
  int best = g.n;
  for (std::uint32_t s = 0; s < (1u << g.n); ++s) {
    if (std::popcount(s) >= best) continue;
    bool ok = true;
    for (auto [a, b] : g.edges) ok = ok && ((s >> a | s >> b) & 1);
    if (ok) best = std::popcount(s);
  }
  return best;
}

std::optional<Multiloop> random_three_strand(std::mt19937_64& rng, int max_crossings, bool closed) {
  std::uniform_real_distribution<double> offset(-1.2, 1.2);
  std::uniform_int_distribution<int> corners(3, 7);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Polygon> polys;
    for (int i = 0; i < 3; ++i) polys.push_back(random_star(rng, offset(rng), offset(rng), 2.0, corners(rng)));
    auto arr = arrange(polys);
    if (!arr || arr->raw.crossings == 0 || arr->raw.crossings > max_crossings) continue;
    if (!arr->raw.free_circles.empty()) continue;
    if (closed) {
      arr->raw.ambient = Ambient::closed;
      arr->raw.outer_dart.reset();
    }
    Multiloop m = Multiloop::validate(arr->raw);
    if (!m.is_connected() || m.crossing_strand_count() != 3) continue;
    return m;
  }
  return std::nullopt;
}

MobidiscFormula random_formula(std::mt19937_64& rng, int vars, int clauses, int max_size) {
  MobidiscFormula f;
  for (int v = 1; v <= vars; ++v) f.variables.push_back(v);
  std::uniform_int_distribution<int> size(1, max_size);
  for (int c = 0; c < clauses; ++c) {
    std::vector<RegionId> pool = f.variables;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<int>(size(rng), vars));
    std::sort(pool.begin(), pool.end());
    f.clauses.push_back(pool);
  }
  return f;
}

PlainGraph random_bipartite(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> count(1, max_vertices);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  PlainGraph g;
  g.n = count(rng);
  std::uniform_int_distribution<int> split(0, g.n);
  const int left = split(rng);
  const double p = coin(rng) * 0.4;
  for (int a = 0; a < left; ++a) {
    for (int b = left; b < g.n; ++b) {
      if (coin(rng) < p) g.edges.emplace_back(a, b);
    }
  }
  // Shuffle labels so the sides are not contiguous.
  std::vector<int> perm(g.n);
  for (int i = 0; i < g.n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : g.edges) {
    a = perm[a];
    b = perm[b];
  }
  return g;
}

PlainGraph random_graph(std::mt19937_64& rng, int vertices, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  PlainGraph g;
  g.n = vertices;
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) {
      if (coin(rng) < density) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

}  // namespace pinloop::testing
