#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <string>

#include "pinloop/error.hpp"
#include "pinloop/graphred.hpp"

namespace pinloop {

namespace {

using Bits = boost::dynamic_bitset<>;

void check_edges(const PlainGraph& g) {
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
      fail(ErrorCode::InvalidGraph, "edge endpoint out of range");
    }
  }
}

class EdgeBranching {
 public:
  EdgeBranching(const PlainGraph& g, std::size_t budget)
      : g_(g), budget_(budget), in_cover_(g.n, 0) {}

  int run() {
    best_ = g_.n;
    recurse(0);
    return best_;
  }

 private:
  void recurse(int size) {
    if (++nodes_ > budget_) {
      fail(ErrorCode::ResourceBudgetExceeded,
           "vertex cover search exceeded " + std::to_string(budget_) + " nodes");
    }
    if (size >= best_) return;
    for (auto [u, v] : g_.edges) {
      if (in_cover_[u] || in_cover_[v]) continue;
      for (int w : {u, v}) {
        in_cover_[w] = 1;
        recurse(size + 1);
        in_cover_[w] = 0;
        if (u == v) break;
      }
      return;
    }
    best_ = size;
  }

  const PlainGraph& g_;
  std::size_t budget_;
  std::vector<char> in_cover_;
  int best_ = 0;
  std::size_t nodes_ = 0;
};

// Branch and reduce on an induced subgraph. Vertices beyond the input range
// are created by degree-two folding.
class BranchAndReduce {
 public:
  struct State {
    Bits alive;
    std::vector<Bits> adj;
    int next_id = 0;
  };

  BranchAndReduce(const PlainGraph& g, std::size_t budget) : budget_(budget) {
    capacity_ = 2 * g.n + 2;
    root_.alive.resize(capacity_);
    root_.adj.assign(capacity_, Bits(capacity_));
    for (int v = 0; v < g.n; ++v) root_.alive.set(v);
    for (auto [u, v] : g.edges) {
      if (u == v) {
        forced_loops_.push_back(u);
        continue;
      }
      root_.adj[u].set(v);
      root_.adj[v].set(u);
    }
    root_.next_id = g.n;
  }

  int run() {
    int taken = 0;
    std::sort(forced_loops_.begin(), forced_loops_.end());
    forced_loops_.erase(std::unique(forced_loops_.begin(), forced_loops_.end()),
                        forced_loops_.end());
    for (int v : forced_loops_) {
      take(root_, v);
      ++taken;
    }
    return taken + solve(root_, capacity_);
  }

 private:
  static int degree(const State& s, int v) { return static_cast<int>((s.adj[v] & s.alive).count()); }

  static void drop(State& s, int v) { s.alive.reset(v); }

  static void take(State& s, int v) { s.alive.reset(v); }

  // Applies reductions until none fires; returns the vertices committed.
  int reduce(State& s) const {
    int taken = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto v = s.alive.find_first(); v != Bits::npos; v = s.alive.find_next(v)) {
        const Bits nb = s.adj[v] & s.alive;
        const auto d = nb.count();
        if (d == 0) {
          drop(s, static_cast<int>(v));
          changed = true;
        } else if (d == 1) {
          take(s, static_cast<int>(nb.find_first()));
          drop(s, static_cast<int>(v));
          ++taken;
          changed = true;
        } else if (d == 2) {
          const int a = static_cast<int>(nb.find_first());
          const int b = static_cast<int>(nb.find_next(a));
          drop(s, static_cast<int>(v));
          take(s, a);
          take(s, b);
          if (s.adj[a].test(b)) {
            taken += 2;
          } else {
            // Fold v, a, b into one vertex adjacent to N(a) u N(b).
            const int w = s.next_id++;
            Bits merged = (s.adj[a] | s.adj[b]) & s.alive;
            s.adj[w] = merged;
            for (auto x = merged.find_first(); x != Bits::npos; x = merged.find_next(x)) {
              s.adj[x].set(w);
            }
            s.alive.set(w);
            taken += 1;
          }
          changed = true;
        }
        if (changed) break;
      }
      if (changed) continue;
      // Domination: if N[v] is inside N[u] for a neighbour u, u can be taken.
      for (auto v = s.alive.find_first(); v != Bits::npos && !changed; v = s.alive.find_next(v)) {
        Bits closed_v = s.adj[v] & s.alive;
        closed_v.set(v);
        const Bits nb = s.adj[v] & s.alive;
        for (auto u = nb.find_first(); u != Bits::npos; u = nb.find_next(u)) {
          Bits closed_u = s.adj[u] & s.alive;
          closed_u.set(u);
          if (closed_v.is_subset_of(closed_u)) {
            take(s, static_cast<int>(u));
            ++taken;
            changed = true;
            break;
          }
        }
      }
    }
    return taken;
  }

  // Lower bound from a greedy partition into triangles, edges and singletons.
  static int clique_bound(const State& s) {
    Bits free = s.alive;
    int bound = 0;
    for (auto v = free.find_first(); v != Bits::npos; v = free.find_next(v)) {
      free.reset(v);
      const Bits nb = s.adj[v] & free;
      int partner = -1;
      bool triangle = false;
      for (auto a = nb.find_first(); a != Bits::npos && !triangle; a = nb.find_next(a)) {
        const Bits common = nb & s.adj[a];
        if (common.any()) {
          const auto b = common.find_first();
          free.reset(a);
          free.reset(b);
          bound += 2;
          triangle = true;
        } else if (partner == -1) {
          partner = static_cast<int>(a);
        }
      }
      if (!triangle && partner != -1) {
        free.reset(partner);
        bound += 1;
      }
    }
    return bound;
  }

  std::vector<Bits> components(const State& s) const {
    std::vector<Bits> out;
    Bits left = s.alive;
    while (left.any()) {
      Bits comp(capacity_);
      std::vector<std::size_t> stack{left.find_first()};
      comp.set(stack.back());
      left.reset(stack.back());
      while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        const Bits nb = s.adj[u] & left;
        for (auto w = nb.find_first(); w != Bits::npos; w = nb.find_next(w)) {
          left.reset(w);
          comp.set(w);
          stack.push_back(w);
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  // Exact minimum when it is below `limit`; otherwise some value >= limit.
  int solve(State s, int limit) {
    if (++nodes_ > budget_) {
      fail(ErrorCode::ResourceBudgetExceeded,
           "vertex cover search exceeded " + std::to_string(budget_) + " nodes");
    }
    const int taken = reduce(s);
    if (s.alive.none()) return taken;
    if (taken + clique_bound(s) >= limit) return taken + clique_bound(s);

    auto parts = components(s);
    if (parts.size() > 1) {
      std::sort(parts.begin(), parts.end(),
                [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
      std::vector<int> bounds;
      int rest = 0;
      for (const Bits& p : parts) {
        State sub{p, s.adj, s.next_id};
        bounds.push_back(clique_bound(sub));
        rest += bounds.back();
      }
      int total = taken;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        rest -= bounds[i];
        State sub{parts[i], s.adj, s.next_id};
        total += solve(std::move(sub), limit - total - rest);
        if (total + rest >= limit) return total + rest;
      }
      return total;
    }

    int pick = -1, best_degree = -1;
    for (auto v = s.alive.find_first(); v != Bits::npos; v = s.alive.find_next(v)) {
      const int d = degree(s, static_cast<int>(v));
      if (d > best_degree) {
        best_degree = d;
        pick = static_cast<int>(v);
      }
    }
    int best = limit;
    {
      State with = s;
      take(with, pick);
      best = std::min(best, taken + 1 + solve(std::move(with), best - taken - 1));
    }
    {
      State without = s;
      const Bits nb = s.adj[pick] & s.alive;
      for (auto u = nb.find_first(); u != Bits::npos; u = nb.find_next(u)) take(without, static_cast<int>(u));
      drop(without, pick);
      const int k = static_cast<int>(nb.count());
      best = std::min(best, taken + k + solve(std::move(without), best - taken - k));
    }
    return best;
  }

  std::size_t budget_;
  std::size_t nodes_ = 0;
  int capacity_ = 0;
  State root_;
  std::vector<int> forced_loops_;
};

}  // namespace

int vc_min_bruteforce(const PlainGraph& g, std::size_t node_budget) {
  check_edges(g);
  return EdgeBranching(g, node_budget).run();
}

int vc_min_exact(const PlainGraph& g, std::size_t node_budget) {
  check_edges(g);
  return BranchAndReduce(g, node_budget).run();
}

BipartiteCover bipartite_vc(const PlainGraph& g) {
  const Matching m = max_matching_bipartite(g);
  BipartiteCover out;
  out.cover = koenig_cover(g, m);
  out.size = static_cast<int>(out.cover.size());
  return out;
}

}  // namespace pinloop
