#include "pinloop/pinsolve.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <limits>
#include <set>
#include <string>

#include "pinloop/error.hpp"

namespace pinloop {

namespace {

using Bits = boost::dynamic_bitset<>;

void budget_exceeded(const char* what, std::size_t cap) {
  fail(ErrorCode::ResourceBudgetExceeded,
       std::string(what) + " exceeded the budget of " + std::to_string(cap));
}

bool size_then_lex(const RegionSet& a, const RegionSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

// Dense view of a formula: variables are indexed by position in f.variables.
struct Incidence {
  const MobidiscFormula& f;
  int vars;
  int clauses;
  std::vector<Bits> clause_vars;
  std::vector<Bits> var_clauses;

  explicit Incidence(const MobidiscFormula& formula)
      : f(formula),
        vars(static_cast<int>(formula.variables.size())),
        clauses(static_cast<int>(formula.clauses.size())) {
    if (!std::is_sorted(f.variables.begin(), f.variables.end()) ||
        std::adjacent_find(f.variables.begin(), f.variables.end()) != f.variables.end()) {
      fail(ErrorCode::ParseError, "formula variables must be sorted and distinct");
    }
    clause_vars.assign(clauses, Bits(vars));
    var_clauses.assign(vars, Bits(clauses));
    for (int c = 0; c < clauses; ++c) {
      if (f.clauses[c].empty()) fail(ErrorCode::ParseError, "formula has an empty clause");
      for (RegionId r : f.clauses[c]) {
        const int v = index_of(r);
        clause_vars[c].set(v);
        var_clauses[v].set(c);
      }
    }
  }

  int index_of(RegionId r) const {
    auto it = std::lower_bound(f.variables.begin(), f.variables.end(), r);
    if (it == f.variables.end() || *it != r) {
      fail(ErrorCode::UnknownRegionId, "region " + std::to_string(r) + " is not a variable");
    }
    return static_cast<int>(it - f.variables.begin());
  }

  RegionSet to_regions(const std::vector<int>& indices) const {
    RegionSet out;
    for (int v : indices) out.push_back(f.variables[v]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

template <typename Fn>
void for_each_bit(const Bits& b, Fn&& fn) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) fn(static_cast<int>(i));
}

class Mmcs {
 public:
  Mmcs(const Incidence& inc, const Budget& budget)
      : inc_(inc), budget_(budget), crit_(inc.vars, Bits(inc.clauses)), uncov_(inc.clauses) {
    uncov_.set();
  }

  std::vector<RegionSet> run() {
    Bits cand(inc_.vars);
    cand.set();
    recurse(cand);
    std::sort(out_.begin(), out_.end(), size_then_lex);
    return std::move(out_);
  }

 private:
  void recurse(Bits cand) {
    if (++nodes_ > budget_.max_nodes) budget_exceeded("transversal search nodes", budget_.max_nodes);
    if (uncov_.none()) {
      if (out_.size() >= budget_.max_sets) budget_exceeded("minimal pinning sets", budget_.max_sets);
      out_.push_back(inc_.to_regions(chosen_));
      return;
    }
    int pick = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for_each_bit(uncov_, [&](int c) {
      const std::size_t k = (inc_.clause_vars[c] & cand).count();
      if (k < fewest) {
        fewest = k;
        pick = c;
      }
    });
    const Bits branch = inc_.clause_vars[pick] & cand;
    cand -= branch;
    for_each_bit(branch, [&](int v) {
      const Bits saved_uncov = uncov_;
      std::vector<Bits> saved_crit;
      saved_crit.reserve(chosen_.size());
      bool minimal = true;
      for (int u : chosen_) {
        saved_crit.push_back(crit_[u]);
        crit_[u] -= inc_.var_clauses[v];
        if (crit_[u].none()) minimal = false;
      }
      crit_[v] = inc_.var_clauses[v] & uncov_;
      uncov_ -= inc_.var_clauses[v];
      if (minimal) {
        chosen_.push_back(v);
        recurse(cand);
        chosen_.pop_back();
      }
      uncov_ = saved_uncov;
      for (std::size_t k = 0; k < chosen_.size(); ++k) crit_[chosen_[k]] = saved_crit[k];
      crit_[v].reset();
      cand.set(v);
    });
  }

  const Incidence& inc_;
  Budget budget_;
  std::vector<Bits> crit_;
  Bits uncov_;
  std::vector<int> chosen_;
  std::vector<RegionSet> out_;
  std::size_t nodes_ = 0;
};

class BranchAndBound {
 public:
  BranchAndBound(const Incidence& inc, const Budget& budget) : inc_(inc), budget_(budget) {}

  OptimalPinning run() {
    Bits uncov(inc_.clauses);
    uncov.set();
    Bits allowed(inc_.vars);
    allowed.set();
    greedy_bound(uncov);
    std::vector<int> chosen;
    recurse(uncov, allowed, chosen);
    return {best_size_, inc_.to_regions(best_)};
  }

 private:
  // Repeatedly pins the lowest variable hitting the most open clauses.
  void greedy_bound(Bits uncov) {
    std::vector<int> picks;
    while (uncov.any()) {
      int best_var = -1;
      std::size_t best_hits = 0;
      for (int v = 0; v < inc_.vars; ++v) {
        const std::size_t hits = (inc_.var_clauses[v] & uncov).count();
        if (hits > best_hits) {
          best_hits = hits;
          best_var = v;
        }
      }
      picks.push_back(best_var);
      uncov -= inc_.var_clauses[best_var];
    }
    best_ = picks;
    best_size_ = static_cast<int>(picks.size());
  }

  int packing_bound(const Bits& uncov, const Bits& allowed) const {
    std::vector<std::pair<std::size_t, int>> order;
    for_each_bit(uncov, [&](int c) {
      order.emplace_back((inc_.clause_vars[c] & allowed).count(), c);
    });
    std::sort(order.begin(), order.end());
    Bits used(inc_.vars);
    int packed = 0;
    for (auto [size, c] : order) {
      const Bits vars = inc_.clause_vars[c] & allowed;
      if (!vars.intersects(used)) {
        used |= vars;
        ++packed;
      }
    }
    return packed;
  }

  void recurse(const Bits& uncov, Bits allowed, std::vector<int>& chosen) {
    if (++nodes_ > budget_.max_nodes) budget_exceeded("branch-and-bound nodes", budget_.max_nodes);
    const int depth = static_cast<int>(chosen.size());
    if (uncov.none()) {
      if (depth < best_size_) {
        best_size_ = depth;
        best_ = chosen;
      }
      return;
    }
    if (depth + packing_bound(uncov, allowed) >= best_size_) return;
    int pick = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for_each_bit(uncov, [&](int c) {
      const std::size_t k = (inc_.clause_vars[c] & allowed).count();
      if (k < fewest) {
        fewest = k;
        pick = c;
      }
    });
    if (fewest == 0) return;
    const Bits branch = inc_.clause_vars[pick] & allowed;
    for_each_bit(branch, [&](int v) {
      chosen.push_back(v);
      recurse(uncov - inc_.var_clauses[v], allowed, chosen);
      chosen.pop_back();
      allowed.reset(v);
    });
  }

  const Incidence& inc_;
  Budget budget_;
  std::vector<int> best_;
  int best_size_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace

bool verify_pinning(const MobidiscFormula& f, const RegionSet& pins) {
  for (RegionId r : pins) {
    if (!std::binary_search(f.variables.begin(), f.variables.end(), r)) {
      fail(ErrorCode::UnknownRegionId, "region " + std::to_string(r) + " is not a variable");
    }
  }
  std::set<RegionId> p(pins.begin(), pins.end());
  for (const auto& clause : f.clauses) {
    bool hit = false;
    for (RegionId r : clause) {
      if (p.count(r)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<RegionSet> minimal_pinning_sets(const MobidiscFormula& f, const Budget& budget) {
  Incidence inc(f);
  return Mmcs(inc, budget).run();
}

std::vector<RegionSet> minimal_pinning_sets_berge(const MobidiscFormula& f, const Budget& budget) {
  Incidence inc(f);
  std::vector<Bits> current{Bits(inc.vars)};
  for (int c = 0; c < inc.clauses; ++c) {
    std::vector<Bits> next;
    for (const Bits& s : current) {
      if (s.intersects(inc.clause_vars[c])) {
        next.push_back(s);
        continue;
      }
      for_each_bit(inc.clause_vars[c], [&](int v) {
        Bits t = s;
        t.set(v);
        next.push_back(std::move(t));
      });
    }
    // Drop non-minimal products.
    std::sort(next.begin(), next.end(),
              [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
    std::vector<Bits> minimal;
    for (const Bits& s : next) {
      bool dominated = false;
      for (const Bits& t : minimal) {
        if (t.is_subset_of(s)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) minimal.push_back(s);
      if (minimal.size() > budget.max_sets) budget_exceeded("Berge products", budget.max_sets);
    }
    current = std::move(minimal);
  }
  std::vector<RegionSet> out;
  for (const Bits& s : current) {
    std::vector<int> idx;
    for_each_bit(s, [&](int v) { idx.push_back(v); });
    out.push_back(inc.to_regions(idx));
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

OptimalPinning optimal_pinning(const MobidiscFormula& f, const Budget& budget) {
  Incidence inc(f);
  return BranchAndBound(inc, budget).run();
}

int pinning_number(const MobidiscFormula& f, const Budget& budget) {
  return optimal_pinning(f, budget).value;
}

bool decide(const MobidiscFormula& f, int k, const Budget& budget) {
  if (k < 0) return false;
  if (f.clauses.empty()) return true;
  return pinning_number(f, budget) <= k;
}

PinningReport pinning_report(const MobidiscFormula& f, const Budget& budget) {
  PinningReport report;
  report.minimal_sets = minimal_pinning_sets(f, budget);
  report.pinning_number = 0;
  if (!report.minimal_sets.empty()) {
    report.pinning_number = static_cast<int>(report.minimal_sets.front().size());
  }
  for (const RegionSet& s : report.minimal_sets) {
    ++report.counts_by_size[static_cast<int>(s.size())];
    if (static_cast<int>(s.size()) == report.pinning_number) ++report.optimal_count;
  }
  return report;
}

HasseSlice ideal_hasse_slice(const std::vector<RegionSet>& minimal_sets, int depth,
                             const Budget& budget) {
  std::set<RegionSet> unions;
  std::size_t visited = 0;
  // Depth-first over combinations of at most `depth` distinct minimal sets.
  std::vector<std::size_t> stack;
  auto walk = [&](auto&& self, std::size_t start, const RegionSet& acc, int used) -> void {
    for (std::size_t k = start; k < minimal_sets.size(); ++k) {
      if (++visited > budget.max_nodes) budget_exceeded("Hasse slice combinations", budget.max_nodes);
      RegionSet merged;
      std::set_union(acc.begin(), acc.end(), minimal_sets[k].begin(), minimal_sets[k].end(),
                     std::back_inserter(merged));
      unions.insert(merged);
      if (unions.size() > budget.max_sets) budget_exceeded("Hasse slice nodes", budget.max_sets);
      if (used + 1 < depth) self(self, k + 1, merged, used + 1);
    }
  };
  if (depth >= 1) walk(walk, 0, RegionSet{}, 0);

  HasseSlice slice;
  slice.nodes.assign(unions.begin(), unions.end());
  std::sort(slice.nodes.begin(), slice.nodes.end(), size_then_lex);
  const int n = static_cast<int>(slice.nodes.size());
  auto strict_subset = [&](int a, int b) {
    return slice.nodes[a].size() < slice.nodes[b].size() &&
           std::includes(slice.nodes[b].begin(), slice.nodes[b].end(), slice.nodes[a].begin(),
                         slice.nodes[a].end());
  };
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (!strict_subset(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < n && covered; ++c) {
        if (strict_subset(a, c) && strict_subset(c, b)) covered = false;
      }
      if (covered) slice.edges.emplace_back(a, b);
    }
  }
  std::sort(slice.edges.begin(), slice.edges.end());
  return slice;
}

}  // namespace pinloop
