#pragma once

#include <optional>
#include <random>
#include <vector>

#include "pinloop/mobidisc.hpp"
#include "pinloop/pinsolve.hpp"
#include "pinloop/tristrand.hpp"

namespace pinloop::testing {

// Subset enumeration over the variable universe; only for small universes.
std::vector<RegionSet> naive_minimal_sets(const MobidiscFormula& f);
int naive_pinning_number(const MobidiscFormula& f);
bool naive_hits(const MobidiscFormula& f, const RegionSet& pins);

int naive_vertex_cover(const PlainGraph& g);
bool is_vertex_cover(const PlainGraph& g, const std::vector<int>& cover);

// Three star polygons that all cross each other, with at most max_crossings
// double points and a connected crossing map. Plane ambient unless closed.
std::optional<Multiloop> random_three_strand(std::mt19937_64& rng, int max_crossings, bool closed);

// Random positive CNF with variables 1..vars (not pruned).
MobidiscFormula random_formula(std::mt19937_64& rng, int vars, int clauses, int max_size);

PlainGraph random_bipartite(std::mt19937_64& rng, int max_vertices);
PlainGraph random_graph(std::mt19937_64& rng, int vertices, double density);

}  // namespace pinloop::testing
