#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "pinloop/gamegrundy.hpp"
#include "pinloop/graphred.hpp"
#include "pinloop/multiloop.hpp"
#include "pinloop/pinsolve.hpp"
#include "pinloop/tristrand.hpp"

namespace pinloop::io {

using nlohmann::json;

// Multiloop JSON:
//   {"crossings": c, "arc_involution": [...], "free_circles": [[id, region], ...],
//    "ambient": "closed" | "plane", "outer_dart": d, "region_labels": {"name": region}}
struct MultiloopFile {
  RawMultiloop raw;
  std::map<std::string, RegionId> region_labels;
};

MultiloopFile multiloop_from_json(const json& j);
json to_json(const MultiloopFile& file);
json to_json(const RawMultiloop& raw);

// Graph JSON: {"n": n, "edges": [[u, v], ...], "rotation": [[edge ids ccw], ...],
// "outer_face": f}
EmbeddedGraph graph_from_json(const json& j);
json to_json(const EmbeddedGraph& g);

json to_json(const TopologyReport& r);
json to_json(const MobidiscFormula& f);
MobidiscFormula formula_from_json(const json& j);
json to_json(const BigonWitness& w);
json to_json(const PinningReport& r);
json to_json(const BigonGraph& g);
json to_json(const GrundyReport& r);
json to_json(const ReductionTrace& t);
json to_json(const HasseSlice& s);

// Positive CNF: "p pcnf <vars> <clauses>", variable i stands for the i-th
// region of the universe (comment lines record the mapping).
std::string to_dimacs(const MobidiscFormula& f);
MobidiscFormula from_dimacs(const std::string& text);

std::string bigon_graph_dot(const BigonGraph& g);
std::string hasse_dot(const HasseSlice& s);

std::string read_file(const std::string& path);
json read_json_file(const std::string& path);

}  // namespace pinloop::io
