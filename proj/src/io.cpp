#include "pinloop/io.hpp"

#include <fstream>
#include <sstream>

#include "pinloop/error.hpp"

namespace pinloop::io {

namespace {

template <typename Fn>
auto parsing(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

json region_sets(const std::vector<RegionSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

}  // namespace

MultiloopFile multiloop_from_json(const json& j) {
  return parsing("multiloop", [&] {
    MultiloopFile file;
    RawMultiloop& raw = file.raw;
    raw.crossings = j.at("crossings").get<int>();
    raw.arc_involution = j.at("arc_involution").get<std::vector<int>>();
    if (j.contains("free_circles")) {
      for (const auto& fc : j.at("free_circles")) {
        raw.free_circles.push_back({fc.at(0).get<int>(), fc.at(1).get<int>()});
      }
    }
    const std::string ambient = j.value("ambient", std::string("closed"));
    if (ambient == "plane") {
      raw.ambient = Ambient::plane;
    } else if (ambient != "closed") {
      fail(ErrorCode::ParseError, "ambient must be \"closed\" or \"plane\"");
    }
    if (j.contains("outer_dart")) raw.outer_dart = j.at("outer_dart").get<int>();
    if (j.contains("region_labels")) {
      file.region_labels = j.at("region_labels").get<std::map<std::string, RegionId>>();
    }
    return file;
  });
}

json to_json(const RawMultiloop& raw) {
  json j;
  j["crossings"] = raw.crossings;
  j["arc_involution"] = raw.arc_involution;
  json circles = json::array();
  for (const FreeCircle& fc : raw.free_circles) circles.push_back({fc.circle_id, fc.host});
  j["free_circles"] = circles;
  j["ambient"] = raw.ambient == Ambient::plane ? "plane" : "closed";
  if (raw.outer_dart) j["outer_dart"] = *raw.outer_dart;
  return j;
}

json to_json(const MultiloopFile& file) {
  json j = to_json(file.raw);
  if (!file.region_labels.empty()) j["region_labels"] = file.region_labels;
  return j;
}

EmbeddedGraph graph_from_json(const json& j) {
  EmbeddedGraph g = parsing("graph", [&] {
    EmbeddedGraph g;
    g.n = j.at("n").get<int>();
    g.edges = j.at("edges").get<std::vector<std::pair<int, int>>>();
    if (!j.contains("rotation")) {
      fail(ErrorCode::InvalidGraph, "graph needs a rotation system");
    }
    g.rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
    if (j.contains("outer_face") && !j.at("outer_face").is_null()) {
      g.outer_face = j.at("outer_face").get<int>();
    }
    return g;
  });
  validate_graph(g);
  return g;
}

json to_json(const EmbeddedGraph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = g.edges;
  j["rotation"] = g.rotation;
  j["outer_face"] = g.outer_face ? json(*g.outer_face) : json(nullptr);
  return j;
}

json to_json(const TopologyReport& r) {
  return {{"strands", r.strands},
          {"regions", r.regions},
          {"genus", r.genus},
          {"crossing_count", r.crossing_count},
          {"components", r.components},
          {"component_genus", r.component_genus}};
}

json to_json(const MobidiscFormula& f) {
  return {{"variables", f.variables}, {"clauses", f.clauses}};
}

MobidiscFormula formula_from_json(const json& j) {
  return parsing("formula", [&] {
    MobidiscFormula f;
    f.variables = j.at("variables").get<std::vector<RegionId>>();
    f.clauses = j.at("clauses").get<std::vector<std::vector<RegionId>>>();
    return f;
  });
}

json to_json(const BigonWitness& w) {
  return {{"strands", {w.strand_i, w.strand_j}},
          {"crossings", {w.x, w.y}},
          {"arc_i", w.arc_i},
          {"arc_j", w.arc_j},
          {"disc_faces", w.disc_faces},
          {"corners", {w.corner_x, w.corner_y}}};
}

json to_json(const PinningReport& r) {
  json counts = json::object();
  for (auto [size, count] : r.counts_by_size) counts[std::to_string(size)] = count;
  return {{"pinning_number", r.pinning_number},
          {"minimal_sets", region_sets(r.minimal_sets)},
          {"counts_by_size", counts},
          {"optimal_count", r.optimal_count}};
}

json to_json(const BigonGraph& g) {
  return {{"vertices", g.vertices},
          {"edges", g.edges},
          {"forced_regional_count", g.forced_regional_count},
          {"forced_regions", g.forced_regions}};
}

json to_json(const GrundyReport& r) {
  return {{"grundy", r.grundy},
          {"winner", r.first_player_wins ? "first" : "second"},
          {"optimal_move", r.optimal_move ? json(*r.optimal_move) : json(nullptr)}};
}

json to_json(const ReductionTrace& t) {
  return {{"stage", t.stage},
          {"n", t.applications},
          {"k_before", t.k_before},
          {"k_after", t.k_after},
          {"vertices_before", t.before.n},
          {"vertices_after", t.after.n},
          {"before", to_json(t.before)},
          {"after", to_json(t.after)}};
}

json to_json(const HasseSlice& s) {
  return {{"nodes", region_sets(s.nodes)}, {"edges", s.edges}};
}

std::string to_dimacs(const MobidiscFormula& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.variables.size(); ++i) {
    out << "c var " << i + 1 << " region " << f.variables[i] << "\n";
  }
  out << "p pcnf " << f.variables.size() << " " << f.clauses.size() << "\n";
  for (const auto& clause : f.clauses) {
    for (RegionId r : clause) {
      auto it = std::lower_bound(f.variables.begin(), f.variables.end(), r);
      if (it == f.variables.end() || *it != r) {
        fail(ErrorCode::UnknownRegionId, "clause names region " + std::to_string(r));
      }
      out << (it - f.variables.begin()) + 1 << " ";
    }
    out << "0\n";
  }
  return out.str();
}

MobidiscFormula from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<int, RegionId> region_of_var;
  int vars = -1, clauses = -1;
  MobidiscFormula f;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "c") {
      std::string var_word, region_word;
      int var = 0, region = 0;
      if (ls >> var_word >> var >> region_word >> region && var_word == "var" &&
          region_word == "region") {
        region_of_var[var] = region;
      }
      continue;
    }
    if (head == "p") {
      std::string kind;
      if (!(ls >> kind >> vars >> clauses) || kind != "pcnf" || vars < 0 || clauses < 0) {
        fail(ErrorCode::ParseError, "bad header: " + line);
      }
      continue;
    }
    if (vars < 0) fail(ErrorCode::ParseError, "clause before the p pcnf header");
    std::istringstream cs(line);
    int lit = 0;
    while (cs >> lit) {
      if (lit == 0) {
        if (pending.empty()) fail(ErrorCode::ParseError, "empty clause");
        std::vector<RegionId> clause;
        for (int v : pending) {
          clause.push_back(region_of_var.count(v) ? region_of_var[v] : v);
        }
        std::sort(clause.begin(), clause.end());
        f.clauses.push_back(std::move(clause));
        pending.clear();
      } else if (lit < 0 || lit > vars) {
        fail(ErrorCode::ParseError, "literal " + std::to_string(lit) + " is not a positive variable");
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (vars < 0) fail(ErrorCode::ParseError, "missing p pcnf header");
  if (!pending.empty()) fail(ErrorCode::ParseError, "last clause is not 0-terminated");
  if (static_cast<int>(f.clauses.size()) != clauses) {
    fail(ErrorCode::ParseError, "header announces " + std::to_string(clauses) + " clauses");
  }
  for (int v = 1; v <= vars; ++v) {
    f.variables.push_back(region_of_var.count(v) ? region_of_var[v] : v);
  }
  std::sort(f.variables.begin(), f.variables.end());
  return f;
}

std::string bigon_graph_dot(const BigonGraph& g) {
  std::ostringstream out;
  out << "graph bigons {\n";
  for (RegionId r : g.forced_regions) {
    out << "  r" << r << " [label=\"" << r << "\", shape=box, forced=true];\n";
  }
  for (RegionId r : g.vertices) out << "  r" << r << " [label=\"" << r << "\"];\n";
  for (auto [a, b] : g.edges) out << "  r" << a << " -- r" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string hasse_dot(const HasseSlice& s) {
  std::ostringstream out;
  out << "digraph ideal {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"{";
    for (std::size_t k = 0; k < s.nodes[i].size(); ++k) out << (k ? "," : "") << s.nodes[i][k];
    out << "}\"];\n";
  }
  for (auto [a, b] : s.edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json_file(const std::string& path) {
  const std::string text = read_file(path);
  return parsing(path.c_str(), [&] { return json::parse(text); });
}

}  // namespace pinloop::io
