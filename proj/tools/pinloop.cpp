#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pinloop/error.hpp"
#include "pinloop/gamegrundy.hpp"
#include "pinloop/graphred.hpp"
#include "pinloop/io.hpp"
#include "pinloop/mobidisc.hpp"
#include "pinloop/multiloop.hpp"
#include "pinloop/pinsolve.hpp"
#include "pinloop/tristrand.hpp"

namespace fs = std::filesystem;
using namespace pinloop;
using io::json;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  return io::read_file(path);
}

json parse_json(const std::string& path) {
  const std::string text = slurp(path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

// A formula file carries "clauses"; anything else is read as a multiloop.
MobidiscFormula formula_of(const json& j) {
  if (j.contains("clauses")) return prune(io::formula_from_json(j));
  return mobidisc_formula(Multiloop::validate(io::multiloop_from_json(j).raw));
}

Multiloop multiloop_of(const json& j) {
  return Multiloop::validate(io::multiloop_from_json(j).raw);
}

Budget budget_from(std::optional<long long> flag) {
  Budget b;
  long long cap = 0;
  if (flag) {
    cap = *flag;
  } else if (const char* env = std::getenv("PINLOOP_BUDGET")) {
    try {
      cap = std::stoll(env);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "PINLOOP_BUDGET is not an integer");
    }
  }
  if (cap > 0) b.max_sets = b.max_nodes = static_cast<std::size_t>(cap);
  return b;
}

// Region ids mapped back to their labels when the file has them.
json labelled(const RegionSet& pins, const json& source) {
  if (!source.contains("region_labels")) return pins;
  std::map<RegionId, std::string> name;
  for (auto& [label, region] : source["region_labels"].items()) name[region.get<int>()] = label;
  json out = json::array();
  for (RegionId r : pins) out.push_back(name.count(r) ? json(name[r]) : json(r));
  return out;
}

json catalog_entry(const std::string& id, const json& j, const Budget& budget) {
  const Multiloop m = multiloop_of(j);
  const TopologyReport topo = topology_report(m);
  json entry{{"id", id}, {"strands", topo.strands}, {"crossings", topo.crossing_count},
             {"regions", topo.regions}, {"genus", topo.genus}};
  const MobidiscFormula f = mobidisc_formula(m);
  const PinningReport report = pinning_report(f, budget);
  entry["clauses"] = f.clauses.size();
  entry["pinning_number"] = report.pinning_number;
  entry["optimal_count"] = report.optimal_count;
  entry["minimal_count"] = report.minimal_sets.size();
  json counts = json::object();
  for (auto [size, count] : report.counts_by_size) counts[std::to_string(size)] = count;
  entry["counts_by_size"] = counts;
  if (m.strand_count() <= 3) entry["three_strand"] = pinning_number_3strand(m).value;
  return entry;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pinning numbers of multiloops on surfaces"};
  app.require_subcommand(1);
  std::optional<long long> budget_flag;
  app.add_option("--budget", budget_flag, "Cap on enumerated sets and search nodes")
      ->check(CLI::PositiveNumber);

  std::string input;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "JSON file, or - for standard input")->required();
  };

  auto* validate = app.add_subcommand("validate", "Check a multiloop file");
  add_input(validate);
  auto* report = app.add_subcommand("report", "Topology of a multiloop");
  add_input(report);

  auto* mobidisc = app.add_subcommand("mobidisc", "Pruned mobidisc formula");
  add_input(mobidisc);
  std::string format = "json";
  mobidisc->add_option("--format", format)->check(CLI::IsMember({"json", "dimacs"}));
  bool witnesses = false;
  mobidisc->add_flag("--witnesses", witnesses, "List the embedded bigons as well");

  auto* pin = app.add_subcommand("pin", "Pinning number");
  add_input(pin);
  bool exact = false, three = false, full = false;
  std::optional<int> decide_k;
  auto* exact_opt = pin->add_flag("--exact", exact);
  auto* three_opt = pin->add_flag("--three-strand", three);
  auto* decide_opt = pin->add_option("--decide", decide_k, "Is the pinning number at most k?");
  exact_opt->excludes(three_opt)->excludes(decide_opt);
  three_opt->excludes(decide_opt);
  pin->add_flag("--report", full, "Include every minimal pinning set");
  std::string dot_out;
  pin->add_option("--bigon-dot", dot_out, "With --three-strand, write the bigon graph as DOT");

  auto* ideal = app.add_subcommand("ideal", "Unions of minimal pinning sets");
  add_input(ideal);
  int depth = 2;
  ideal->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  std::string ideal_format = "json";
  ideal->add_option("--format", ideal_format)->check(CLI::IsMember({"json", "dot"}));

  auto* game = app.add_subcommand("game", "Grundy value of the unpinning game");
  add_input(game);
  int max_regions = 20;
  game->add_option("--max-regions", max_regions)->check(CLI::Range(0, 24));

  auto* graph = app.add_subcommand("graph", "Vertex cover tooling on embedded graphs");
  graph->require_subcommand(1);
  auto* vc = graph->add_subcommand("vc", "Minimum vertex cover");
  add_input(vc);
  bool bipartite = false, brute = false;
  auto* bip_opt = vc->add_flag("--bipartite", bipartite);
  vc->add_flag("--brute", brute)->excludes(bip_opt);
  auto* reduce = graph->add_subcommand("reduce-3c3pvc", "Reduce to a cubic 3-connected plane graph");
  add_input(reduce);
  int k = 0;
  reduce->add_option("--k", k)->required();
  bool with_graphs = false;
  reduce->add_flag("--graphs", with_graphs, "Include the graph before and after every stage");
  auto* face_loop = graph->add_subcommand("face-loop", "Multiloop with one loop per face");
  add_input(face_loop);

  auto* catalog = app.add_subcommand("catalog", "Batch runs");
  catalog->require_subcommand(1);
  auto* run = catalog->add_subcommand("run", "One JSONL line per multiloop file, by file name");
  std::string dir, out_path;
  run->add_option("dir", dir)->required()->check(CLI::ExistingDirectory);
  run->add_option("--out", out_path, "Append to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Budget budget = budget_from(budget_flag);
    if (validate->parsed()) {
      const Multiloop m = multiloop_of(parse_json(input));
      std::cout << json{{"valid", true}, {"simple", is_simple(m)}}.dump() << "\n";
    } else if (report->parsed()) {
      std::cout << io::to_json(topology_report(multiloop_of(parse_json(input)))).dump() << "\n";
    } else if (mobidisc->parsed()) {
      const Multiloop m = multiloop_of(parse_json(input));
      const MobidiscFormula f = mobidisc_formula(m);
      if (format == "dimacs") {
        std::cout << io::to_dimacs(f);
      } else {
        json j = io::to_json(f);
        if (witnesses) {
          j["witnesses"] = json::array();
          for (const auto& w : enumerate_embedded_bigons(m)) j["witnesses"].push_back(io::to_json(w));
        }
        std::cout << j.dump() << "\n";
      }
    } else if (pin->parsed()) {
      const json source = parse_json(input);
      if (three) {
        const ThreeStrandPinning p = pinning_number_3strand(multiloop_of(source));
        std::cout << json{{"pinning_number", p.value},
                          {"pins", labelled(p.pins, source)},
                          {"bigon_graph", io::to_json(p.graph)}}
                         .dump()
                  << "\n";
        if (!dot_out.empty()) std::ofstream(dot_out) << io::bigon_graph_dot(p.graph);
      } else if (decide_k) {
        const MobidiscFormula f = formula_of(source);
        std::cout << json{{"k", *decide_k}, {"answer", decide(f, *decide_k, budget)}}.dump() << "\n";
      } else {
        const MobidiscFormula f = formula_of(source);
        const OptimalPinning best = optimal_pinning(f, budget);
        json j{{"pinning_number", best.value}, {"pins", labelled(best.pins, source)}};
        if (full) j["report"] = io::to_json(pinning_report(f, budget));
        std::cout << j.dump() << "\n";
      }
    } else if (ideal->parsed()) {
      const MobidiscFormula f = formula_of(parse_json(input));
      const HasseSlice slice = ideal_hasse_slice(minimal_pinning_sets(f, budget), depth, budget);
      if (ideal_format == "dot") {
        std::cout << io::hasse_dot(slice);
      } else {
        std::cout << io::to_json(slice).dump() << "\n";
      }
    } else if (game->parsed()) {
      const MobidiscFormula f = formula_of(parse_json(input));
      std::cout << io::to_json(grundy(f, max_regions)).dump() << "\n";
    } else if (vc->parsed()) {
      const EmbeddedGraph g = io::graph_from_json(parse_json(input));
      if (bipartite) {
        const BipartiteCover c = bipartite_vc(to_plain(g));
        std::cout << json{{"vertex_cover", c.size}, {"cover", c.cover}}.dump() << "\n";
      } else {
        const int size = brute ? vc_min_bruteforce(to_plain(g)) : vc_min_exact(to_plain(g));
        std::cout << json{{"vertex_cover", size}}.dump() << "\n";
      }
    } else if (reduce->parsed()) {
      const Reduction r = reduce_3c3pvc(io::graph_from_json(parse_json(input)), k);
      json trace = json::array();
      for (const auto& t : r.trace) {
        json step = io::to_json(t);
        if (!with_graphs) {
          step.erase("before");
          step.erase("after");
        }
        trace.push_back(step);
      }
      std::cout << json{{"k", r.k}, {"graph", io::to_json(r.graph)}, {"trace", trace}}.dump() << "\n";
    } else if (face_loop->parsed()) {
      const FaceLoopMultiloop fl = face_loop_multiloop(io::graph_from_json(parse_json(input)));
      io::MultiloopFile file{fl.multiloop.raw(), {}};
      const auto& lab = fl.labels;
      for (std::size_t v = 0; v < lab.vertex_region.size(); ++v) {
        file.region_labels["T" + std::to_string(v)] = lab.vertex_region[v];
      }
      for (std::size_t e = 0; e < lab.edge_region.size(); ++e) {
        file.region_labels["Q" + std::to_string(e)] = lab.edge_region[e];
      }
      for (std::size_t f = 0; f < lab.face_region.size(); ++f) {
        file.region_labels["I" + std::to_string(f)] = lab.face_region[f];
      }
      std::cout << io::to_json(file).dump() << "\n";
    } else if (run->parsed()) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      std::ofstream file_out;
      if (!out_path.empty()) file_out.open(out_path, std::ios::app);
      std::ostream& out = out_path.empty() ? std::cout : file_out;
      for (const auto& path : files) {
        json line;
        try {
          line = catalog_entry(path.stem().string(), io::read_json_file(path.string()), budget);
        } catch (const Error& e) {
          line = {{"id", path.stem().string()},
                  {"error", std::string(to_string(e.code()))},
                  {"message", e.what()}};
        }
        out << line.dump() << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump()
              << "\n";
    return 1;
  }
  return 0;
}
