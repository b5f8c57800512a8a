#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pinloop/error.hpp"
#include "pinloop/tristrand.hpp"
#include "support/arrangement.hpp"
#include "support/figures.hpp"
#include "support/oracles.hpp"

using namespace pinloop;
using namespace pinloop::testing;

namespace {

PlainGraph cycle(int n) {
  PlainGraph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("bigon graph of the worked figure") {
  const io::MultiloopFile file = three_rectangles_file();
  const BigonGraph g = build_bigon_graph(Multiloop::validate(file.raw));
  CHECK(g.forced_regional_count == 2);
  CHECK(g.forced_regions == regions_named(file, {"3", "8"}));
  std::vector<std::pair<RegionId, RegionId>> expected;
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"9", "10"}, {"2", "6"}, {"10", "11"}, {"1", "6"}, {"1", "9"}, {"6", "10"}, {"2", "11"}}) {
    const auto pair = regions_named(file, {a, b});
    expected.emplace_back(pair[0], pair[1]);
  }
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  std::sort(expected.begin(), expected.end());
  CHECK(edges == expected);
  for (const char* middle : {"4", "5", "7"}) {
    CHECK_FALSE(std::binary_search(g.vertices.begin(), g.vertices.end(), file.region_labels.at(middle)));
  }
  CHECK(two_color(to_plain(g)).bipartite());
}

TEST_CASE("three-strand pinning of the worked figure") {
  const io::MultiloopFile file = three_rectangles_file();
  const Multiloop m = Multiloop::validate(file.raw);
  const ThreeStrandPinning p = pinning_number_3strand(m);
  CHECK(p.value == 5);
  const MobidiscFormula f = mobidisc_formula(m);
  CHECK(verify_pinning(f, p.pins));
  const Matching mm = max_matching_bipartite(to_plain(p.graph));
  CHECK(mm.size == 3);
}

TEST_CASE("lens2 padded with a free circle") {
  auto a = arrange({{{0, 0}, {2, -2}, {4, 0}, {2, 2}}, {{2, 0}, {4, -2}, {6, 0}, {4, 2}},
                    rectangle(20, 21, 20, 21)});
  REQUIRE(a);
  const Multiloop m = Multiloop::validate(a->raw);
  CHECK(m.strand_count() == 3);
  const BigonGraph g = build_bigon_graph(m);
  CHECK(g.edges.empty());
  CHECK(g.forced_regions.size() == 3);
  CHECK(pinning_number_3strand(m).value == 3);
}

TEST_CASE("free circles only") {
  auto a = arrange({rectangle(0, 1, 0, 1), rectangle(3, 4, 0, 1), rectangle(6, 7, 0, 1)});
  REQUIRE(a);
  const Multiloop m = Multiloop::validate(a->raw);
  const BigonGraph g = build_bigon_graph(m);
  CHECK(g.edges.empty());
  CHECK(g.forced_regional_count == 0);
  const ThreeStrandPinning p = pinning_number_3strand(m);
  CHECK(p.value == 0);
  CHECK(p.pins.empty());
}

TEST_CASE("input restrictions") {
  auto four = arrange({rectangle(0, 4, 0, 1), rectangle(1, 2, -1, 2), rectangle(3, 3.5, -1, 2),
                       rectangle(0.5, 3.7, 0.4, 0.6)});
  REQUIRE(four);
  const Multiloop m4 = Multiloop::validate(four->raw);
  CHECK(code_of([&] { build_bigon_graph(m4); }) == ErrorCode::TooManyStrands);

  RawMultiloop eight;
  eight.crossings = 1;
  eight.arc_involution = {1, 0, 3, 2};
  const Multiloop m8 = Multiloop::validate(eight);
  CHECK(code_of([&] { build_bigon_graph(m8); }) == ErrorCode::NotSimple);
}

TEST_CASE("matching and cover examples") {
  const PlainGraph edge{2, {{0, 1}}};
  const Matching m1 = max_matching_bipartite(edge);
  CHECK(m1.size == 1);
  CHECK(koenig_cover(edge, m1).size() == 1);

  const PlainGraph c6 = cycle(6);
  const Matching m6 = max_matching_bipartite(c6);
  CHECK(m6.size == 3);
  const auto cover6 = koenig_cover(c6, m6);
  CHECK(cover6.size() == 3);
  CHECK(is_vertex_cover(c6, cover6));

  const PlainGraph star{4, {{0, 1}, {0, 2}, {0, 3}}};
  CHECK(koenig_cover(star, max_matching_bipartite(star)) == std::vector<int>{0});

  const PlainGraph triangle = cycle(3);
  CHECK(code_of([&] { max_matching_bipartite(triangle); }) == ErrorCode::NotBipartite);
  const TwoColoring tc = two_color(cycle(5));
  CHECK_FALSE(tc.bipartite());
  CHECK(tc.odd_cycle.size() % 2 == 1);

  Matching empty{{-1, -1}, 0};
  CHECK(code_of([&] { koenig_cover(edge, empty); }) == ErrorCode::MatchingNotMaximum);
}

TEST_CASE("koenig equality on random bipartite graphs") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const PlainGraph g = random_bipartite(rng, 16);
    const Matching m = max_matching_bipartite(g);
    const auto cover = koenig_cover(g, m);
    CHECK(static_cast<int>(cover.size()) == m.size);
    CHECK(is_vertex_cover(g, cover));
    CHECK(m.size == naive_vertex_cover(g));
  }
}

TEST_CASE("three-strand route agrees with the exact solver") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 80; ++t) {
    auto m = random_three_strand(rng, 12, t % 2 == 1);
    REQUIRE(m);
    const MobidiscFormula f = mobidisc_formula(*m);
    const ThreeStrandPinning p = pinning_number_3strand(*m);
    CHECK(p.value == pinning_number(f));
    CHECK(verify_pinning(f, p.pins));
    for (std::size_t i = 0; i < p.pins.size(); ++i) {
      RegionSet smaller = p.pins;
      smaller.erase(smaller.begin() + i);
      CHECK_FALSE(verify_pinning(f, smaller));
    }
    const auto degree_ok = [&] {
      std::map<RegionId, int> deg;
      for (auto [a, b] : p.graph.edges) ++deg[a], ++deg[b];
      return std::all_of(deg.begin(), deg.end(), [](auto& kv) { return kv.second <= 3; });
    };
    CHECK(degree_ok());
  }
}
