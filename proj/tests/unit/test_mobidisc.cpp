#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "pinloop/error.hpp"
#include "pinloop/mobidisc.hpp"
#include "support/arrangement.hpp"
#include "support/figures.hpp"
#include "support/oracles.hpp"

using namespace pinloop;
using namespace pinloop::testing;

TEST_CASE("disjoint circles have no bigons") {
  auto a = arrange({rectangle(0, 1, 0, 1), rectangle(3, 4, 0, 1)});
  REQUIRE(a);
  const Multiloop m = Multiloop::validate(a->raw);
  CHECK(enumerate_embedded_bigons(m).empty());
  CHECK(mobidisc_formula(m).clauses.empty());
}

TEST_CASE("one free circle gives the empty formula") {
  RawMultiloop raw;
  raw.free_circles = {{0, 0}};
  const MobidiscFormula f = mobidisc_formula(Multiloop::validate(raw));
  CHECK(f.clauses.empty());
  CHECK(f.variables == std::vector<RegionId>{0});
}

TEST_CASE("lens2 in the plane") {
  const io::MultiloopFile file = lens2_file();
  const Multiloop m = Multiloop::validate(file.raw);
  const auto witnesses = enumerate_embedded_bigons(m);
  std::set<std::vector<RegionId>> sides;
  for (const auto& w : witnesses) sides.insert(w.disc_faces);
  // The three single regions, and the union bounded by the two outer arcs.
  CHECK(witnesses.size() == 4);
  CHECK(sides.count(regions_named(file, {"lens"})));
  CHECK(sides.count(regions_named(file, {"luneA"})));
  CHECK(sides.count(regions_named(file, {"luneB"})));
  CHECK(sides.count(regions_named(file, {"lens", "luneA", "luneB"})));
  for (const auto& side : sides) CHECK_FALSE(std::binary_search(side.begin(), side.end(), *m.outer_region()));

  const MobidiscFormula f = mobidisc_formula(m);
  CHECK(f.clauses == clauses_named(file, {{"lens"}, {"luneA"}, {"luneB"}}));
  CHECK(f.variables.size() == 3);
}

TEST_CASE("lens2 on the sphere has two disc sides per curve") {
  io::MultiloopFile file = lens2_file();
  file.raw.ambient = Ambient::closed;
  file.raw.outer_dart.reset();
  const Multiloop m = Multiloop::validate(file.raw);
  const MobidiscFormula f = mobidisc_formula(m);
  CHECK(f.variables.size() == 4);
  CHECK(f.clauses == clauses_named(file, {{"lens"}, {"luneA"}, {"luneB"}, {"outer"}}));
}

TEST_CASE("worked figure reproduces the caption formula") {
  const io::MultiloopFile file = three_rectangles_file();
  const MobidiscFormula f = mobidisc_formula(Multiloop::validate(file.raw));
  CHECK(f.clauses == clauses_named(file, worked_caption()));
  CHECK(f.variables.size() == 11);
}

TEST_CASE("witness structure") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto m = random_three_strand(rng, 12, t % 3 == 0);
    REQUIRE(m);
    for (const auto& w : enumerate_embedded_bigons(*m)) {
      CHECK(w.strand_i != w.strand_j);
      CHECK(w.x != w.y);
      CHECK_FALSE(w.disc_faces.empty());
      CHECK(std::is_sorted(w.disc_faces.begin(), w.disc_faces.end()));
      // Arc interiors share no crossing.
      std::set<CrossingId> inner_i;
      for (std::size_t k = 1; k < w.arc_i.size(); ++k) inner_i.insert(Multiloop::crossing_of(w.arc_i[k]));
      for (std::size_t k = 1; k < w.arc_j.size(); ++k) CHECK_FALSE(inner_i.count(Multiloop::crossing_of(w.arc_j[k])));
      for (DartId d : w.arc_i) CHECK(m->strand_of(d) == w.strand_i);
      for (DartId d : w.arc_j) CHECK(m->strand_of(d) == w.strand_j);
      if (w.disc_faces.size() == 1) CHECK(w.corner_x == w.disc_faces[0]);
    }
  }
}

TEST_CASE("figure eight is rejected") {
  RawMultiloop raw;
  raw.crossings = 1;
  raw.arc_involution = {1, 0, 3, 2};
  CHECK_THROWS_AS(enumerate_embedded_bigons(Multiloop::validate(raw)), Error);
  try {
    mobidisc_formula(Multiloop::validate(raw));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimple);
  }
}

TEST_CASE("prune examples") {
  MobidiscFormula f{{1, 2}, {{1}, {1, 2}}};
  CHECK(prune(f).clauses == std::vector<std::vector<RegionId>>{{1}});
  MobidiscFormula g{{1, 2, 6, 9}, {{2, 6}, {1, 2, 6, 9}}};
  CHECK(prune(g).clauses == std::vector<std::vector<RegionId>>{{2, 6}});
  MobidiscFormula h{{1, 2, 3}, {{1}, {2, 3}}};
  CHECK(prune(h) == h);
  CHECK(is_antichain(h.clauses));
  CHECK_FALSE(is_antichain(f.clauses));
}

TEST_CASE("prune is idempotent and keeps the hitting sets") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const MobidiscFormula f = random_formula(rng, 1 + t % 12, 1 + t % 9, 4);
    const MobidiscFormula p = prune(f);
    CHECK(prune(p) == p);
    CHECK(is_antichain(p.clauses));
    CHECK(naive_minimal_sets(f) == naive_minimal_sets(p));
  }
}
