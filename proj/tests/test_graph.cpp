// Hasse-diagram construction and DOT emission.
#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cdlat/families.hpp"
#include "cdlat/graph.hpp"

using namespace cdlat;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("S3 diagram: 6 nodes, 8 cover edges, one CD node", "[graph]") {
  LatticeGraph gr = make_lattice_graph(symmetric(3));
  REQUIRE(gr.labels.size() == 6);
  REQUIRE(gr.edges.size() == 8);
  int marked = 0;
  for (bool m : gr.cd_member) marked += m;
  REQUIRE(marked == 1);
  // the marked node is the order-3 subgroup
  for (size_t i = 0; i < gr.labels.size(); ++i)
    if (gr.cd_member[i]) REQUIRE(gr.labels[i] == "3");
}

TEST_CASE("M27 diagram: 10 nodes, 6 CD members", "[graph]") {
  LatticeGraph gr = make_lattice_graph(modular_mpk(3, 3));
  REQUIRE(gr.labels.size() == 10);
  int marked = 0;
  for (bool m : gr.cd_member) marked += m;
  REQUIRE(marked == 6);
}

TEST_CASE("trivial group diagram: one marked node, no edges", "[graph]") {
  LatticeGraph gr = make_lattice_graph(cyclic(1));
  REQUIRE(gr.labels.size() == 1);
  REQUIRE(gr.edges.empty());
  REQUIRE(gr.cd_member[0]);
}

TEST_CASE("cover relations skip non-covers", "[graph]") {
  // C8 is a chain 1 < C2 < C4 < C8: exactly 3 edges, none skipping a level
  LatticeGraph gr = make_lattice_graph(cyclic(8));
  REQUIRE(gr.labels.size() == 4);
  REQUIRE(gr.edges.size() == 3);
  // C12's divisor lattice: 6 subgroups, covers = divisor-lattice covers
  LatticeGraph c12 = make_lattice_graph(cyclic(12));
  REQUIRE(c12.labels.size() == 6);
  // 1-2, 1-3, 2-4, 2-6, 3-6, 4-12, 6-12
  REQUIRE(c12.edges.size() == 7);
}

TEST_CASE("edges go upward in subgroup order", "[graph]") {
  Group d8 = dihedral(8);
  LatticeGraph gr = make_lattice_graph(d8);
  SubgroupLattice lat = enumerate_subgroups(d8);
  for (const auto& [sub, super] : gr.edges) {
    REQUIRE(lat.all[sub].count() < lat.all[super].count());
    REQUIRE(lat.all[sub].is_subset_of(lat.all[super]));
  }
}

TEST_CASE("DOT output shape", "[graph]") {
  std::string dot = lattice_dot(symmetric(3));
  REQUIRE(dot.find("digraph \"S3\"") == 0);
  REQUIRE(dot.find("rankdir=BT;") != std::string::npos);
  REQUIRE(count_occurrences(dot, " -> ") == 8);
  REQUIRE(count_occurrences(dot, "peripheries=2") == 1);
  REQUIRE(count_occurrences(dot, "[label=") == 6);
  REQUIRE(dot.back() == '\n');

  // label suffixes disambiguate equal orders: S3 has 2a, 2b, 2c
  REQUIRE(dot.find("\"2a\"") != std::string::npos);
  REQUIRE(dot.find("\"2c\"") != std::string::npos);

  // emission is deterministic
  REQUIRE(lattice_dot(symmetric(3)) == dot);
}

TEST_CASE("DOT escaping", "[graph]") {
  Group g = build_from_generators(2, {{1, 0}}, 2, "C\"2\"");
  std::string dot = lattice_dot(g);
  REQUIRE(dot.find("digraph \"C\\\"2\\\"\"") == 0);
}
