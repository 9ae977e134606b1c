// Sweep records and theorem-level verification against catalogs.
#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "cdlat/families.hpp"
#include "cdlat/iso.hpp"
#include "cdlat/verify.hpp"

using namespace cdlat;

namespace {

// Catalog text for a group via its left-regular representation.
std::string regular_entry(const Group& g, int id, const std::string& name) {
  std::ostringstream os;
  os << "group " << g.n << " " << id << " " << name << "\n";
  std::vector<int> gens = detail::generating_sequence(g);
  if (gens.empty()) gens.push_back(0);  // trivial group: identity row
  for (int gen : gens) {
    os << "gen";
    for (int x = 0; x < g.n; ++x) os << " " << g.at(gen, x);
    os << "\n";
  }
  os << "\n";
  return os.str();
}

// Complete catalog for orders 1..6.
std::string catalog_1_6() {
  std::string text;
  text += regular_entry(cyclic(1), 1, "C1");
  text += regular_entry(cyclic(2), 1, "C2");
  text += regular_entry(cyclic(3), 1, "C3");
  text += regular_entry(cyclic(4), 1, "C4");
  text += regular_entry(direct_product(cyclic(2), cyclic(2)), 2, "C2xC2");
  text += regular_entry(cyclic(5), 1, "C5");
  text += regular_entry(cyclic(6), 1, "C6");
  text += regular_entry(symmetric(3), 2, "S3");
  return text;
}

}  // namespace

TEST_CASE("per-group sweep records", "[verify]") {
  SweepRecord r = analyze_group(symmetric(3), 6, 2, "S3");
  REQUIRE(r.order == 6);
  REQUIRE(r.id == 2);
  REQUIRE(r.name == "S3");
  REQUIRE(r.delta == 5);
  REQUIRE(r.m_star == 9);
  REQUIRE(r.cd_size == 1);
  REQUIRE(r.total_subgroups == 6);
  REQUIRE_FALSE(r.nilpotent);
  // conditions are p-group-only; a non-prime-power order leaves them false
  REQUIRE_FALSE(r.cond1);
  REQUIRE(r.iso_name == "D6");

  SweepRecord q = analyze_group(generalized_quaternion(8), 8, 5, "Q8");
  REQUIRE(q.delta == 1);
  REQUIRE(q.nilpotent);
  REQUIRE(q.cond1);       // single subgroup of order 2
  REQUIRE(q.cond2);
  REQUIRE(q.cond3);  // Q8 is a CD member and no member is missed
  REQUIRE(q.iso_name == "Q8");
}

TEST_CASE("sweeping one order of a catalog", "[verify]") {
  std::string text;
  text += regular_entry(cyclic(8), 1, "C8");
  text += regular_entry(direct_product(cyclic(4), cyclic(2)), 2, "C4xC2");
  text += regular_entry(direct_product(direct_product(cyclic(2), cyclic(2)),
                                       cyclic(2)),
                        3, "C2xC2xC2");
  text += regular_entry(dihedral(8), 4, "D8");
  text += regular_entry(generalized_quaternion(8), 5, "Q8");
  std::vector<CatalogEntry> entries = parse_catalog(text);
  std::vector<SweepRecord> records = sweep_order(entries, 8);
  REQUIRE(records.size() == 5);
  std::map<std::string, int> delta;
  for (const SweepRecord& r : records) delta[r.name] = r.delta;
  REQUIRE(delta["C8"] == 3);
  REQUIRE(delta["C4xC2"] == 7);
  REQUIRE(delta["C2xC2xC2"] == 15);
  REQUIRE(delta["D8"] == 5);
  REQUIRE(delta["Q8"] == 1);

  REQUIRE_THROWS_AS(sweep_order(entries, 16), MissingCatalog);
}

TEST_CASE("theorem verification on a complete small catalog", "[verify]") {
  std::vector<CatalogEntry> entries = parse_catalog(catalog_1_6());

  TheoremVerdict nil = verify_theorem(Theorem::nil, entries, 6);
  REQUIRE(nil.holds);
  REQUIRE(nil.counterexamples.empty());
  REQUIRE(nil.scope.size() == 6);
  REQUIRE(nil.scope.front() == 1);
  REQUIRE(nil.scope.back() == 6);

  TheoremVerdict s3 = verify_theorem(Theorem::s3, entries, 6);
  REQUIRE(s3.holds);

  TheoremVerdict lt5 = verify_theorem(Theorem::lt5, entries, 6);
  REQUIRE(lt5.holds);

  // verdict invariant: holds <=> no counterexamples
  for (const TheoremVerdict* v : {&nil, &s3, &lt5})
    REQUIRE(v->holds == v->counterexamples.empty());
}

TEST_CASE("verification refuses incomplete catalogs", "[verify]") {
  std::vector<CatalogEntry> entries = parse_catalog(catalog_1_6());
  // catalog stops at 6, so a max_order of 8 cannot be honestly verified
  REQUIRE_THROWS_AS(verify_theorem(Theorem::nil, entries, 8),
                    IncompleteCatalog);

  // duplicated entry: order count exceeds the published count
  std::string dup = catalog_1_6() + regular_entry(cyclic(6), 3, "C6again");
  std::vector<CatalogEntry> entries2 = parse_catalog(dup);
  REQUIRE_THROWS_AS(verify_theorem(Theorem::nil, entries2, 6),
                    IncompleteCatalog);
}

TEST_CASE("up-style recognition needs explicit parameters", "[verify]") {
  std::vector<CatalogEntry> entries = parse_catalog(catalog_1_6());
  REQUIRE_THROWS_AS(verify_theorem(Theorem::up_check, entries, 6), Error);
  REQUIRE_THROWS_AS(up_check(entries, 6, 3), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(up_check(entries, 2, 2), InvalidFamilyParameters);
  // p=2, k=3 needs a complete order-16 catalog; this one has none
  REQUIRE_THROWS_AS(up_check(entries, 2, 3), IncompleteCatalog);
}

TEST_CASE("theorem names", "[verify]") {
  REQUIRE(std::string(theorem_name(Theorem::nil)) == "nil");
  REQUIRE(std::string(theorem_name(Theorem::s3)) == "s3");
  REQUIRE(std::string(theorem_name(Theorem::lt5)) == "lt5");
  REQUIRE(std::string(theorem_name(Theorem::up_check)) == "up");
}

TEST_CASE("bundled catalog: theorems hold through order 32",
          "[verify][data]") {
  std::ifstream in("data/catalogs/orders_1_32.txt");
  REQUIRE(in.good());
  std::vector<CatalogEntry> entries = parse_catalog(in);

  TheoremVerdict nil = verify_theorem(Theorem::nil, entries, 32);
  REQUIRE(nil.holds);
  TheoremVerdict s3v = verify_theorem(Theorem::s3, entries, 32);
  REQUIRE(s3v.holds);
  TheoremVerdict lt5 = verify_theorem(Theorem::lt5, entries, 32);
  REQUIRE(lt5.holds);
}

TEST_CASE("recognition at order 16 fails, at order 32 holds",
          "[verify][data]") {
  std::ifstream in("data/catalogs/orders_1_32.txt");
  REQUIRE(in.good());
  std::vector<CatalogEntry> entries = parse_catalog(in);

  // k = 3 is far below the theorem's k > 4 regime, and the recognition
  // genuinely breaks there: C4 x C4 satisfies the hypothesis at order 16
  // but is not among the three conclusion groups.
  TheoremVerdict k3 = up_check(entries, 2, 3);
  REQUIRE_FALSE(k3.holds);
  REQUIRE_FALSE(k3.counterexamples.empty());
  bool found_c4c4 = false;
  Group c4c4 = direct_product(cyclic(4), cyclic(4));
  for (const auto& [order, id] : k3.counterexamples) {
    REQUIRE(order == 16);
    for (const CatalogEntry& e : entries)
      if (e.order == order && e.id == id &&
          is_isomorphic(build_entry(e), c4c4))
        found_c4c4 = true;
  }
  REQUIRE(found_c4c4);

  // k = 4 (order 32): the recognition holds
  TheoremVerdict k4 = up_check(entries, 2, 4);
  REQUIRE(k4.holds);
  REQUIRE(k4.scope == std::vector<int>{32});
  REQUIRE_FALSE(k4.notes.empty());
}
