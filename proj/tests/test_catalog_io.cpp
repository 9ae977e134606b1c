// Catalog parsing, isomorphism-class naming, and JSON report emission.
#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "cdlat/catalog.hpp"
#include "cdlat/families.hpp"
#include "cdlat/iso.hpp"

using namespace cdlat;

TEST_CASE("catalog parsing happy path", "[catalog-io]") {
  const std::string text =
      "# leading comment\n"
      "group 6 1 C6\n"
      "gen 1 2 3 4 5 0\n"
      "\n"
      "group 6 2 S3   # trailing comment\n"
      "gen 1 2 0\n"
      "gen 1 0 2\n"
      "\n"
      "group 4 1\n"
      "gen 1 0 3 2\n"
      "gen 2 3 0 1\n";
  std::vector<CatalogEntry> entries = parse_catalog(text);
  REQUIRE(entries.size() == 3);
  REQUIRE(entries[0].order == 6);
  REQUIRE(entries[0].id == 1);
  REQUIRE(entries[0].name == "C6");
  REQUIRE(entries[0].degree == 6);
  REQUIRE(entries[1].name == "S3");
  REQUIRE(entries[1].generators.size() == 2);
  REQUIRE(entries[2].name.empty());
  REQUIRE(catalog_group_name(entries[2]) == "G4#1");

  Group s3 = build_entry(entries[1]);
  REQUIRE(s3.n == 6);
  REQUIRE(is_isomorphic(s3, symmetric(3)));
  Group v4 = build_entry(entries[2]);
  REQUIRE(is_isomorphic(v4, direct_product(cyclic(2), cyclic(2))));
}

TEST_CASE("catalog parsing rejects malformed input", "[catalog-io]") {
  // entry without generators
  REQUIRE_THROWS_AS(parse_catalog("group 2 1 C2\n\n"), ParseError);
  // gen before any group header
  REQUIRE_THROWS_AS(parse_catalog("gen 1 0\n"), ParseError);
  // non-integer image
  REQUIRE_THROWS_AS(parse_catalog("group 2 1\ngen 1 x\n"), ParseError);
  // image out of range
  REQUIRE_THROWS_AS(parse_catalog("group 2 1\ngen 1 2\n"), ParseError);
  // not a bijection
  REQUIRE_THROWS_AS(parse_catalog("group 2 1\ngen 0 0\n"), ParseError);
  // degree mismatch between generators
  REQUIRE_THROWS_AS(parse_catalog("group 6 1\ngen 1 2 0\ngen 1 0\n"),
                    ParseError);
  // nonpositive order
  REQUIRE_THROWS_AS(parse_catalog("group 0 1\ngen 0\n"), ParseError);
  // malformed header
  REQUIRE_THROWS_AS(parse_catalog("group six 1\ngen 0\n"), ParseError);
  // unknown directive
  REQUIRE_THROWS_AS(parse_catalog("group 2 1\nperm 1 0\n"), ParseError);
  // declared order differs from the generated group
  REQUIRE_THROWS_AS(parse_catalog("group 4 1\ngen 1 0\n"), OrderMismatch);
  // the error carries the offending line number
  try {
    parse_catalog("group 2 1\ngen 1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line == 2);
  }
}

TEST_CASE("degree cap", "[catalog-io]") {
  std::ostringstream big;
  big << "group 2 1\ngen";
  // degree 300 > 256: a single transposition on 300 points
  for (int i = 0; i < 300; ++i) big << " " << (i < 2 ? 1 - i : i);
  big << "\n";
  REQUIRE_THROWS_AS(parse_catalog(big.str()), ParseError);
}

TEST_CASE("abelian isomorphism names", "[catalog-io]") {
  REQUIRE(abelian_iso_name(cyclic(1)) == "C1");
  REQUIRE(abelian_iso_name(cyclic(12)) == "C12");
  REQUIRE(abelian_iso_name(direct_product(cyclic(2), cyclic(2))) == "C2xC2");
  REQUIRE(abelian_iso_name(direct_product(cyclic(16), cyclic(2))) ==
          "C16xC2");
  // invariant-factor form: C2 x C6 x C3 = C6 x C6
  Group g = direct_product(direct_product(cyclic(2), cyclic(6)), cyclic(3));
  REQUIRE(abelian_iso_name(g) == "C6xC6");
  // C3 x C9: largest invariant factor first
  REQUIRE(abelian_iso_name(direct_product(cyclic(3), cyclic(9))) == "C9xC3");
}

TEST_CASE("family isomorphism names", "[catalog-io]") {
  REQUIRE(family_iso_name(cyclic(32)) == "C32");
  REQUIRE(family_iso_name(direct_product(cyclic(16), cyclic(2))) == "C16xC2");
  REQUIRE(family_iso_name(modular_mpk(2, 5)) == "M32");
  REQUIRE(family_iso_name(modular_mpk(3, 3)) == "M27");
  REQUIRE(family_iso_name(generalized_quaternion(16)) == "Q16");
  REQUIRE(family_iso_name(dihedral(8)) == "D8");
  REQUIRE(family_iso_name(symmetric(3)) == "D6");  // order-6 nonabelian
  REQUIRE(family_iso_name(symmetric(4)) == "S4");
  REQUIRE(family_iso_name(extraspecial_p3_exp_p(3)) == "He3");
  // a group outside every named family has no name
  REQUIRE(family_iso_name(direct_product(generalized_quaternion(8),
                                         cyclic(3)))
              .empty());
}

TEST_CASE("JSON report format", "[catalog-io]") {
  REQUIRE(report_to_string({}) == "[]\n");

  SweepRecord r;
  r.order = 32;
  r.id = 2;
  r.name = "G\"32\"";  // exercises escaping
  r.delta = 4;
  r.m_star = 256;
  r.cd_size = 3;
  r.total_subgroups = 10;
  r.nilpotent = true;
  r.cond1 = true;
  r.cond2 = false;
  r.cond3 = true;
  SweepRecord r2 = r;
  r2.id = 1;
  r2.name = "first";
  r2.iso_name = "C32";
  std::string out = report_to_string({r, r2});
  // records sorted by (order, id); keys sorted alphabetically
  const std::string expect =
      "[\n"
      " {\"cd_size\": 3, \"cond1\": true, \"cond2\": false, \"cond3\": true, "
      "\"delta\": 4, \"id\": 1, \"iso_name\": \"C32\", \"m_star\": 256, "
      "\"name\": \"first\", \"nilpotent\": true, \"order\": 32, "
      "\"total_subgroups\": 10},\n"
      " {\"cd_size\": 3, \"cond1\": true, \"cond2\": false, \"cond3\": true, "
      "\"delta\": 4, \"id\": 2, \"iso_name\": \"\", \"m_star\": 256, "
      "\"name\": \"G\\\"32\\\"\", \"nilpotent\": true, \"order\": 32, "
      "\"total_subgroups\": 10}\n"
      "]\n";
  REQUIRE(out == expect);
}

TEST_CASE("bundled catalogs parse and are complete per order",
          "[catalog-io][data]") {
  std::ifstream in("data/catalogs/orders_1_32.txt");
  REQUIRE(in.good());
  std::vector<CatalogEntry> entries = parse_catalog(in);
  REQUIRE(entries.size() == 144);
  // ids are 1..k per order and every entry builds to its declared order
  std::map<int, int> counts;
  for (const CatalogEntry& e : entries) {
    ++counts[e.order];
    REQUIRE(e.id == counts[e.order]);
  }
  REQUIRE(counts[16] == 14);
  REQUIRE(counts[32] == 51);
}
