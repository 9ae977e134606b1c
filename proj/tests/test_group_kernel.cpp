// Group construction, family constructors, direct products, and isomorphism.
#include <catch2/catch_amalgamated.hpp>

#include "cdlat/families.hpp"
#include "cdlat/group.hpp"
#include "cdlat/iso.hpp"

using namespace cdlat;

namespace {

// Left-regular permutation of element a: x -> a*x.
std::vector<int> regular_perm(const Group& g, int a) {
  std::vector<int> p(g.n);
  for (int x = 0; x < g.n; ++x) p[x] = g.at(a, x);
  return p;
}

}  // namespace

TEST_CASE("table construction validates group axioms", "[group-kernel]") {
  // C2 as a table
  Group c2 = group_from_table(2, {0, 1, 1, 0});
  REQUIRE(c2.n == 2);
  REQUIRE(c2.inv[1] == 1);

  // identity not at index 0
  REQUIRE_THROWS_AS(group_from_table(2, {1, 0, 0, 1}), Error);
  // row repeats an element (not a Latin square)
  REQUIRE_THROWS_AS(group_from_table(2, {0, 0, 1, 1}), Error);
  // Latin square that is not associative: 5x5 quasigroup
  // (rows: identity first, then a cyclic-ish scramble that breaks (1*1)*2)
  REQUIRE_THROWS_AS(group_from_table(5,
                                     {
                                         0, 1, 2, 3, 4,  //
                                         1, 0, 3, 4, 2,  //
                                         2, 3, 4, 0, 1,  //
                                         3, 4, 1, 2, 0,  //
                                         4, 2, 0, 1, 3,  //
                                     }),
                    Error);
}

TEST_CASE("generator closure builds canonical groups", "[group-kernel]") {
  // S3 from a 3-cycle and a transposition
  Group s3 = build_from_generators(3, {{1, 2, 0}, {1, 0, 2}});
  REQUIRE(s3.n == 6);
  REQUIRE_FALSE(is_abelian(s3));

  // a single 4-cycle gives C4
  Group c4 = build_from_generators(4, {{1, 2, 3, 0}});
  REQUIRE(c4.n == 4);
  REQUIRE(element_order(c4, 1) == 4);

  // identity is index 0 and the ordering is deterministic
  Group again = build_from_generators(3, {{1, 2, 0}, {1, 0, 2}});
  REQUIRE(s3.mul == again.mul);

  // expected-order mismatch is rejected
  REQUIRE_THROWS_AS(build_from_generators(3, {{1, 2, 0}}, 6), OrderMismatch);

  // closure past the cap is rejected (S7 has order 5040 > default 2048)
  REQUIRE_THROWS_AS(
      build_from_generators(7, {{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}}),
      GroupTooLarge);

  // non-bijective generator
  REQUIRE_THROWS_AS(build_from_generators(3, {{0, 0, 1}}), Error);
}

TEST_CASE("Q8 from its regular representation", "[group-kernel]") {
  Group q8 = generalized_quaternion(8);
  // a = any order-4 element, b = an order-4 element outside <a>; any such
  // pair generates Q8
  int a = -1, b = -1;
  for (int x = 1; x < q8.n && a < 0; ++x)
    if (element_order(q8, x) == 4) a = x;
  std::vector<char> in_a(q8.n, 0);
  for (int acc = 0, k = 0; k < 4; ++k, acc = q8.at(acc, a)) in_a[acc] = 1;
  for (int x = 1; x < q8.n && b < 0; ++x)
    if (!in_a[x] && element_order(q8, x) == 4) b = x;
  Group rebuilt =
      build_from_generators(8, {regular_perm(q8, a), regular_perm(q8, b)});
  REQUIRE(rebuilt.n == 8);
  int involutions = 0;
  for (int x = 1; x < rebuilt.n; ++x)
    if (element_order(rebuilt, x) == 2) ++involutions;
  REQUIRE(involutions == 1);
  REQUIRE(is_isomorphic(rebuilt, q8));
}

TEST_CASE("family constructors and their parameter checks", "[group-kernel]") {
  REQUIRE(cyclic(1).n == 1);
  REQUIRE(cyclic(12).n == 12);
  REQUIRE(dihedral(8).n == 8);
  REQUIRE(generalized_quaternion(16).n == 16);
  REQUIRE(modular_mpk(3, 3).n == 27);
  REQUIRE(extraspecial_p3_exp_p2(5).n == 125);
  REQUIRE(extraspecial_p3_exp_p(3).n == 27);
  REQUIRE(symmetric(4).n == 24);

  // Q8 has exactly one element of order 2
  Group q8 = generalized_quaternion(8);
  int inv2 = 0;
  for (int x = 1; x < q8.n; ++x)
    if (element_order(q8, x) == 2) ++inv2;
  REQUIRE(inv2 == 1);

  // M27 is nonabelian of exponent 9
  Group m27 = modular_mpk(3, 3);
  REQUIRE_FALSE(is_abelian(m27));
  int max_ord = 0;
  for (int x = 0; x < m27.n; ++x) max_ord = std::max(max_ord, element_order(m27, x));
  REQUIRE(max_ord == 9);

  // the exponent-p extraspecial group has no element of order 9
  Group he3 = extraspecial_p3_exp_p(3);
  for (int x = 1; x < he3.n; ++x) REQUIRE(element_order(he3, x) == 3);

  REQUIRE_THROWS_AS(generalized_quaternion(12), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(generalized_quaternion(4), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(modular_mpk(4, 3), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(modular_mpk(3, 2), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(extraspecial_p3_exp_p2(2), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(extraspecial_p3_exp_p(2), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(dihedral(7), InvalidFamilyParameters);
}

TEST_CASE("direct products", "[group-kernel]") {
  Group v4 = direct_product(cyclic(2), cyclic(2));
  REQUIRE(v4.n == 4);
  int inv2 = 0;
  for (int x = 1; x < v4.n; ++x)
    if (element_order(v4, x) == 2) ++inv2;
  REQUIRE(inv2 == 3);

  Group q8c3 = direct_product(generalized_quaternion(8), cyclic(3));
  REQUIRE(q8c3.n == 24);

  // identity factor changes nothing up to isomorphism
  REQUIRE(is_isomorphic(direct_product(symmetric(3), cyclic(1)), symmetric(3)));

  REQUIRE_THROWS_AS(direct_product(cyclic(64), cyclic(64)), GroupTooLarge);
}

TEST_CASE("isomorphism testing", "[group-kernel]") {
  REQUIRE(is_isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3))));
  REQUIRE_FALSE(is_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))));
  REQUIRE_FALSE(is_isomorphic(dihedral(8), generalized_quaternion(8)));
  REQUIRE_FALSE(is_isomorphic(cyclic(6), symmetric(3)));
  REQUIRE(is_isomorphic(symmetric(3), dihedral(6)));
  REQUIRE_FALSE(is_isomorphic(modular_mpk(3, 3), extraspecial_p3_exp_p(3)));
  REQUIRE_FALSE(is_isomorphic(cyclic(8), cyclic(16)));

  // a scrambled-regular-representation copy is recognized (nonabelian search)
  Group m27 = modular_mpk(3, 3);
  int a = -1, b = -1;
  for (int x = 1; x < m27.n && a < 0; ++x)
    if (element_order(m27, x) == 9) a = x;
  // first element outside <a>
  std::vector<char> in_a(m27.n, 0);
  for (int acc = 0, k = 0; k < 9; ++k, acc = m27.at(acc, a)) in_a[acc] = 1;
  for (int x = 1; x < m27.n && b < 0; ++x)
    if (!in_a[x]) b = x;
  Group copy = build_from_generators(
      27, {regular_perm(m27, b), regular_perm(m27, a)}, 27);
  REQUIRE(is_isomorphic(copy, m27));
  REQUIRE_FALSE(is_isomorphic(copy, extraspecial_p3_exp_p(3)));
  REQUIRE_FALSE(is_isomorphic(copy, cyclic(27)));
}

TEST_CASE("group spec mini-language", "[group-kernel]") {
  REQUIRE(build_group("s3").n == 6);
  REQUIRE(build_group("S 3").n == 6);
  REQUIRE(build_group("c 12").n == 12);
  REQUIRE(build_group("q 8 x c 3").n == 24);
  REQUIRE(build_group("es 5").n == 125);
  REQUIRE(build_group("m 3 3").n == 27);
  REQUIRE(build_group("c2 x c2 x c2").n == 8);

  REQUIRE_THROWS_AS(build_group(""), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(build_group("z 5"), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(build_group("c"), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(build_group("c 3 x"), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(build_group("c 0"), InvalidFamilyParameters);
  REQUIRE_THROWS_AS(build_group("c 3 c 4"), InvalidFamilyParameters);
}

TEST_CASE("order histograms", "[group-kernel]") {
  Group q8 = generalized_quaternion(8);
  std::vector<std::pair<int, int>> expect{{1, 1}, {2, 1}, {4, 6}};
  REQUIRE(order_histogram(q8) == expect);

  Group d8 = dihedral(8);
  std::vector<std::pair<int, int>> expect_d{{1, 1}, {2, 5}, {4, 2}};
  REQUIRE(order_histogram(d8) == expect_d);
}
