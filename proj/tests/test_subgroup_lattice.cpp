// Subgroup enumeration and the structural predicates built on the lattice.
#include <catch2/catch_amalgamated.hpp>

#include "cdlat/families.hpp"
#include "cdlat/subgroup.hpp"

using namespace cdlat;

TEST_CASE("subgroup counts of reference groups", "[subgroup-lattice]") {
  REQUIRE(enumerate_subgroups(cyclic(1)).all.size() == 1);
  REQUIRE(enumerate_subgroups(symmetric(3)).all.size() == 6);
  REQUIRE(enumerate_subgroups(generalized_quaternion(8)).all.size() == 6);
  REQUIRE(enumerate_subgroups(dihedral(8)).all.size() == 10);
  REQUIRE(enumerate_subgroups(modular_mpk(3, 3)).all.size() == 10);
  REQUIRE(enumerate_subgroups(cyclic(12)).all.size() == 6);
  REQUIRE(enumerate_subgroups(generalized_quaternion(16)).all.size() == 11);
  // elementary abelian 2^3: 1 + 7 + 7 + 1
  REQUIRE(enumerate_subgroups(build_group("c2 x c2 x c2")).all.size() == 16);
  // cyclic groups have one subgroup per divisor
  REQUIRE(enumerate_subgroups(cyclic(30)).all.size() == 8);
}

TEST_CASE("lattice ordering and endpoints", "[subgroup-lattice]") {
  Group d8 = dihedral(8);
  SubgroupLattice lat = enumerate_subgroups(d8);
  REQUIRE(lat.parent == &d8);
  REQUIRE(lat.all.front().count() == 1);
  REQUIRE(lat.all.front().test(0));
  REQUIRE(lat.all.back().count() == size_t(d8.n));
  for (size_t i = 1; i < lat.all.size(); ++i)
    REQUIRE(lat.all[i - 1].lattice_less(lat.all[i]));
  // every member's order divides the group order
  for (const Bitset& h : lat.all) REQUIRE(d8.n % int(h.count()) == 0);
}

TEST_CASE("closure and cyclic subgroups", "[subgroup-lattice]") {
  Group s3 = symmetric(3);
  // the closure of two distinct transpositions is the whole group
  std::vector<int> transpositions;
  for (int x = 1; x < s3.n; ++x)
    if (element_order(s3, x) == 2) transpositions.push_back(x);
  REQUIRE(transpositions.size() == 3);
  Bitset seed(s3.n);
  seed.set(transpositions[0]);
  seed.set(transpositions[1]);
  REQUIRE(closure(s3, seed).count() == 6);

  Bitset one(s3.n);
  one.set(transpositions[0]);
  REQUIRE(closure(s3, one).count() == 2);
}

TEST_CASE("center and centralizers", "[subgroup-lattice]") {
  REQUIRE(center(symmetric(3)).count() == 1);
  REQUIRE(center(generalized_quaternion(8)).count() == 2);
  REQUIRE(center(dihedral(8)).count() == 2);
  REQUIRE(center(cyclic(12)).count() == 12);
  REQUIRE(center(modular_mpk(3, 3)).count() == 3);

  // centralizer of a subgroup: in Q8, C(<i>) = <i> itself has order 4
  Group q8 = generalized_quaternion(8);
  SubgroupLattice lat = enumerate_subgroups(q8);
  for (const Bitset& h : subgroups_of_order(lat, 4))
    REQUIRE(centralizer(q8, h) == h);
  // the trivial subgroup centralizes everything
  REQUIRE(centralizer(q8, subgroups_of_order(lat, 1)[0]).count() == 8);
}

TEST_CASE("normality, normalizers, subnormality", "[subgroup-lattice]") {
  Group s3 = symmetric(3);
  SubgroupLattice lat = enumerate_subgroups(s3);
  Bitset c3 = subgroups_of_order(lat, 3)[0];
  REQUIRE(is_normal(s3, c3));
  REQUIRE(is_subnormal(s3, c3));
  for (const Bitset& h : subgroups_of_order(lat, 2)) {
    REQUIRE_FALSE(is_normal(s3, h));
    REQUIRE_FALSE(is_subnormal(s3, h));
    REQUIRE(normalizer(s3, h) == h);
  }

  // in a nilpotent group every subgroup is subnormal
  Group d8 = dihedral(8);
  for (const Bitset& h : enumerate_subgroups(d8).all)
    REQUIRE(is_subnormal(d8, h));
}

TEST_CASE("Sylow data and nilpotency", "[subgroup-lattice]") {
  Group c12 = cyclic(12);
  SubgroupLattice lat12 = enumerate_subgroups(c12);
  REQUIRE(prime_divisors(12) == std::vector<int>{2, 3});
  SylowData s2 = sylow_data(c12, lat12, 2);
  REQUIRE(s2.sylow_order == 4);
  REQUIRE(s2.count == 1);
  SylowData s3d = sylow_data(c12, lat12, 3);
  REQUIRE(s3d.sylow_order == 3);
  REQUIRE(s3d.count == 1);

  Group s3 = symmetric(3);
  SubgroupLattice lat3 = enumerate_subgroups(s3);
  REQUIRE(sylow_data(s3, lat3, 2).count == 3);
  REQUIRE(sylow_data(s3, lat3, 3).count == 1);

  REQUIRE(is_nilpotent(c12, lat12));
  REQUIRE_FALSE(is_nilpotent(s3, lat3));
  Group q8 = generalized_quaternion(8);
  REQUIRE(is_nilpotent(q8, enumerate_subgroups(q8)));
  Group s4 = symmetric(4);
  REQUIRE_FALSE(is_nilpotent(s4, enumerate_subgroups(s4)));
}

TEST_CASE("conjugacy classes of subgroups", "[subgroup-lattice]") {
  Group s3 = symmetric(3);
  SubgroupLattice lat = enumerate_subgroups(s3);
  auto classes = conjugacy_classes_of_subgroups(s3, lat);
  // S3: {1}, {C2 x3}, {C3}, {S3} -> 4 classes
  REQUIRE(classes.size() == 4);
  size_t covered = 0;
  for (const auto& c : classes) covered += c.size();
  REQUIRE(covered == lat.all.size());
}

TEST_CASE("lattice cap is enforced", "[subgroup-lattice]") {
  REQUIRE_THROWS_AS(enumerate_subgroups(dihedral(8), 3), LatticeTooLarge);
}

TEST_CASE("enumeration is deterministic", "[subgroup-lattice]") {
  Group m27 = modular_mpk(3, 3);
  SubgroupLattice a = enumerate_subgroups(m27);
  SubgroupLattice b = enumerate_subgroups(m27);
  REQUIRE(a.all == b.all);
}
