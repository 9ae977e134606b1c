// Demo: measures along the generalized quaternion tower Q8..Q128.
#include <cstdio>

#include "cdlat/cd.hpp"
#include "cdlat/families.hpp"
#include "cdlat/subgroup.hpp"

int main() {
  std::printf("%-6s %10s %10s %6s %6s\n", "group", "subgroups", "m*", "|CD|",
              "delta");
  for (int k = 3; k <= 7; ++k) {
    const cdlat::Group q = cdlat::generalized_quaternion(1 << k);
    const cdlat::SubgroupLattice lat = cdlat::enumerate_subgroups(q);
    const cdlat::CDReport rep = cdlat::cd_lattice(q, lat);
    std::printf("%-6s %10d %10lld %6zu %6d\n", q.name.c_str(),
                rep.total_subgroups, rep.m_star, rep.members.size(),
                rep.delta);
  }
  return 0;
}
