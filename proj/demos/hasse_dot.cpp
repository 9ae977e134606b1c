// Demo: emit the subgroup Hasse diagram of a group, CD members doubled,
// as DOT on stdout.  Pass a family spec ("m 3 3", "q 8 x c 3", ...).
#include <iostream>

#include "cdlat/errors.hpp"
#include "cdlat/families.hpp"
#include "cdlat/graph.hpp"

int main(int argc, char** argv) {
  std::string spec = "m 3 3";
  if (argc > 1) {
    spec = argv[1];
    for (int i = 2; i < argc; ++i) spec += std::string(" ") + argv[i];
  }
  try {
    std::cout << cdlat::lattice_dot(cdlat::build_group(spec));
  } catch (const cdlat::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
