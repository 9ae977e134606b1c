#pragma once

// Subgroup-lattice Hasse diagrams with CD members highlighted, rendered as
// deterministic DOT text.

#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cdlat/cd.hpp"
#include "cdlat/group.hpp"
#include "cdlat/subgroup.hpp"

namespace cdlat {

// Nodes are the lattice members in lattice order; edges are cover relations
// (sub -> super), so the DOT output draws the Hasse diagram bottom-up.
struct LatticeGraph {
  std::string title;
  std::vector<std::string> labels;
  std::vector<bool> cd_member;
  std::vector<std::pair<int, int>> edges;
};

namespace detail {

// Cover relations of an inclusion-sorted lattice.  Scanning supersets in
// lattice order means every intermediate subgroup would already appear among
// the found covers, so "contains no earlier cover" certifies a cover.
inline std::vector<std::pair<int, int>> cover_edges(
    const std::vector<Bitset>& all) {
  std::vector<std::pair<int, int>> edges;
  const int m = static_cast<int>(all.size());
  for (int i = 0; i < m; ++i) {
    std::vector<int> covers;
    for (int j = i + 1; j < m; ++j) {
      if (all[i].count() >= all[j].count()) continue;
      if (!all[i].is_subset_of(all[j])) continue;
      bool above_a_cover = false;
      for (const int c : covers)
        if (all[c].is_subset_of(all[j])) {
          above_a_cover = true;
          break;
        }
      if (!above_a_cover) covers.push_back(j);
    }
    for (const int c : covers) edges.emplace_back(i, c);
  }
  return edges;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

inline LatticeGraph make_lattice_graph(const Group& g) {
  const SubgroupLattice lat = enumerate_subgroups(g);
  const CDReport rep = cd_lattice(g, lat);
  LatticeGraph gr;
  gr.title = g.name;
  // Labels show the subgroup order, with a suffix when several subgroups
  // share it ("3a".."3d", or "8.1".. once letters run out).
  std::map<int, int> per_order;
  for (const Bitset& h : lat.all) ++per_order[h.count()];
  std::map<int, int> seen;
  for (const Bitset& h : lat.all) {
    const int o = h.count();
    const int i = seen[o]++;
    std::string lab = std::to_string(o);
    if (per_order[o] > 1)
      lab += per_order[o] <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : "." + std::to_string(i + 1);
    gr.labels.push_back(lab);
  }
  const std::set<Bitset> members(rep.members.begin(), rep.members.end());
  gr.cd_member.reserve(lat.all.size());
  for (const Bitset& h : lat.all) gr.cd_member.push_back(members.count(h) > 0);
  gr.edges = detail::cover_edges(lat.all);
  return gr;
}

inline void write_dot(const LatticeGraph& gr, std::ostream& os) {
  os << "digraph \"" << detail::dot_escape(gr.title) << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=ellipse];\n";
  for (size_t i = 0; i < gr.labels.size(); ++i) {
    os << "  N" << i << " [label=\"" << detail::dot_escape(gr.labels[i])
       << "\"";
    if (gr.cd_member[i]) os << ", peripheries=2, style=bold";
    os << "];\n";
  }
  for (const auto& [sub, super] : gr.edges)
    os << "  N" << sub << " -> N" << super << ";\n";
  os << "}\n";
}

inline std::string lattice_dot(const Group& g) {
  std::ostringstream os;
  write_dot(make_lattice_graph(g), os);
  return os.str();
}

}  // namespace cdlat
