#pragma once

// Subgroup lattice enumeration and the structural predicates built on it:
// centralizer, center, normalizer, conjugacy classes of subgroups, Sylow
// data, nilpotency, subnormality.  Subgroups are bitsets over element
// indices; enumeration closes the cyclic subgroups under pairwise join.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

inline constexpr int kDefaultLatticeCap = 100000;

struct SubgroupLattice {
  const Group* parent = nullptr;
  std::vector<Bitset> all;  // every subgroup, sorted by (popcount, value)
};

// Smallest subgroup containing the seed: worklist product saturation.
inline Bitset closure(const Group& g, const Bitset& seed) {
  if (seed.count() == 0) throw Error("closure of empty seed");
  Bitset s(g.n);
  s.set(0);
  std::vector<int> elems{0};
  seed.for_each([&](int x) {
    if (!s.test(x)) {
      s.set(x);
      elems.push_back(x);
    }
  });
  // when elems[qi] is processed every member so far is multiplied with it in
  // both orders; later arrivals pick up the earlier ones on their own turn
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    int x = elems[qi];
    for (size_t j = 0; j < elems.size(); ++j) {
      int w = elems[j];
      for (int p : {g.at(x, w), g.at(w, x)}) {
        if (!s.test(p)) {
          s.set(p);
          elems.push_back(p);
        }
      }
    }
  }
  return s;
}

// The cyclic subgroup generated by one element.
inline Bitset cyclic_subgroup(const Group& g, int x) {
  Bitset s(g.n);
  s.set(0);
  int acc = x;
  while (acc != 0) {
    s.set(acc);
    acc = g.at(acc, x);
  }
  return s;
}

// Every subgroup of g, exactly once: all cyclic subgroups first, then
// repeated joins with cyclic subgroups until fixpoint (complete, since any
// subgroup is the join of its own cyclic subgroups).
inline SubgroupLattice enumerate_subgroups(const Group& g,
                                           int cap = kDefaultLatticeCap) {
  std::set<Bitset> subs;
  std::vector<Bitset> cyclics;
  for (int x = 0; x < g.n; ++x) {
    Bitset c = cyclic_subgroup(g, x);
    if (subs.insert(c).second) cyclics.push_back(c);
  }
  std::vector<Bitset> work(subs.begin(), subs.end());
  while (!work.empty()) {
    Bitset s = std::move(work.back());
    work.pop_back();
    for (const Bitset& c : cyclics) {
      if (c.is_subset_of(s)) continue;
      Bitset j = closure(g, s | c);
      if (subs.insert(j).second) {
        if (int(subs.size()) > cap)
          throw LatticeTooLarge("subgroup count exceeds cap of " +
                                std::to_string(cap));
        work.push_back(std::move(j));
      }
    }
  }
  SubgroupLattice lat;
  lat.parent = &g;
  lat.all.assign(subs.begin(), subs.end());
  std::sort(lat.all.begin(), lat.all.end(),
            [](const Bitset& a, const Bitset& b) { return a.lattice_less(b); });
  return lat;
}

inline Bitset centralizer(const Group& g, const Bitset& h) {
  std::vector<int> members = h.to_indices();
  Bitset out(g.n);
  for (int x = 0; x < g.n; ++x) {
    bool ok = true;
    for (int y : members)
      if (g.at(x, y) != g.at(y, x)) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return out;
}

inline Bitset whole_group(const Group& g) {
  Bitset out(g.n);
  for (int x = 0; x < g.n; ++x) out.set(x);
  return out;
}

inline Bitset center(const Group& g) { return centralizer(g, whole_group(g)); }

inline Bitset conjugate_subgroup(const Group& g, const Bitset& h, int t) {
  Bitset out(g.n);
  h.for_each([&](int y) { out.set(g.at(g.at(t, y), g.inv[t])); });
  return out;
}

inline Bitset normalizer(const Group& g, const Bitset& h) {
  std::vector<int> members = h.to_indices();
  Bitset out(g.n);
  for (int x = 0; x < g.n; ++x) {
    bool ok = true;
    for (int y : members)
      if (!h.test(g.at(g.at(x, y), g.inv[x]))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return out;
}

inline bool is_normal(const Group& g, const Bitset& h) {
  return normalizer(g, h).count() == size_t(g.n);
}

// Orbits of the conjugation action on the lattice, as index lists into
// lat.all (each class sorted, classes ordered by smallest member).
inline std::vector<std::vector<int>> conjugacy_classes_of_subgroups(
    const Group& g, const SubgroupLattice& lat) {
  std::map<Bitset, int> index;
  for (int i = 0; i < int(lat.all.size()); ++i) index.emplace(lat.all[i], i);
  std::vector<char> seen(lat.all.size(), 0);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < int(lat.all.size()); ++i) {
    if (seen[i]) continue;
    std::vector<int> cls;
    std::vector<int> work{i};
    seen[i] = 1;
    while (!work.empty()) {
      int cur = work.back();
      work.pop_back();
      cls.push_back(cur);
      for (int t = 0; t < g.n; ++t) {
        int j = index.at(conjugate_subgroup(g, lat.all[cur], t));
        if (!seen[j]) {
          seen[j] = 1;
          work.push_back(j);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

struct SylowData {
  int sylow_order = 1;
  int count = 1;
  std::vector<Bitset> representatives;
};

inline SylowData sylow_data(const Group& g, const SubgroupLattice& lat,
                            int p) {
  SylowData out;
  int pk = 1;
  while (g.n % (pk * p) == 0) pk *= p;
  out.sylow_order = pk;
  for (const Bitset& h : lat.all)
    if (int(h.count()) == pk) out.representatives.push_back(h);
  out.count = int(out.representatives.size());
  if (pk == 1) return out;  // p does not divide |G|
  // Sylow's theorems, asserted as enumeration self-checks
  if (out.count % p != 1)
    throw Error("Sylow count violates count = 1 mod p");
  if ((g.n / pk) % out.count != 0)
    throw Error("Sylow count does not divide the index");
  return out;
}

inline bool is_nilpotent(const Group& g, const SubgroupLattice& lat) {
  for (int p : prime_divisors(g.n))
    if (sylow_data(g, lat, p).count != 1) return false;
  return true;
}

// True iff the iterated-normalizer chain h <= N(h) <= N(N(h)) <= ... ends
// at the whole group.
inline bool is_subnormal(const Group& g, const Bitset& h) {
  Bitset cur = h;
  while (true) {
    Bitset next = normalizer(g, cur);
    if (next == cur) break;
    cur = next;
  }
  return cur.count() == size_t(g.n);
}

inline std::vector<Bitset> subgroups_of_order(const SubgroupLattice& lat,
                                              int m) {
  std::vector<Bitset> out;
  for (const Bitset& h : lat.all)
    if (int(h.count()) == m) out.push_back(h);
  return out;
}

}  // namespace cdlat
