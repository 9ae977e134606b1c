#pragma once

// Isomorphism testing for small groups.  Strategy: cheap invariants first
// (order, abelianness, element-order histogram — complete for abelian
// groups; per-element (order, class size, centralizer size) profiles), then
// a backtracking search mapping a short generating sequence, with the first
// generator's image restricted to one representative per conjugacy class of
// the target (any isomorphism can be composed with an inner automorphism).

#include <algorithm>
#include <array>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

namespace detail {

// (element order, conjugacy class size, centralizer order) per element.
struct ElementProfile {
  std::vector<std::array<int, 3>> per_element;  // indexed by element
  std::vector<std::array<int, 3>> sorted;       // the multiset, sorted
};

inline ElementProfile element_profile(const Group& g) {
  const int n = g.n;
  ElementProfile prof;
  prof.per_element.resize(n);
  std::vector<int> class_of(n, -1);
  std::vector<int> class_size;
  for (int x = 0; x < n; ++x) {
    if (class_of[x] >= 0) continue;
    int c = int(class_size.size());
    std::vector<int> orbit{x};
    class_of[x] = c;
    for (size_t k = 0; k < orbit.size(); ++k)
      for (int t = 0; t < n; ++t) {
        int y = g.at(g.at(t, orbit[k]), g.inv[t]);
        if (class_of[y] < 0) {
          class_of[y] = c;
          orbit.push_back(y);
        }
      }
    class_size.push_back(int(orbit.size()));
  }
  for (int x = 0; x < n; ++x) {
    int cent = 0;
    for (int t = 0; t < n; ++t)
      if (g.at(t, x) == g.at(x, t)) ++cent;
    prof.per_element[x] = {element_order(g, x), class_size[class_of[x]], cent};
  }
  prof.sorted = prof.per_element;
  std::sort(prof.sorted.begin(), prof.sorted.end());
  return prof;
}

// Greedy short generating sequence: repeatedly add the highest-order element
// outside the current closure (ties by index).
inline std::vector<int> generating_sequence(const Group& g) {
  const int n = g.n;
  std::vector<int> gens;
  std::vector<char> in(n, 0);
  in[0] = 1;
  int covered = 1;
  std::vector<int> elems{0};
  while (covered < n) {
    int best = -1, best_ord = 0;
    for (int x = 0; x < n; ++x)
      if (!in[x]) {
        int o = element_order(g, x);
        if (o > best_ord) {
          best_ord = o;
          best = x;
        }
      }
    gens.push_back(best);
    // grow the closure with the new generator
    if (!in[best]) {
      in[best] = 1;
      elems.push_back(best);
      ++covered;
    }
    for (size_t i = 0; i < elems.size(); ++i) {
      for (size_t j = 0; j < elems.size(); ++j) {
        int p = g.at(elems[i], elems[j]);
        if (!in[p]) {
          in[p] = 1;
          elems.push_back(p);
          ++covered;
        }
      }
    }
  }
  return gens;
}

// Try to extend a partial map (images fixed on the `known` elements) to a
// full homomorphism by product saturation; returns false on any conflict.
// `img` is the working element map, -1 for unknown; img[0] = 0 is seeded.
// Worklist over elements: when x is processed, products with everything
// known so far are forced in both orders; elements discovered mid-pass are
// appended and processed in turn, so every ordered pair is eventually hit.
inline bool extend_hom(const Group& a, const Group& b, std::vector<int>& img,
                       std::vector<int>& known) {
  for (size_t qi = 0; qi < known.size(); ++qi) {
    int x = known[qi];
    for (size_t j = 0; j < known.size(); ++j) {
      int w = known[j];
      const int pairs[2][2] = {{x, w}, {w, x}};
      for (const auto& pr : pairs) {
        int xy = a.at(pr[0], pr[1]);
        int im = b.at(img[pr[0]], img[pr[1]]);
        if (img[xy] < 0) {
          img[xy] = im;
          known.push_back(xy);
        } else if (img[xy] != im) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool iso_backtrack(const Group& a, const Group& b,
                          const std::vector<int>& gens, size_t k,
                          const ElementProfile& pa, const ElementProfile& pb,
                          std::vector<int>& img, std::vector<int>& known,
                          const std::vector<int>& first_candidates) {
  if (k == gens.size()) {
    if (int(known.size()) != a.n) return false;  // not surjective on domain
    // bijectivity of the image
    std::vector<char> hit(b.n, 0);
    for (int v : img)
      if (v < 0 || hit[v])
        return false;
      else
        hit[v] = 1;
    return true;
  }
  int gen = gens[k];
  const std::vector<int>* cands = nullptr;
  std::vector<int> all;
  if (k == 0) {
    cands = &first_candidates;
  } else {
    for (int y = 0; y < b.n; ++y)
      if (pb.per_element[y] == pa.per_element[gen]) all.push_back(y);
    cands = &all;
  }
  for (int y : *cands) {
    if (pb.per_element[y] != pa.per_element[gen]) continue;
    std::vector<int> img2 = img;
    std::vector<int> known2 = known;
    if (img2[gen] >= 0) {
      if (img2[gen] != y) continue;
    } else {
      img2[gen] = y;
      known2.push_back(gen);
    }
    if (!extend_hom(a, b, img2, known2)) continue;
    if (iso_backtrack(a, b, gens, k + 1, pa, pb, img2, known2,
                      first_candidates))
      return true;
  }
  return false;
}

}  // namespace detail

inline bool is_isomorphic(const Group& a, const Group& b) {
  if (a.n != b.n) return false;
  if (a.n == 1) return true;
  bool ab_a = is_abelian(a), ab_b = is_abelian(b);
  if (ab_a != ab_b) return false;
  if (order_histogram(a) != order_histogram(b)) return false;
  if (ab_a) return true;  // histogram decides for abelian groups
  detail::ElementProfile pa = detail::element_profile(a);
  detail::ElementProfile pb = detail::element_profile(b);
  if (pa.sorted != pb.sorted) return false;
  std::vector<int> gens = detail::generating_sequence(a);
  // first generator: one candidate per conjugacy class of b (any iso can be
  // post-composed with conjugation), profile-filtered
  std::vector<int> first;
  {
    std::vector<char> seen(b.n, 0);
    for (int y = 0; y < b.n; ++y) {
      if (seen[y]) continue;
      for (int t = 0; t < b.n; ++t) seen[b.at(b.at(t, y), b.inv[t])] = 1;
      if (pb.per_element[y] == pa.per_element[gens[0]]) first.push_back(y);
    }
  }
  std::vector<int> img(a.n, -1);
  img[0] = 0;
  std::vector<int> known{0};
  return detail::iso_backtrack(a, b, gens, 0, pa, pb, img, known, first);
}

}  // namespace cdlat
