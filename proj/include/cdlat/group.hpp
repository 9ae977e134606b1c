#pragma once

// Finite groups as explicit multiplication tables.  Identity is always at
// index 0; construction validates the full group axioms (associativity
// exhaustively up to order 512).  All tables are immutable after build.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cdlat/errors.hpp"

namespace cdlat {

inline constexpr int kDefaultMaxOrder = 2048;
inline constexpr int kAssociativityCheckLimit = 512;

// Order cap; overridable through the CDLAT_MAX_ORDER environment variable.
inline int max_group_order() {
  if (const char* env = std::getenv("CDLAT_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return kDefaultMaxOrder;
}

struct Group {
  int n = 0;                        // order
  std::vector<uint16_t> mul;        // n*n row-major: mul[a*n+b] = a*b
  std::vector<uint16_t> inv;        // inverse of each element
  std::vector<std::string> labels;  // optional per-element display strings
  std::string name;                 // optional display name

  int at(int a, int b) const { return mul[size_t(a) * n + b]; }
};

namespace detail {

inline void check_group_axioms(Group& g) {
  const int n = g.n;
  if (n <= 0 || int(g.mul.size()) != n * n)
    throw Error("malformed multiplication table");
  // identity laws at index 0
  for (int x = 0; x < n; ++x) {
    if (g.at(0, x) != x || g.at(x, 0) != x)
      throw Error("element 0 is not an identity");
  }
  // Latin square (cancellation)
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = g.at(a, b);
      if (v < 0 || v >= n || seen[v]) throw Error("row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int v = g.at(a, b);
      if (seen[v]) throw Error("column is not a permutation");
      seen[v] = 1;
    }
  }
  // inverses
  g.inv.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b) {
      if (g.at(a, b) == 0) {
        if (g.at(b, a) != 0) throw Error("one-sided inverse");
        g.inv[a] = uint16_t(b);
        found = true;
        break;
      }
    }
    if (!found) throw Error("missing inverse");
  }
  // associativity: exhaustive up to the documented limit, skipped above
  if (n <= kAssociativityCheckLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = g.at(a, b);
        for (int c = 0; c < n; ++c)
          if (g.at(ab, c) != g.at(a, g.at(b, c)))
            throw Error("associativity fails");
      }
  }
}

}  // namespace detail

// Build a group from a complete multiplication table (validates everything).
inline Group group_from_table(int n, std::vector<uint16_t> mul,
                              std::string name = {},
                              std::vector<std::string> labels = {}) {
  Group g;
  g.n = n;
  g.mul = std::move(mul);
  g.name = std::move(name);
  g.labels = std::move(labels);
  detail::check_group_axioms(g);
  return g;
}

// Build the group generated by permutations of 0..degree-1 under composition
// (p*q)(x) = p(q(x)).  Element order is canonical: identity first, then
// breadth-first closure level by level, ties broken by lexicographic image.
inline Group build_from_generators(int degree,
                                   const std::vector<std::vector<int>>& gens,
                                   std::optional<long> expected_order = {},
                                   std::string name = {}) {
  using Perm = std::vector<int>;
  if (degree <= 0) throw Error("degree must be positive");
  for (const Perm& p : gens) {
    if (int(p.size()) != degree) throw Error("generator has wrong degree");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v])
        throw Error("generator is not a bijection");
      seen[v] = 1;
    }
  }
  const int cap = max_group_order();
  Perm ident(degree);
  std::iota(ident.begin(), ident.end(), 0);

  std::map<Perm, int> index;
  std::vector<Perm> elems{ident};
  index.emplace(ident, 0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<Perm> fresh;
    for (int i : frontier) {
      const Perm cur = elems[i];
      for (const Perm& gperm : gens) {
        Perm prod(degree);
        for (int x = 0; x < degree; ++x) prod[x] = cur[gperm[x]];
        if (!index.count(prod)) {
          index.emplace(prod, -1);  // placeholder marks membership
          fresh.push_back(std::move(prod));
        }
      }
    }
    std::sort(fresh.begin(), fresh.end());
    frontier.clear();
    for (Perm& p : fresh) {
      if (int(elems.size()) >= cap)
        throw GroupTooLarge("closure exceeds cap of " + std::to_string(cap));
      index[p] = int(elems.size());
      frontier.push_back(int(elems.size()));
      elems.push_back(std::move(p));
    }
  }
  const int n = int(elems.size());
  if (expected_order && *expected_order != n)
    throw OrderMismatch("generated order " + std::to_string(n) +
                        " differs from expected " +
                        std::to_string(*expected_order));
  Group g;
  g.n = n;
  g.mul.assign(size_t(n) * n, 0);
  Perm prod(degree);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < degree; ++x) prod[x] = elems[i][elems[j][x]];
      g.mul[size_t(i) * n + j] = uint16_t(index.at(prod));
    }
  }
  g.name = std::move(name);
  detail::check_group_axioms(g);
  return g;
}

// Componentwise product; pair (i, j) has index i*|h| + j.
inline Group direct_product(const Group& a, const Group& b) {
  long long n = (long long)a.n * b.n;
  if (n > max_group_order())
    throw GroupTooLarge("direct product order " + std::to_string(n) +
                        " exceeds cap");
  Group g;
  g.n = int(n);
  g.mul.assign(size_t(n) * n, 0);
  for (int i1 = 0; i1 < a.n; ++i1)
    for (int j1 = 0; j1 < b.n; ++j1)
      for (int i2 = 0; i2 < a.n; ++i2)
        for (int j2 = 0; j2 < b.n; ++j2) {
          int lhs = i1 * b.n + j1, rhs = i2 * b.n + j2;
          g.mul[size_t(lhs) * g.n + rhs] =
              uint16_t(a.at(i1, i2) * b.n + b.at(j1, j2));
        }
  if (!a.labels.empty() && !b.labels.empty()) {
    g.labels.resize(g.n);
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < b.n; ++j)
        g.labels[i * b.n + j] = "(" + a.labels[i] + "," + b.labels[j] + ")";
  }
  if (!a.name.empty() && !b.name.empty()) g.name = a.name + " x " + b.name;
  detail::check_group_axioms(g);
  return g;
}

inline int element_order(const Group& g, int x) {
  int acc = x, k = 1;
  while (acc != 0) {
    acc = g.at(acc, x);
    ++k;
  }
  return k;
}

inline bool is_abelian(const Group& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (g.at(a, b) != g.at(b, a)) return false;
  return true;
}

// (order of element, multiplicity) pairs — a cheap isomorphism invariant that
// is complete for abelian groups.
inline std::vector<std::pair<int, int>> order_histogram(const Group& g) {
  std::map<int, int> h;
  for (int x = 0; x < g.n; ++x) ++h[element_order(g, x)];
  return {h.begin(), h.end()};
}

}  // namespace cdlat
