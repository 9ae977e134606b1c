#pragma once

// Catalog text format (permutation-generator group definitions), family
// name matching, and the deterministic JSON sweep report.

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cdlat/errors.hpp"
#include "cdlat/families.hpp"
#include "cdlat/group.hpp"
#include "cdlat/iso.hpp"
#include "cdlat/subgroup.hpp"

namespace cdlat {

// Permutation degree cap: keeps left-regular-representation exports of every
// bundled order (up to 243) parseable while still bounding input size.
inline constexpr int kMaxCatalogDegree = 256;

// One externally defined group: permutation generators plus bookkeeping.
// `id` is the entry's position among groups of its order in the source
// catalog's own numbering.
struct CatalogEntry {
  int order = 0;
  int id = 0;
  std::string name;
  int degree = 0;
  std::vector<std::vector<int>> generators;
};

// One row of a sweep/verification report.
struct SweepRecord {
  int order = 0;
  int id = 0;
  std::string name;
  int delta = 0;
  long long m_star = 0;
  int cd_size = 0;
  int total_subgroups = 0;
  bool nilpotent = false;
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  std::string iso_name;
};

inline std::string catalog_group_name(const CatalogEntry& e) {
  if (!e.name.empty()) return e.name;
  return "G" + std::to_string(e.order) + "#" + std::to_string(e.id);
}

inline Group build_entry(const CatalogEntry& e) {
  return build_from_generators(e.degree, e.generators, e.order,
                               catalog_group_name(e));
}

inline std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  CatalogEntry cur;
  bool open = false;
  std::string line;
  int lineno = 0;

  const auto flush = [&](int at_line) {
    if (!open) return;
    if (cur.generators.empty())
      throw ParseError(at_line, "group entry has no generator lines");
    build_entry(cur);  // validates: throws OrderMismatch on a bad entry
    out.push_back(std::move(cur));
    cur = CatalogEntry{};
    open = false;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) {  // blank (or comment-only) line ends the entry
      flush(lineno);
      continue;
    }
    if (tok == "group") {
      flush(lineno);
      if (!(ls >> cur.order >> cur.id))
        throw ParseError(lineno, "expected: group <order> <id> [<name>]");
      if (cur.order <= 0 || cur.id <= 0)
        throw ParseError(lineno, "order and id must be positive");
      std::string piece;
      while (ls >> piece) {
        if (!cur.name.empty()) cur.name += ' ';
        cur.name += piece;
      }
      open = true;
    } else if (tok == "gen") {
      if (!open) throw ParseError(lineno, "gen line outside a group entry");
      std::vector<int> img;
      int v = 0;
      while (ls >> v) img.push_back(v);
      if (!ls.eof()) throw ParseError(lineno, "non-integer image value");
      if (img.empty()) throw ParseError(lineno, "empty generator line");
      if (cur.generators.empty()) {
        if (static_cast<int>(img.size()) > kMaxCatalogDegree)
          throw ParseError(lineno, "degree exceeds the catalog cap of " +
                                       std::to_string(kMaxCatalogDegree));
        cur.degree = static_cast<int>(img.size());
      } else if (static_cast<int>(img.size()) != cur.degree) {
        throw ParseError(lineno, "generator degree differs from the first");
      }
      std::vector<char> seen(cur.degree, 0);
      for (const int x : img) {
        if (x < 0 || x >= cur.degree)
          throw ParseError(lineno, "image value out of range");
        if (seen[x]) throw ParseError(lineno, "generator is not a bijection");
        seen[x] = 1;
      }
      cur.generators.push_back(std::move(img));
    } else {
      throw ParseError(lineno, "unknown directive '" + tok + "'");
    }
  }
  flush(lineno);
  return out;
}

inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    if (c == '"')
      out += "\\\"";
    else if (c == '\\')
      out += "\\\\";
    else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

inline int int_log(long long value, int base) {
  int e = 0;
  while (value > 1) {
    value /= base;
    ++e;
  }
  return e;
}

}  // namespace detail

// Invariant-factor name of an abelian group ("C12", "C16xC2", ...), derived
// from the order histogram alone (which classifies abelian groups).
inline std::string abelian_iso_name(const Group& g) {
  if (g.n == 1) return "C1";
  const auto hist = order_histogram(g);
  // Per prime: partition lambda with parts lambda[0] >= lambda[1] >= ...
  std::vector<std::pair<int, std::vector<int>>> lambdas;
  for (const int p : prime_divisors(g.n)) {
    int a = 0;
    int m = g.n;
    while (m % p == 0) {
      ++a;
      m /= p;
    }
    // c[i] = #elements of order dividing p^i; #parts >= i = log_p(c_i/c_{i-1})
    std::vector<long long> c(a + 1, 0);
    c[0] = 1;
    long long pi = 1;
    for (int i = 1; i <= a; ++i) {
      pi *= p;
      for (const auto& [o, cnt] : hist)
        if (pi % o == 0) c[i] += cnt;
    }
    std::vector<int> ge(a);
    for (int i = 1; i <= a; ++i) ge[i - 1] = detail::int_log(c[i] / c[i - 1], p);
    std::vector<int> lam;
    for (int j = 0; j < ge[0]; ++j) {
      int part = 0;
      for (const int v : ge)
        if (v > j) ++part;
      lam.push_back(part);
    }
    lambdas.emplace_back(p, std::move(lam));
  }
  size_t k = 0;
  for (const auto& [p, lam] : lambdas) k = std::max(k, lam.size());
  std::string out;
  for (size_t i = 0; i < k; ++i) {
    long long d = 1;
    for (const auto& [p, lam] : lambdas)
      if (i < lam.size())
        for (int e = 0; e < lam[i]; ++e) d *= p;
    if (!out.empty()) out += 'x';
    out += 'C' + std::to_string(d);
  }
  return out;
}

// Best-effort match against the named families; empty string when no match.
// Candidate order matters (D6 is reported before S3 for the order-6
// nonabelian group) and is fixed so names stay stable across runs.
inline std::string family_iso_name(const Group& g) {
  if (is_abelian(g)) return abelian_iso_name(g);
  std::vector<std::pair<std::string, Group>> candidates;
  if (g.n >= 6 && g.n % 2 == 0)
    candidates.emplace_back("D" + std::to_string(g.n), dihedral(g.n));
  if (g.n >= 8 && (g.n & (g.n - 1)) == 0)
    candidates.emplace_back("Q" + std::to_string(g.n),
                            generalized_quaternion(g.n));
  for (const int p : prime_divisors(g.n)) {
    int k = 0;
    int m = g.n;
    while (m % p == 0) {
      ++k;
      m /= p;
    }
    if (m == 1 && k >= 3) {
      candidates.emplace_back("M" + std::to_string(g.n), modular_mpk(p, k));
      if (k == 3 && p > 2)
        candidates.emplace_back("He" + std::to_string(p),
                                extraspecial_p3_exp_p(p));
    }
  }
  if (g.n == 6) candidates.emplace_back("S3", symmetric(3));
  if (g.n == 24) candidates.emplace_back("S4", symmetric(4));
  for (const auto& [name, target] : candidates)
    if (is_isomorphic(g, target)) return name;
  return "";
}

// Deterministic JSON: keys sorted, records ordered by (order, id); running
// twice on the same input yields byte-identical output.
inline void write_report(const std::vector<SweepRecord>& records,
                         std::ostream& os) {
  std::vector<SweepRecord> rs = records;
  std::stable_sort(rs.begin(), rs.end(),
                   [](const SweepRecord& a, const SweepRecord& b) {
                     return std::pair(a.order, a.id) < std::pair(b.order, b.id);
                   });
  if (rs.empty()) {
    os << "[]\n";
    return;
  }
  const auto lit = [](bool b) { return b ? "true" : "false"; };
  os << "[\n";
  for (size_t i = 0; i < rs.size(); ++i) {
    const SweepRecord& r = rs[i];
    os << " {\"cd_size\": " << r.cd_size << ", \"cond1\": " << lit(r.cond1)
       << ", \"cond2\": " << lit(r.cond2) << ", \"cond3\": " << lit(r.cond3)
       << ", \"delta\": " << r.delta << ", \"id\": " << r.id
       << ", \"iso_name\": \"" << detail::json_escape(r.iso_name)
       << "\", \"m_star\": " << r.m_star << ", \"name\": \""
       << detail::json_escape(r.name) << "\", \"nilpotent\": "
       << lit(r.nilpotent) << ", \"order\": " << r.order
       << ", \"total_subgroups\": " << r.total_subgroups << '}'
       << (i + 1 < rs.size() ? ",\n" : "\n");
  }
  os << "]\n";
}

inline std::string report_to_string(const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  write_report(records, os);
  return os.str();
}

}  // namespace cdlat
