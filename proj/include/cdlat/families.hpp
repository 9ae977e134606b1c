#pragma once

// Named group families: cyclic, dihedral, generalized quaternion, modular
// M_{p^k}, extraspecial p^3 of exponent p^2, symmetric groups, and direct
// products of these — built as explicit normal-form tables (elements a^i b^j)
// rather than by coset enumeration.  Includes the family-spec mini-language
// used by the CLI ("c 12", "q 8 x c 3", "s3", ...).

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cdlat/errors.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

inline std::string word_label(const char* base, long e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return std::string(base) + "^" + std::to_string(e);
}

inline std::string pair_label(long i, long j) {
  std::string a = word_label("a", i), b = word_label("b", j);
  if (a == "1") return b;
  if (b == "1") return a;
  return a + " " + b;
}

}  // namespace detail

inline Group cyclic(int n) {
  if (n < 1) throw InvalidFamilyParameters("cyclic order must be >= 1");
  std::vector<uint16_t> mul(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[size_t(a) * n + b] = uint16_t((a + b) % n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = detail::word_label("a", i);
  return group_from_table(n, std::move(mul), "C" + std::to_string(n),
                          std::move(labels));
}

// Dihedral group of the given order (symmetries of an order/2-gon).
// Element (i, j) = r^i s^j at index i*2 + j; s r s = r^-1.
inline Group dihedral(int order) {
  if (order < 4 || order % 2 != 0)
    throw InvalidFamilyParameters("dihedral order must be even and >= 4");
  const int m = order / 2;
  std::vector<uint16_t> mul(size_t(order) * order);
  auto idx = [&](int i, int j) { return i * 2 + j; };
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2): move s^j1 past r^i2
          int i = j1 ? (i1 - i2 + m) % m : (i1 + i2) % m;
          mul[size_t(idx(i1, j1)) * order + idx(i2, j2)] =
              uint16_t(idx(i, (j1 + j2) % 2));
        }
  std::vector<std::string> labels(order);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j) {
      std::string r = detail::word_label("r", i);
      labels[idx(i, j)] = j ? (r == "1" ? "s" : r + " s") : r;
    }
  return group_from_table(order, std::move(mul), "D" + std::to_string(order),
                          std::move(labels));
}

// Generalized quaternion group of order 2^k (k >= 3):
// <a, b | a^(2^(k-1)) = 1, b^2 = a^(2^(k-2)), b a b^-1 = a^-1>.
// Element (i, j) = a^i b^j at index i*2 + j.
inline Group generalized_quaternion(int order) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw InvalidFamilyParameters(
        "generalized quaternion order must be 2^k with k >= 3");
  const int m = order / 2;   // order of a
  const int h = order / 4;   // b^2 = a^h
  std::vector<uint16_t> mul(size_t(order) * order);
  auto idx = [&](int i, int j) { return i * 2 + j; };
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 ? (i1 - i2 + m) % m : (i1 + i2) % m;
          int j = j1 + j2;
          if (j == 2) {      // b^2 folds to a^h
            i = (i + h) % m;
            j = 0;
          }
          mul[size_t(idx(i1, j1)) * order + idx(i2, j2)] = uint16_t(idx(i, j));
        }
  std::vector<std::string> labels(order);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j) labels[idx(i, j)] = detail::pair_label(i, j);
  return group_from_table(order, std::move(mul), "Q" + std::to_string(order),
                          std::move(labels));
}

// Modular group M_{p^k} (k >= 3):
// <a, b | a^(p^(k-1)) = 1, b^p = 1, b a b^-1 = a^(p^(k-2)+1)>.
// Element (i, j) = a^i b^j at index i*p + j.
inline Group modular_mpk(int p, int k) {
  if (!is_prime(p) || k < 3)
    throw InvalidFamilyParameters("modular group needs prime p and k >= 3");
  long m = 1;
  for (int t = 0; t < k - 1; ++t) m *= p;
  const long order = m * p;
  if (order > max_group_order())
    throw GroupTooLarge("M_{p^k} order " + std::to_string(order) +
                        " exceeds cap");
  const long r = m / p + 1;  // p^(k-2) + 1
  // rpow[j] = r^j mod p^(k-1)
  std::vector<long> rpow(p, 1);
  for (int j = 1; j < p; ++j) rpow[j] = (rpow[j - 1] * r) % m;
  const int n = int(order);
  std::vector<uint16_t> mul(size_t(n) * n);
  auto idx = [&](long i, long j) { return int(i * p + j); };
  for (long i1 = 0; i1 < m; ++i1)
    for (long j1 = 0; j1 < p; ++j1)
      for (long i2 = 0; i2 < m; ++i2)
        for (long j2 = 0; j2 < p; ++j2) {
          // b^j1 a^i2 = a^(i2 r^j1) b^j1
          long i = (i1 + i2 * rpow[j1]) % m;
          mul[size_t(idx(i1, j1)) * n + idx(i2, j2)] =
              uint16_t(idx(i, (j1 + j2) % p));
        }
  std::vector<std::string> labels(n);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < p; ++j) labels[idx(i, j)] = detail::pair_label(i, j);
  return group_from_table(n, std::move(mul), "M" + std::to_string(order),
                          std::move(labels));
}

// Extraspecial group of order p^3 and exponent p^2 (p odd prime) — the
// modular group M_{p^3}.
inline Group extraspecial_p3_exp_p2(int p) {
  if (!is_prime(p) || p == 2)
    throw InvalidFamilyParameters(
        "extraspecial p^3 of exponent p^2 needs an odd prime");
  Group g = modular_mpk(p, 3);
  g.name = "ES" + std::to_string(p * p * p) + "e2";
  return g;
}

// The other extraspecial group of order p^3 (odd p): exponent p, realized as
// upper unitriangular 3x3 matrices over F_p.  Element (a,b,c) is x^a y^b z^c
// with z central and [x,y] = z; index = (a*p + b)*p + c.
inline Group extraspecial_p3_exp_p(int p) {
  if (!is_prime(p) || p == 2)
    throw InvalidFamilyParameters(
        "extraspecial p^3 of exponent p needs an odd prime");
  const int n = p * p * p;
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < p; ++b1)
      for (int c1 = 0; c1 < p; ++c1)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2) {
              const int i = (a1 * p + b1) * p + c1;
              const int j = (a2 * p + b2) * p + c2;
              const int a = (a1 + a2) % p;
              const int b = (b1 + b2) % p;
              const int c = (c1 + c2 + a1 * b2) % p;
              mul[static_cast<size_t>(i) * n + j] =
                  static_cast<uint16_t>((a * p + b) * p + c);
            }
  std::vector<std::string> labels(n);
  const auto piece = [](const char* base, int e) {
    return e ? detail::word_label(base, e) : std::string();
  };
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        std::string lab = piece("x", a) + piece("y", b) + piece("z", c);
        labels[(a * p + b) * p + c] = lab.empty() ? "1" : lab;
      }
  return group_from_table(n, std::move(mul), "He" + std::to_string(p),
                          std::move(labels));
}

// Symmetric group on s symbols, via its composition table.
inline Group symmetric(int s) {
  if (s < 1) throw InvalidFamilyParameters("symmetric degree must be >= 1");
  long fact = 1;
  for (int t = 2; t <= s; ++t) fact *= t;
  if (fact > max_group_order())
    throw GroupTooLarge("S" + std::to_string(s) + " exceeds order cap");
  std::vector<std::vector<int>> perms;
  std::vector<int> cur(s);
  std::iota(cur.begin(), cur.end(), 0);
  do {
    perms.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  // identity is lexicographically first already
  const int n = int(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index.emplace(perms[i], i);
  std::vector<uint16_t> mul(size_t(n) * n);
  std::vector<int> prod(s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < s; ++x) prod[x] = perms[i][perms[j][x]];
      mul[size_t(i) * n + j] = uint16_t(index.at(prod));
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string lab = "[";
    for (int x = 0; x < s; ++x)
      lab += (x ? " " : "") + std::to_string(perms[i][x]);
    labels[i] = lab + "]";
  }
  return group_from_table(n, std::move(mul), "S" + std::to_string(s),
                          std::move(labels));
}

// ---------------------------------------------------------------------------
// FamilySpec: parsed form of the CLI mini-language.
//   spec  := term ("x" term)*
//   term  := "c" n | "d" n | "q" n | "m" p k | "es" p | "s" n
// Tokens may be glued to their first number ("s3" == "s 3").
// ---------------------------------------------------------------------------

enum class FamilyKind {
  cyclic,
  dihedral,
  generalized_quaternion,
  modular_mpk,
  extraspecial_p3_exp_p2,
  symmetric,
  direct_product,
};

struct FamilySpec {
  FamilyKind kind;
  std::vector<long> parameters;      // family parameters (n, or p and k)
  std::vector<FamilySpec> factors;   // for direct_product only
};

namespace detail {

inline std::vector<std::string> family_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string w;
  while (in >> w) {
    // split a glued alpha prefix from a numeric tail: "s3" -> "s", "3"
    size_t cut = 0;
    while (cut < w.size() && std::isalpha(static_cast<unsigned char>(w[cut])))
      ++cut;
    if (cut > 0 && cut < w.size()) {
      out.push_back(w.substr(0, cut));
      out.push_back(w.substr(cut));
    } else {
      out.push_back(w);
    }
  }
  return out;
}

inline long family_number(const std::vector<std::string>& toks, size_t& i,
                          const std::string& what) {
  if (i >= toks.size())
    throw InvalidFamilyParameters("expected " + what + " at end of spec");
  try {
    size_t used = 0;
    long v = std::stol(toks[i], &used);
    if (used != toks[i].size() || v <= 0) throw std::invalid_argument("");
    ++i;
    return v;
  } catch (const std::exception&) {
    throw InvalidFamilyParameters("expected " + what + ", got '" + toks[i] +
                                  "'");
  }
}

}  // namespace detail

inline FamilySpec parse_family_spec(const std::string& text) {
  auto toks = detail::family_tokens(text);
  if (toks.empty()) throw InvalidFamilyParameters("empty group spec");
  std::vector<FamilySpec> factors;
  size_t i = 0;
  while (i < toks.size()) {
    std::string kind = toks[i];
    std::transform(kind.begin(), kind.end(), kind.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    ++i;
    FamilySpec term;
    if (kind == "c") {
      term = {FamilyKind::cyclic,
              {detail::family_number(toks, i, "cyclic order")},
              {}};
    } else if (kind == "d") {
      term = {FamilyKind::dihedral,
              {detail::family_number(toks, i, "dihedral order")},
              {}};
    } else if (kind == "q") {
      term = {FamilyKind::generalized_quaternion,
              {detail::family_number(toks, i, "quaternion order")},
              {}};
    } else if (kind == "m") {
      long p = detail::family_number(toks, i, "prime p");
      long k = detail::family_number(toks, i, "exponent k");
      term = {FamilyKind::modular_mpk, {p, k}, {}};
    } else if (kind == "es") {
      term = {FamilyKind::extraspecial_p3_exp_p2,
              {detail::family_number(toks, i, "prime p")},
              {}};
    } else if (kind == "s") {
      term = {FamilyKind::symmetric,
              {detail::family_number(toks, i, "symmetric degree")},
              {}};
    } else {
      throw InvalidFamilyParameters("unknown family '" + kind + "'");
    }
    factors.push_back(std::move(term));
    if (i < toks.size()) {
      std::string sep = toks[i];
      std::transform(sep.begin(), sep.end(), sep.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (sep != "x")
        throw InvalidFamilyParameters("expected 'x' between factors, got '" +
                                      toks[i] + "'");
      ++i;
      if (i >= toks.size())
        throw InvalidFamilyParameters("trailing 'x' in group spec");
    }
  }
  if (factors.size() == 1) return factors[0];
  FamilySpec prod{FamilyKind::direct_product, {}, std::move(factors)};
  return prod;
}

inline Group build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::cyclic:
      return cyclic(int(spec.parameters.at(0)));
    case FamilyKind::dihedral:
      return dihedral(int(spec.parameters.at(0)));
    case FamilyKind::generalized_quaternion:
      return generalized_quaternion(int(spec.parameters.at(0)));
    case FamilyKind::modular_mpk:
      return modular_mpk(int(spec.parameters.at(0)),
                         int(spec.parameters.at(1)));
    case FamilyKind::extraspecial_p3_exp_p2:
      return extraspecial_p3_exp_p2(int(spec.parameters.at(0)));
    case FamilyKind::symmetric:
      return symmetric(int(spec.parameters.at(0)));
    case FamilyKind::direct_product: {
      if (spec.factors.empty())
        throw InvalidFamilyParameters("empty direct product");
      Group acc = build_family(spec.factors[0]);
      for (size_t i = 1; i < spec.factors.size(); ++i)
        acc = direct_product(acc, build_family(spec.factors[i]));
      return acc;
    }
  }
  throw InvalidFamilyParameters("unhandled family kind");
}

inline Group build_group(const std::string& spec_text) {
  return build_family(parse_family_spec(spec_text));
}

}  // namespace cdlat
