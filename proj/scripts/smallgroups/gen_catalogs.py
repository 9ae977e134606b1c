"""Generate the bundled group catalogs (permutation-generator text files).

Usage:  python3 scripts/smallgroups/gen_catalogs.py  [outdir]

Produces, under <outdir> (default data/catalogs):
    orders_1_32.txt   all 144 groups of orders 1..32
    order_32.txt      the 51 groups of order 32
    order_81.txt      the 15 groups of order 81
    order_243.txt     the 67 groups of order 243

Entries use the left-regular representation (degree = group order), so every
generator line is a permutation row of the multiplication table.  Ids are
positions in this generator's deterministic ordering (abelian groups first,
sorted by invariant signature) — they are specific to these files, not to any
other small-groups database.  Each file is validated by rebuilding every
entry from its generator lines and checking the group order.
"""

import os
import sys

import numpy as np

import grouplib as gl
import extensions as ex


def abelian_name(mul):
    """Invariant-factor name, e.g. C12, C16xC2, C2xC2."""
    n = mul.shape[0]
    if n == 1:
        return "C1"
    hist = dict(gl.order_histogram(mul))
    parts_per_prime = {}
    for p in ex.prime_factors(n):
        a = 0
        m = n
        while m % p == 0:
            a += 1
            m //= p
        # c_i = #elements of order dividing p^i; #parts >= i = log_p(c_i/c_{i-1})
        c = [1]
        for i in range(1, a + 1):
            c.append(sum(cnt for o, cnt in hist.items() if (p ** i) % o == 0))
        # ge[i-1] = #parts >= i; the partition itself is the conjugate of ge
        ge = [int(round(np.log(c[i] / c[i - 1]) / np.log(p))) for i in range(1, a + 1)]
        parts_per_prime[p] = [sum(1 for v in ge if v > j) for j in range(ge[0])]
    k = max(len(v) for v in parts_per_prime.values())
    factors = []
    for i in range(k):
        d = 1
        for p, lam in parts_per_prime.items():
            if i < len(lam):
                d *= p ** lam[i]
        factors.append(d)
    return "x".join(f"C{d}" for d in factors)


def named_table(mul):
    """Best-effort display name; empty string when no match."""
    n = mul.shape[0]
    if gl.is_abelian(mul):
        return abelian_name(mul)
    candidates = []
    if n >= 6 and n % 2 == 0:
        candidates.append((f"D{n}", gl.dihedral(n)))
    if n >= 8 and (n & (n - 1)) == 0:
        candidates.append((f"Q{n}", gl.generalized_quaternion(n)))
    for p in ex.prime_factors(n):
        k = 0
        m = n
        while m % p == 0:
            k += 1
            m //= p
        if m == 1 and k >= 3:
            candidates.append((f"M{n}", gl.modular_mpk(p, k)))
            if k == 3 and p > 2:
                candidates.append((f"He{p}", gl.extraspecial_exp_p(p)))
    if n == 6:
        candidates.append(("S3", gl.symmetric(3)))
    if n == 24:
        candidates.append(("S4", gl.symmetric(4)))
    for name, target in candidates:
        if gl.is_isomorphic(mul, target):
            return name
    return ""


def rebuild_order(gen_rows):
    """Order of the permutation group generated by the given image rows."""
    ident = tuple(range(len(gen_rows[0])))
    gens = [tuple(g) for g in gen_rows]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for q in frontier:
            for g in gens:
                prod = tuple(q[g[x]] for x in range(len(g)))  # (q o g)(x) = q(g(x))
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return len(seen)


def write_catalog(path, entries):
    """entries: list of (order, id, name, gen_rows)."""
    lines = [
        "# Small-groups catalog: one entry per isomorphism class.",
        "# Generated by scripts/smallgroups/gen_catalogs.py (cyclic-extension",
        "# enumeration; per-order class counts asserted against OEIS A000001).",
        "# Generators are left-regular-representation rows (degree = order).",
        "# Ids are positions in this file's deterministic ordering, specific",
        "# to this catalog.",
        "",
    ]
    for order, gid, name, gen_rows in entries:
        head = f"group {order} {gid}"
        if name:
            head += f" {name}"
        lines.append(head)
        for row in gen_rows:
            lines.append("gen " + " ".join(str(int(x)) for x in row))
        lines.append("")
    with open(path, "w") as fh:
        fh.write("\n".join(lines))


def entries_for_orders(orders, cache):
    out = []
    for n in orders:
        tables = ex.groups_of_order(n, cache)
        for gid, mul in enumerate(tables, start=1):
            name = named_table(mul)
            rows = gl.left_regular_generators(mul)
            assert rebuild_order(rows) == n, f"export of order {n} id {gid} does not regenerate"
            out.append((n, gid, name, rows))
    return out


def main(cache=None):
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "..", "data", "catalogs")
    outdir = os.path.abspath(outdir)
    os.makedirs(outdir, exist_ok=True)
    cache = {} if cache is None else cache
    files = [
        ("orders_1_32.txt", list(range(1, 33))),
        ("order_32.txt", [32]),
        ("order_81.txt", [81]),
        ("order_243.txt", [243]),
    ]
    for fname, orders in files:
        entries = entries_for_orders(orders, cache)
        path = os.path.join(outdir, fname)
        write_catalog(path, entries)
        print(f"{fname}: {len(entries)} entries")


if __name__ == "__main__":
    main()
