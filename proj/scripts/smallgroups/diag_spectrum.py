"""Diagnostic: does the 2-generated-subgroup spectrum finish the job?

Every subgroup generated by two elements is the closure of a pair of cyclic
subgroups, so enumerating those closures (memoised per pair) yields the full
multiset of 2-generated subgroups.  Classifying each by cheap statistics
gives an isomorphism invariant that sees subgroup structure directly.
"""

import time
from itertools import combinations

import numpy as np

import extensions as ex
import grouplib as gl


def cyclic_subgroups(mul):
    n = mul.shape[0]
    seen = {}
    cycs = []
    for x in range(1, n):
        members = [0]
        cur = x
        while cur != 0:
            members.append(cur)
            cur = int(mul[cur, x])
        key = tuple(sorted(members))
        if key not in seen:
            seen[key] = True
            cycs.append(np.array(key, dtype=np.int32))
    return cycs


def two_generated_spectrum(mul):
    cycs = cyclic_subgroups(mul)
    subs = {tuple(c.tolist()) for c in cycs}
    for i, j in combinations(range(len(cycs)), 2):
        seed = np.union1d(cycs[i], cycs[j])
        s = gl.subset_closure(mul, seed)
        subs.add(tuple(s.tolist()))
    hist = {}
    for members in subs:
        sub = gl.induced_table(mul, np.array(members, dtype=np.int64))
        so = gl.element_orders(sub)
        inv = gl.inverse_table(sub)
        key = (len(members), int(so.max()), bool(gl.is_abelian(sub)),
               int(gl.center(sub).size),
               int(gl.derived_subgroup(sub, inv).size))
        hist[key] = hist.get(key, 0) + 1
    return tuple(sorted(hist.items()))


def main():
    cache = {}
    for m in (3, 9, 27, 81):
        ex.groups_of_order(m, cache)

    t0 = time.time()
    sigs = {}
    total = 0
    slowest = 0.0
    for bi, base in enumerate(ex.groups_of_order(81, cache)):
        for table in ex.candidates_over_base(base, 3):
            total += 1
            t1 = time.time()
            spec = two_generated_spectrum(table)
            slowest = max(slowest, time.time() - t1)
            key = (gl.strong_signature(table), spec)
            sigs.setdefault(key, []).append(bi)
        print(f"base#{bi}: sigs so far {len(sigs)} ({time.time()-t0:.1f}s, "
              f"slowest spectrum {slowest:.2f}s)", flush=True)
    print(f"total {total}, distinct signatures {len(sigs)} (want 67)")


if __name__ == "__main__":
    main()
