"""Diagnostic: hunt for a cheap invariant separating the saved pair.

Loads the confirmed non-isomorphic pair that shares the full strong
signature and evaluates progressively richer invariants on both tables,
printing exactly which ones differ.
"""

import time
from itertools import combinations

import numpy as np

import grouplib as gl


def cyclic_subgroups(mul):
    n = mul.shape[0]
    seen = set()
    cycs = []
    for x in range(1, n):
        members = [0]
        cur = x
        while cur != 0:
            members.append(cur)
            cur = int(mul[cur, x])
        key = tuple(sorted(members))
        if key not in seen:
            seen.add(key)
            cycs.append(np.array(key, dtype=np.int32))
    return cycs


def two_generated_subgroups(mul):
    cycs = cyclic_subgroups(mul)
    subs = {tuple(c.tolist()) for c in cycs}
    for i, j in combinations(range(len(cycs)), 2):
        seed = np.union1d(cycs[i], cycs[j])
        s = gl.subset_closure(mul, seed)
        subs.add(tuple(s.tolist()))
    return [np.array(s, dtype=np.int64) for s in sorted(subs)]


def embedded_spectrum(mul):
    """2-generated subgroups classified with embedding data: normalizer and
    centralizer orders, normality, and the order profile of the subgroup."""
    n = mul.shape[0]
    inv = gl.inverse_table(mul)
    conj = mul[mul, inv[:, None]]
    commute = mul == mul.T
    hist = {}
    for members in two_generated_subgroups(mul):
        mask = np.zeros(n, dtype=bool)
        mask[members] = True
        inside = mask[conj[:, members]].all(axis=1)   # x with x S x^-1 = S
        norm = int(inside.sum())
        cent = int(commute[:, members].all(axis=1).sum())
        sub = gl.induced_table(mul, members)
        so = gl.element_orders(sub)
        key = (len(members), int(so.max()), bool(gl.is_abelian(sub)),
               int(gl.center(sub).size), norm, cent)
        hist[key] = hist.get(key, 0) + 1
    return tuple(sorted(hist.items()))


def conjugacy_orbit_spectrum(mul):
    """Counts of conjugation orbits of 2-generated subgroups by type."""
    n = mul.shape[0]
    inv = gl.inverse_table(mul)
    conj = mul[mul, inv[:, None]]
    subs = two_generated_subgroups(mul)
    keys = {tuple(s.tolist()): i for i, s in enumerate(subs)}
    seen = set()
    hist = {}
    for members in subs:
        k0 = tuple(members.tolist())
        if k0 in seen:
            continue
        orbit = {k0}
        frontier = [members]
        while frontier:
            cur = frontier.pop()
            for x in range(n):
                img = tuple(sorted(conj[x, cur].tolist()))
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(np.array(img, dtype=np.int64))
        seen |= orbit
        sub = gl.induced_table(mul, members)
        so = gl.element_orders(sub)
        key = (len(members), int(so.max()), bool(gl.is_abelian(sub)),
               len(orbit))
        hist[key] = hist.get(key, 0) + 1
    return tuple(sorted(hist.items()))


def aut_order(mul):
    return len(gl.automorphisms(mul))


def main():
    a = np.load("pair0_a.npy")
    b = np.load("pair0_b.npy")
    print("strong signatures equal:",
          gl.strong_signature(a) == gl.strong_signature(b), flush=True)
    for name, fn in (
        ("embedded 2-generated spectrum", embedded_spectrum),
        ("conjugacy-orbit spectrum", conjugacy_orbit_spectrum),
        ("automorphism group order", aut_order),
    ):
        t0 = time.time()
        va = fn(a)
        vb = fn(b)
        verdict = "DIFFER" if va != vb else "equal"
        print(f"{name}: {verdict} ({time.time()-t0:.1f}s)", flush=True)
        if va != vb and not isinstance(va, int):
            sa, sb = set(va), set(vb)
            print("  only in a:", sorted(sa - sb)[:6])
            print("  only in b:", sorted(sb - sa)[:6])
        elif va != vb:
            print(f"  a: {va}  b: {vb}")


if __name__ == "__main__":
    main()
