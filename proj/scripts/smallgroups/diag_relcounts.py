"""Diagnostic: do relation-solution counts separate the order-243 classes?

For small two-generator presentations the number of solutions of the
defining relations in G (= |Hom(H, G)|) is an isomorphism invariant and is
computable by vectorised table lookups.  This measures how many distinct
(signature, WL, relation-count) values appear across the candidate pool.
"""

import time

import numpy as np

import extensions as ex
import grouplib as gl


def initial_classes(mul):
    iv = gl.element_invariants(mul, gl.inverse_table(mul))
    order = sorted(range(mul.shape[0]), key=lambda x: iv[x])
    c = np.empty(mul.shape[0], dtype=np.int64)
    rank, prev = 0, None
    for x in order:
        if iv[x] != prev:
            prev = iv[x]
            rank += 1
        c[x] = rank - 1
    return c


def rich_wl_signature(mul):
    n = mul.shape[0]
    inv = gl.inverse_table(mul)
    conj = mul[mul, inv[:, None]]
    comm = mul[mul, inv[mul.T]]
    c = initial_classes(mul)
    k = int(c.max()) + 1
    while True:
        combo = ((c[None, :] * k + c[mul]) * k + c[mul.T]) * k + c[conj]
        combo = combo * k + c[comm]
        hists = []
        for x in range(n):
            u, cnt = np.unique(combo[x], return_counts=True)
            hists.append((int(c[x]),) + tuple(zip(u.tolist(), cnt.tolist())))
        order = sorted(range(n), key=lambda x: hists[x])
        c2 = np.empty(n, dtype=np.int64)
        rank, prev = 0, None
        for x in order:
            if hists[x] != prev:
                prev = hists[x]
                rank += 1
            c2[x] = rank - 1
        k2 = int(c2.max()) + 1
        if k2 == k:
            cells = sorted(
                (int((c2 == i).sum()), hists[int(np.argmax(c2 == i))][1:])
                for i in range(k2)
            )
            return (k2, tuple(cells))
        c, k = c2, k2


def power_map(mul, e):
    n = mul.shape[0]
    ar = np.arange(n)
    acc = np.zeros(n, dtype=np.int64)
    for _ in range(e):
        acc = mul[acc, ar]
    return acc


def relation_counts(mul):
    """Solution counts of a basket of two-generator relation systems."""
    n = mul.shape[0]
    inv = gl.inverse_table(mul)
    commute = mul == mul.T
    comm = mul[mul, inv[mul.T]]          # comm[x,y] = x y x^-1 y^-1
    conj = mul[mul, inv[:, None]]        # conj[x,y] = x y x^-1
    pw = {e: power_map(mul, e) for e in (3, 4, 7, 9, 10, 19, 27)}
    counts = []

    # metacyclic patterns: a^ea = 1, b^eb = 1, b a b^-1 = a^k
    for ea, eb, k in ((9, 3, 4), (9, 3, 7), (27, 3, 10), (27, 3, 19),
                      (9, 9, 4), (9, 9, 7), (27, 9, 10)):
        A = np.where(pw[ea] == 0)[0]
        B = np.where(pw[eb] == 0)[0]
        if not len(A) or not len(B):
            counts.append(0)
            continue
        target = pw[k][A]                # a^k for each a
        got = conj[np.ix_(B, A)]         # b a b^-1
        counts.append(int((got == target[None, :]).sum()))

    # Heisenberg-like patterns: a^ea = b^eb = 1 with [a,b] central in <a,b>
    for ea, eb in ((3, 3), (9, 3), (9, 9)):
        A = np.where(pw[ea] == 0)[0]
        B = np.where(pw[eb] == 0)[0]
        if not len(A) or not len(B):
            counts.append(0)
            continue
        c = comm[np.ix_(A, B)]
        ok = commute[c, A[:, None]] & commute[c, B[None, :]]
        counts.append(int(ok.sum()))

    # commuting triples of elements with x^3 = 1 (copies of C3^3 and below)
    A = np.where(pw[3] == 0)[0]
    R = commute[np.ix_(A, A)]
    counts.append(int(np.einsum("ij,ik,jk->", R, R, R)))

    # class-3 patterns: a^ea = b^eb = 1, [[a,b],a] and [[a,b],b] central
    zc = np.zeros(n, dtype=bool)
    zc[np.asarray(sorted(map(int, gl.center(mul))))] = True
    for ea, eb in ((9, 3), (3, 3), (9, 9)):
        A = np.where(pw[ea] == 0)[0]
        B = np.where(pw[eb] == 0)[0]
        if len(A) and len(B):
            c = comm[np.ix_(A, B)]
            ca = comm[c, A[:, None]]     # [[a,b],a]
            cb = comm[c, B[None, :]]     # [[a,b],b]
            counts.append(int((zc[ca] & zc[cb]).sum()))
        else:
            counts.append(0)

    # power-equality and commutator-power patterns over all pairs
    cube = pw[3]
    counts.append(int((cube[:, None] == cube[None, :]).sum()))          # a^3=b^3
    counts.append(int(((cube[:, None] == cube[None, :]) & commute).sum()))
    counts.append(int((comm == cube[:, None]).sum()))                   # [a,b]=a^3
    B3 = np.where(cube == 0)[0]
    counts.append(int((comm[:, B3] == cube[:, None]).sum()))            # ... b^3=1

    # Burnside pattern: a^3 = b^3 = (ab)^3 = 1
    A = B3
    if len(A):
        prod_ab = mul[np.ix_(A, A)]
        counts.append(int((cube[prod_ab] == 0).sum()))
    else:
        counts.append(0)
    return tuple(counts)


def main():
    cache = {}
    for m in (3, 9, 27, 81):
        ex.groups_of_order(m, cache)

    t0 = time.time()
    sigs = {}
    total = 0
    for bi, base in enumerate(ex.groups_of_order(81, cache)):
        for table in ex.candidates_over_base(base, 3):
            total += 1
            key = (gl.signature(table), rich_wl_signature(table),
                   relation_counts(table))
            sigs.setdefault(key, []).append(bi)
        print(f"base#{bi}: sigs so far {len(sigs)} ({time.time()-t0:.1f}s)",
              flush=True)
    print(f"total {total}, distinct signatures {len(sigs)} (want 67)")


if __name__ == "__main__":
    main()
