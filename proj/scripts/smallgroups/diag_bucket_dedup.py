"""Diagnostic: exact class counts inside signature buckets at order 243.

Builds the full candidate pool, buckets by the enriched signature, then runs
timed pairwise isomorphism tests inside each bucket.  Logs every slow or
timed-out pair so the pathological comparisons can be identified precisely.
"""

import signal
import time

import numpy as np

import extensions as ex
import grouplib as gl


def quotient_table(mul, normal):
    n = mul.shape[0]
    coset_min = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        if coset_min[x] < 0:
            members = mul[x, normal]
            coset_min[members] = int(members.min())
    reps = np.array(sorted(set(map(int, coset_min))), dtype=np.int64)
    index = {int(r): i for i, r in enumerate(reps)}
    q = coset_min[mul[np.ix_(reps, reps)]]
    return np.array([[index[int(v)] for v in row] for row in q], dtype=mul.dtype)


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


class PairTimeout(Exception):
    pass


def timed_iso(a, b, budget):
    def handler(signum, frame):
        raise PairTimeout()

    old = signal.signal(signal.SIGALRM, handler)
    signal.alarm(budget)
    try:
        return gl.is_isomorphic(a, b)
    finally:
        signal.alarm(0)
        signal.signal(signal.SIGALRM, old)


def main():
    cache = {}
    for n in (3, 9, 27, 81):
        ex.groups_of_order(n, cache)

    t0 = time.time()
    pool = {}
    for bi, base in enumerate(ex.groups_of_order(81, cache)):
        for table in ex.candidates_over_base(base, 3):
            key = (gl.signature(table), rich_wl_signature(table))
            pool.setdefault(key, []).append(table)
    print(f"pool: {sum(len(v) for v in pool.values())} candidates, "
          f"{len(pool)} buckets ({time.time()-t0:.1f}s)", flush=True)

    total_classes = 0
    timeouts = 0
    for i, (key, cands) in enumerate(sorted(pool.items(), key=lambda kv: len(kv[1]))):
        reps = []
        unknown = 0
        for ci, table in enumerate(cands):
            placed = False
            for ri, rep in enumerate(reps):
                t1 = time.time()
                try:
                    same = timed_iso(rep, table, 90)
                except PairTimeout:
                    timeouts += 1
                    unknown += 1
                    print(f"  bucket {i}: cand {ci} vs rep {ri} TIMEOUT", flush=True)
                    same = False
                else:
                    dt = time.time() - t1
                    if dt > 5:
                        print(f"  bucket {i}: cand {ci} vs rep {ri} -> {same} "
                              f"({dt:.1f}s)", flush=True)
                if same:
                    placed = True
                    break
            if not placed:
                reps.append(table)
        total_classes += len(reps)
        print(f"bucket {i}: {len(cands)} candidates -> {len(reps)} classes"
              f"{' (UNKNOWN ' + str(unknown) + ')' if unknown else ''} "
              f"[total {total_classes}] ({time.time()-t0:.1f}s)", flush=True)
    print(f"TOTAL classes: {total_classes} (want 67), timeouts {timeouts}")


if __name__ == "__main__":
    main()
