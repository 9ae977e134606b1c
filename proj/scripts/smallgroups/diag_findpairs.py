"""Diagnostic: locate candidate pairs that share the strong signature but are
not isomorphic.  Tests one cross-pair per multi-candidate bucket (largest
buckets first, first-vs-last candidate) and saves any non-isomorphic pair
found, so a separating invariant can be developed against the real thing.
"""

import signal
import time

import numpy as np

import extensions as ex
import grouplib as gl


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
    for m in (3, 9, 27, 81):
        ex.groups_of_order(m, cache)

    t0 = time.time()
    pool = {}
    for bi, base in enumerate(ex.groups_of_order(81, cache)):
        for table in ex.candidates_over_base(base, 3):
            pool.setdefault(gl.strong_signature(table), []).append(table)
    sizes = sorted((len(v) for v in pool.values()), reverse=True)
    print(f"pool: {len(pool)} strong buckets ({time.time()-t0:.1f}s); "
          f"multi sizes {[s for s in sizes if s > 1]}", flush=True)

    found = 0
    order = sorted(enumerate(pool.items()),
                   key=lambda kv: -len(kv[1][1]))
    for bi, (key, cands) in order:
        if len(cands) < 2 or found >= 2:
            continue
        t1 = time.time()
        try:
            same = timed_iso(cands[0], cands[-1], 150)
        except PairTimeout:
            print(f"bucket #{bi} size {len(cands)}: TIMEOUT (saving pair as "
                  f"suspect)", flush=True)
            same = None
        dt = time.time() - t1
        if same is False or same is None:
            np.save(f"pair{found}_a.npy", cands[0])
            np.save(f"pair{found}_b.npy", cands[-1])
            print(f"bucket #{bi} size {len(cands)}: NOT isomorphic ({dt:.1f}s)"
                  f" -> saved pair{found}_[ab].npy", flush=True)
            found += 1
        else:
            print(f"bucket #{bi} size {len(cands)}: isomorphic ({dt:.1f}s)",
                  flush=True)
    print(f"done: {found} non-isomorphic pairs saved "
          f"({time.time()-t0:.1f}s)", flush=True)


if __name__ == "__main__":
    main()
