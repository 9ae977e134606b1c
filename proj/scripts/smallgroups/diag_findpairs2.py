"""Diagnostic, round 2: denser pair sampling inside multi-candidate buckets.

First-vs-last sampling found only isomorphic pairs, so this round tests a
spread of positions per bucket (endpoints, midpoints, thirds) to catch a
distinct class hiding in the middle of a bucket.  Saves any non-isomorphic
pair it finds.
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
            pool.setdefault(gl.strong_signature(table), []).append((bi, table))
    print(f"pool: {len(pool)} strong buckets ({time.time()-t0:.1f}s)",
          flush=True)

    found = 0
    order = sorted(enumerate(pool.items()), key=lambda kv: -len(kv[1][1]))
    for bi, (key, cands) in order:
        m = len(cands)
        if m < 2 or found >= 2:
            continue
        bases = sorted({b for b, _ in cands})
        pairs = {(0, 1), (0, m - 1), (0, m // 2), (m // 2, m - 1),
                 (m // 3, 2 * m // 3)}
        if m > 3:
            pairs.add((1, m - 2))
        pairs = sorted((a, b) for a, b in pairs if a < b)
        for a, b in pairs:
            t1 = time.time()
            try:
                same = timed_iso(cands[a][1], cands[b][1], 150)
            except PairTimeout:
                same = None
            dt = time.time() - t1
            if same is not True:
                verdict = "TIMEOUT" if same is None else "NOT isomorphic"
                np.save(f"pair{found}_a.npy", cands[a][1])
                np.save(f"pair{found}_b.npy", cands[b][1])
                print(f"bucket #{bi} size {m} bases {bases}: ({a},{b}) "
                      f"{verdict} ({dt:.1f}s) -> pair{found}_[ab].npy",
                      flush=True)
                found += 1
                if found >= 2:
                    break
        else:
            print(f"bucket #{bi} size {m} bases {bases}: sampled "
                  f"{len(pairs)} pairs, all isomorphic "
                  f"({time.time()-t1:.1f}s last)", flush=True)
    print(f"done: {found} pairs saved ({time.time()-t0:.1f}s)", flush=True)


if __name__ == "__main__":
    main()
