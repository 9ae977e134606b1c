"""Regenerate the bundled catalogs and golden files in one process.

Sharing the generation cache means the expensive order-243 enumeration
runs once instead of once per script.
"""

import time

import cd_oracle
import extensions as ex
import gen_catalogs


def main():
    cache = {}
    t0 = time.time()
    for n in list(range(1, 33)) + [81, 243]:
        t = time.time()
        tables = ex.groups_of_order(n, cache, verbose=(n >= 81))
        if n in (32, 81, 243):
            print(f"order {n}: {len(tables)} classes ({time.time()-t:.1f}s)",
                  flush=True)
    print(f"generation done ({time.time()-t0:.1f}s)", flush=True)
    t1 = time.time()
    gen_catalogs.main(cache=cache)
    print(f"catalogs done ({time.time()-t1:.1f}s)", flush=True)
    t1 = time.time()
    cd_oracle.main(cache=cache)
    print(f"goldens done ({time.time()-t1:.1f}s, total {time.time()-t0:.1f}s)",
          flush=True)


if __name__ == "__main__":
    main()
