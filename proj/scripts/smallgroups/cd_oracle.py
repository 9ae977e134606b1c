"""Independent oracle for the bundled golden files.

Computes, for every group in the generated small-group lists, the full
subgroup lattice by brute force (closure of unions of cyclic subgroups), the
Chermak-Delgado data derived from it, and the three order-p^5 classification
conditions.  Emits:

    data/golden/golden_lattice_1_32.json   per-group lattice/CD facts, orders 1..32
    data/golden/golden_venn_order32.json   per-group condition flags at order 32
                                           plus the 8 Venn cell sizes

and prints cross-checks used to freeze expected values in the test suite
(order-243 condition passers, the delta<5 instance lists, quaternion maximum
measures).  Ids match gen_catalogs.py (1-based position in the deterministic
enumeration order).

Usage:  python3 scripts/smallgroups/cd_oracle.py [--skip-243]
"""

import json
import os
import sys
import time

import numpy as np

import grouplib as gl
import extensions as ex


def all_subgroups(mul):
    """Every subgroup, as a sorted tuple of element indices.  Brute force:
    close the set of cyclic subgroups under pairwise join."""
    n = mul.shape[0]
    cyclics = set()
    for x in range(n):
        acc, cur = [0], x
        while cur != 0:
            acc.append(cur)
            cur = int(mul[cur, x])
        cyclics.add(tuple(sorted(acc)))
    subs = set(cyclics)
    work = list(cyclics)
    cyc_list = [np.array(c, dtype=np.int32) for c in sorted(cyclics)]
    while work:
        s = work.pop()
        s_set = set(s)
        s_arr = np.array(s, dtype=np.int32)
        for c in cyc_list:
            if set(int(v) for v in c) <= s_set:
                continue
            j = tuple(int(v) for v in gl.subset_closure(
                mul, np.unique(np.concatenate([s_arr, c]))))
            if j not in subs:
                subs.add(j)
                work.append(j)
    return sorted(subs)


def centralizer_of(mul, members):
    arr = np.array(members, dtype=np.int32)
    out = [g for g in range(mul.shape[0])
           if np.array_equal(mul[g, arr], mul[arr, g])]
    return out


def cd_facts(mul):
    """(total_subgroups, m_star, cd_members, delta) for one group."""
    subs = all_subgroups(mul)
    measures = [len(h) * len(centralizer_of(mul, h)) for h in subs]
    m_star = max(measures)
    cd = [h for h, m in zip(subs, measures) if m == m_star]
    return subs, m_star, cd, len(subs) - len(cd)


def sylow_counts(mul, subs):
    """{p: number of Sylow p-subgroups} from an explicit subgroup list."""
    n = mul.shape[0]
    out = {}
    for p in ex.prime_factors(n):
        pk = 1
        while n % (pk * p) == 0:
            pk *= p
        out[p] = sum(1 for h in subs if len(h) == pk)
    return out


def is_nilpotent(mul, subs):
    return all(c == 1 for c in sylow_counts(mul, subs).values())


def conditions_pgroup(mul, subs, m_star, cd):
    """The three p-group conditions: cond1 in the at-most-4-subgroups-of-
    order-p form; cond2/cond3 in the exists-central-subgroup and
    CD-membership forms."""
    n = mul.shape[0]
    p = ex.prime_factors(n)[0]
    center = set(int(x) for x in gl.center(mul))
    cd_set = set(cd)

    # cond1: at most 4 subgroups of order p
    cond1 = sum(1 for h in subs if len(h) == p) <= 4

    # cond2: some central subgroup Z of order p has at most `bound` subgroups
    # of order >= p^2 not containing it (bound 1 for p = 2, else 0)
    bound = 1 if p == 2 else 0
    central_zs = [h for h in subs if len(h) == p and set(h) <= center]
    cond2 = False
    for z in central_zs:
        zs = set(z)
        misses = sum(1 for h in subs
                     if len(h) >= p * p and not zs <= set(h))
        if misses <= bound:
            cond2 = True
            break

    # cond3: |G| >= p^3, G itself attains m*, and at most one subgroup
    # containing the center falls outside the CD lattice
    if n < p ** 3:
        cond3 = False
    elif tuple(range(n)) not in cd_set:
        cond3 = False
    else:
        outside = sum(1 for h in subs
                      if center <= set(h) and h not in cd_set)
        cond3 = outside <= 1
    return cond1, cond2, cond3


def entry_facts(order, gid, mul, with_conditions):
    subs, m_star, cd, delta = cd_facts(mul)
    e = {
        "order": order,
        "id": gid,
        "total_subgroups": len(subs),
        "m_star": m_star,
        "cd_size": len(cd),
        "delta": delta,
        "nilpotent": is_nilpotent(mul, subs),
    }
    if with_conditions:
        c1, c2, c3 = conditions_pgroup(mul, subs, m_star, cd)
        e["cond1"], e["cond2"], e["cond3"] = c1, c2, c3
    return e


def main(cache=None):
    skip_243 = "--skip-243" in sys.argv[1:]
    here = os.path.dirname(os.path.abspath(__file__))
    golden_dir = os.path.abspath(os.path.join(here, "..", "..", "data", "golden"))
    os.makedirs(golden_dir, exist_ok=True)
    cache = {} if cache is None else cache

    # ---- orders 1..32: lattice/CD golden -------------------------------
    t0 = time.time()
    entries = []
    tables_by_key = {}
    for n in range(1, 33):
        for gid, mul in enumerate(ex.groups_of_order(n, cache), start=1):
            entries.append(entry_facts(n, gid, mul, with_conditions=False))
            tables_by_key[(n, gid)] = mul
    with open(os.path.join(golden_dir, "golden_lattice_1_32.json"), "w") as fh:
        json.dump({"entries": entries}, fh, indent=1, sort_keys=True)
    print(f"golden_lattice_1_32.json: {len(entries)} entries "
          f"({time.time()-t0:.1f}s)", flush=True)

    # delta < 5 instances among orders 2..32 (cross-check for the
    # classification verifier)
    by_delta = {}
    for e in entries:
        if e["order"] > 1:
            by_delta.setdefault(e["delta"], []).append((e["order"], e["id"]))
    for d in (0, 1, 2, 3, 4):
        print(f"  delta={d}: {sorted(by_delta.get(d, []))}", flush=True)

    # ---- order 32: condition sweep golden ------------------------------
    t0 = time.time()
    v_entries = []
    for gid, mul in enumerate(ex.groups_of_order(32, cache), start=1):
        v_entries.append(entry_facts(32, gid, mul, with_conditions=True))
    cells = {}
    for e in v_entries:
        key = "".join("1" if e[k] else "0" for k in ("cond1", "cond2", "cond3"))
        cells[key] = cells.get(key, 0) + 1
    for key in ("000", "001", "010", "011", "100", "101", "110", "111"):
        cells.setdefault(key, 0)
    passers = [e["id"] for e in v_entries
               if e["cond1"] and e["cond2"] and e["cond3"]]
    with open(os.path.join(golden_dir, "golden_venn_order32.json"), "w") as fh:
        json.dump({"entries": v_entries, "cells": cells,
                   "pass_all_ids": passers}, fh, indent=1, sort_keys=True)
    print(f"golden_venn_order32.json: cells {sorted(cells.items())} "
          f"passers {passers} ({time.time()-t0:.1f}s)", flush=True)

    # identify the passers against the named constructions
    targets = {
        "C32": gl.cyclic(32),
        "C16xC2": gl.direct_product(gl.cyclic(16), gl.cyclic(2)),
        "M32": gl.modular_mpk(2, 5),
    }
    for gid in passers:
        mul = tables_by_key[(32, gid)]
        names = [nm for nm, t in targets.items() if gl.is_isomorphic(mul, t)]
        print(f"  order 32 id {gid} isomorphic to: {names}", flush=True)

    # ---- quaternion maximum measures -----------------------------------
    for k in range(3, 8):
        mul = gl.generalized_quaternion(2 ** k)
        subs, m_star, cd, delta = cd_facts(mul)
        print(f"  Q{2**k}: m*={m_star} (expect {4**(k-1)}) |CD|={len(cd)} "
              f"delta={delta}", flush=True)

    # ---- spot values quoted in the test suite --------------------------
    spots = [
        ("S3", gl.symmetric(3)), ("Q8", gl.generalized_quaternion(8)),
        ("D8", gl.dihedral(8)), ("M27", gl.modular_mpk(3, 3)),
        ("M125", gl.modular_mpk(5, 3)),
        ("Q8xC3", gl.direct_product(gl.generalized_quaternion(8), gl.cyclic(3))),
        ("Q8xC5", gl.direct_product(gl.generalized_quaternion(8), gl.cyclic(5))),
        ("C2xC2", gl.elementary_abelian(2, 2)),
        ("C125", gl.cyclic(125)), ("C625", gl.cyclic(625)),
        ("C81", gl.cyclic(81)), ("C243", gl.cyclic(243)),
    ]
    for name, mul in spots:
        subs, m_star, cd, delta = cd_facts(mul)
        print(f"  {name}: subgroups={len(subs)} m*={m_star} |CD|={len(cd)} "
              f"delta={delta}", flush=True)

    # ---- order 243: condition passers (cross-check only) ---------------
    if not skip_243:
        t0 = time.time()
        passers243 = []
        for gid, mul in enumerate(ex.groups_of_order(243, cache), start=1):
            subs, m_star, cd, delta = cd_facts(mul)
            c1, c2, c3 = conditions_pgroup(mul, subs, m_star, cd)
            if c1 and c2 and c3:
                passers243.append(gid)
            print(f"  order 243 id {gid}: subgroups={len(subs)} delta={delta} "
                  f"conds={int(c1)}{int(c2)}{int(c3)} "
                  f"({time.time()-t0:.0f}s)", flush=True)
        print(f"order 243 passers: {passers243}", flush=True)
        targets243 = {
            "C243": gl.cyclic(243),
            "C81xC3": gl.direct_product(gl.cyclic(81), gl.cyclic(3)),
            "M243": gl.modular_mpk(3, 5),
        }
        for gid in passers243:
            mul = ex.groups_of_order(243, cache)[gid - 1]
            names = [nm for nm, t in targets243.items()
                     if gl.is_isomorphic(mul, t)]
            print(f"  order 243 id {gid} isomorphic to: {names}", flush=True)


if __name__ == "__main__":
    main()
