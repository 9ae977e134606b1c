"""Diagnostic: verify the automorphism enumeration for the order-81 bases.

The extension generator's completeness rests on automorphisms(N) being the
exact automorphism group of each non-abelian base: a missing row only adds
duplicates, but a bogus row can merge inequivalent extensions and silently
drop classes.  Checks per base: every row is multiplication-preserving and
bijective, the set contains all inner automorphisms, its size is divisible
by |Inn|, and it is closed under sampled compositions.
"""

import time

import numpy as np

import extensions as ex
import grouplib as gl


def check_base(mul, tag):
    n = mul.shape[0]
    inv = gl.inverse_table(mul)
    t0 = time.time()
    auts = gl.automorphisms(mul)
    dt = time.time() - t0
    A = np.stack(auts)
    ident = np.arange(n, dtype=A.dtype)
    # bijectivity and homomorphism property, in chunks
    assert np.all(np.sort(A, axis=1) == ident[None, :]), f"{tag}: non-bijective row"
    for lo in range(0, A.shape[0], 64):
        chunk = A[lo:lo + 64]
        lhs = chunk[:, mul]                                  # phi(x*y)
        rhs = mul[chunk[:, :, None], chunk[:, None, :]]      # phi(x)*phi(y)
        assert np.array_equal(lhs, rhs), f"{tag}: non-homomorphism row near {lo}"
    keys = {row.tobytes() for row in A}
    assert len(keys) == A.shape[0], f"{tag}: duplicate rows"
    inn = np.unique(gl.conjugation_table(mul, inv), axis=0)
    for row in inn:
        assert row.tobytes() in keys, f"{tag}: missing inner automorphism"
    assert A.shape[0] % inn.shape[0] == 0, f"{tag}: |Inn| does not divide |Aut|"
    rng = np.random.default_rng(20260816)
    for _ in range(2000):
        i, j = rng.integers(0, A.shape[0], 2)
        comp = A[i][A[j]]
        assert comp.tobytes() in keys, f"{tag}: not closed under composition"
    gens = gl.automorphism_generators(mul)
    for g in gens:
        assert g.tobytes() in keys, f"{tag}: generator outside enumeration"
    print(f"{tag}: |Aut| = {A.shape[0]} (|Inn| = {inn.shape[0]}) OK "
          f"({dt:.1f}s)", flush=True)
    return A.shape[0]


def main():
    cache = {}
    for m in (3, 9, 27, 81):
        ex.groups_of_order(m, cache)
    for bi, base in enumerate(ex.groups_of_order(81, cache)):
        if gl.is_abelian(base):
            continue
        check_base(base, f"base#{bi}")


if __name__ == "__main__":
    main()
