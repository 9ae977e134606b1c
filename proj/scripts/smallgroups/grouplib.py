"""Core finite-group machinery on explicit multiplication tables.

A group of order n is a numpy int32 array `mul` of shape (n, n) with
mul[a, b] = index of a*b and the identity fixed at index 0.  Everything
here is exact integer arithmetic; no randomness, so all outputs are
deterministic for a given input table.
"""

import numpy as np


def _prime_divisors(n):
    out, m, p = [], n, 2
    while m > 1:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    return out


def validate_table(mul):
    """Assert the full group axioms (identity at 0, Latin square, inverses,
    associativity).  O(n^3) but vectorised; fine up to n = 243."""
    n = mul.shape[0]
    assert mul.shape == (n, n)
    assert np.array_equal(mul[0], np.arange(n)), "row 0 must be the identity"
    assert np.array_equal(mul[:, 0], np.arange(n)), "column 0 must be the identity"
    for axis in (0, 1):
        s = np.sort(mul, axis=axis)
        assert np.array_equal(s, np.tile(np.arange(n), (n, 1)).T if axis == 0 else np.tile(np.arange(n), (n, 1))), "not a Latin square"
    # inverses exist: every row contains 0 (implied by Latin square)
    left = mul[mul, :]          # left[a,b,c] = (a*b)*c
    right = mul[:, mul]         # right[a,b,c] = a*(b*c)
    assert np.array_equal(left, right), "associativity fails"


def inverse_table(mul):
    n = mul.shape[0]
    inv = np.empty(n, dtype=np.int32)
    rows, cols = np.nonzero(mul == 0)
    inv[rows] = cols
    return inv


def element_orders(mul):
    """Order of every element, via repeated squaring-free iteration (n small)."""
    n = mul.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    for x in range(n):
        k, acc = 1, x
        while acc != 0:
            acc = mul[acc, x]
            k += 1
        orders[x] = k
    return orders


def order_histogram(mul):
    """Sorted tuple of (element order, count) pairs — an isomorphism invariant
    that completely classifies finite abelian groups."""
    orders = element_orders(mul)
    vals, counts = np.unique(orders, return_counts=True)
    return tuple(zip(vals.tolist(), counts.tolist()))


def is_abelian(mul):
    return np.array_equal(mul, mul.T)


def center(mul):
    """Element indices commuting with everything."""
    return np.nonzero((mul == mul.T).all(axis=1))[0]


def conjugation_table(mul, inv):
    """conj[g, x] = g x g^-1."""
    return mul[mul, inv[:, None]]


def conjugacy_classes(mul, inv):
    """List of sorted lists of element indices."""
    n = mul.shape[0]
    conj = conjugation_table(mul, inv)
    seen = np.zeros(n, dtype=bool)
    classes = []
    for x in range(n):
        if seen[x]:
            continue
        orbit = np.unique(conj[:, x])
        seen[orbit] = True
        classes.append(orbit.tolist())
    return classes


def centralizer_sizes(mul):
    """For every element x, the number of y with xy = yx."""
    return (mul == mul.T).sum(axis=1)


def subset_closure(mul, seed):
    """Smallest subgroup containing the non-empty element set `seed`.
    Repeated product saturation; in a finite group this also yields inverses."""
    s = np.unique(np.asarray(list(seed), dtype=np.int32))
    while True:
        prods = np.unique(mul[np.ix_(s, s)])
        if prods.size == s.size:
            return s
        s = prods


def derived_subgroup(mul, inv):
    """Commutator subgroup as a sorted element array."""
    # [x,y] = x^-1 y^-1 x y, computed for all pairs at once
    comm = mul[mul[np.ix_(inv, inv)], mul]
    return subset_closure(mul, np.unique(comm))


def exponent(mul):
    orders = element_orders(mul)
    e = 1
    for o in np.unique(orders).tolist():
        e = e * o // np.gcd(e, o)
    return int(e)


def induced_table(mul, members):
    """Multiplication table of a subgroup, reindexed to 0..m-1 in sorted
    element order (so the identity stays at index 0)."""
    mem = np.unique(np.asarray(list(members), dtype=np.int32))
    pos = np.full(mul.shape[0], -1, dtype=np.int32)
    pos[mem] = np.arange(mem.size, dtype=np.int32)
    out = pos[mul[np.ix_(mem, mem)]]
    if out.min() < 0:
        raise ValueError("member set is not closed under multiplication")
    return out.astype(np.int32)


def _prime_power_base(n):
    """The prime p with n = p^k (k >= 1), or None if n is not a prime power."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return n  # n itself is prime
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def frattini_pgroup(mul, p):
    """Frattini subgroup of a p-group (generated by commutators and p-th
    powers), as a sorted element array."""
    inv = inverse_table(mul)
    comm = mul[mul[np.ix_(inv, inv)], mul]
    ar = np.arange(mul.shape[0], dtype=np.int32)
    acc = ar.copy()
    for _ in range(p - 1):
        acc = mul[acc, ar]  # acc[x] advances from x^k to x^(k+1)
    return subset_closure(mul, np.unique(np.concatenate([comm.ravel(), acc])))


def split_central_factor(mul, p):
    """If some order-p central subgroup splits off as a direct factor
    (G = C_p x M), return a sorted element array of one such M, else None.
    A central element z of order p generates a direct factor exactly when it
    lies outside the Frattini subgroup: any maximal subgroup avoiding z is a
    normal complement."""
    n = mul.shape[0]
    phi = frattini_pgroup(mul, p)
    phi_set = set(phi.tolist())
    orders = element_orders(mul)
    z = next((int(v) for v in center(mul)
              if orders[v] == p and int(v) not in phi_set), None)
    if z is None:
        return None
    # Coordinates on G/Phi (an F_p vector space) with the coset of z as the
    # first basis vector; M is the preimage of the hyperplane "first
    # coordinate zero".  Cosets are tracked by their minimal element.
    rep = np.min(mul[:, phi], axis=1)
    first_coord = {int(rep[0]): 0}
    span = [0]  # one group element per coset reached so far
    acc = 0
    for e in range(1, p):
        acc = int(mul[acc, z])
        first_coord[int(rep[acc])] = e
        span.append(acc)
    quotient_size = n // phi.size
    x = 0
    while len(first_coord) < quotient_size:
        while int(rep[x]) in first_coord:
            x += 1  # find a coset independent of the span
        base = list(span)
        acc = 0
        for _ in range(1, p):
            acc = int(mul[acc, x])  # x^e contributes first coordinate 0
            for s in base:
                t = int(mul[s, acc])
                r = int(rep[t])
                if r not in first_coord:
                    first_coord[r] = first_coord[int(rep[s])]
                    span.append(t)
    members = [v for v in range(n) if first_coord[int(rep[v])] == 0]
    return np.asarray(members, dtype=np.int32)


def peel_central_factors(mul):
    """Strip every C_p direct factor of a prime-power-order group: returns
    (core, count) with the input isomorphic to C_p^count x core and core
    having no C_p direct factor.  Other orders are returned unchanged with
    count 0."""
    count = 0
    while True:
        p = _prime_power_base(mul.shape[0])
        if p is None:
            return mul, count
        m = split_central_factor(mul, p)
        if m is None:
            return mul, count
        mul = induced_table(mul, m)
        count += 1


def element_invariants(mul, inv):
    """Per-element isomorphism invariants: (order, conjugacy class size,
    per-prime root data, centralizer order histogram).  The root data for
    each prime p dividing |G| is (#p-th roots of x, class size of x^p).
    Any isomorphism must map elements to elements with equal tuples; the
    richer the tuple, the smaller the candidate lists in the backtracking
    searches (weak tuples make same-shape p-groups pathologically slow)."""
    n = mul.shape[0]
    ar = np.arange(n, dtype=np.int32)
    orders = element_orders(mul)
    commute = mul == mul.T                    # commute[x, y] <-> xy = yx
    cent = commute.sum(axis=1)
    csize = n // cent                         # orbit-stabilizer
    # order histogram of each centralizer
    maxo = int(orders.max())
    onehot = np.zeros((n, maxo + 1), dtype=np.int64)
    onehot[ar, orders] = 1
    cent_hist = commute.astype(np.int64) @ onehot
    # per-prime power-map data
    root_data = []
    for p in _prime_divisors(n):
        acc = np.zeros(n, dtype=np.int32)     # acc[y] = y^k, starting at k=0
        for _ in range(p):
            acc = mul[acc, ar]
        nroots = np.bincount(acc, minlength=n)
        root_data.append((nroots, csize[acc]))
    return [
        (
            int(orders[x]),
            int(csize[x]),
            tuple((int(r[x]), int(cs[x])) for r, cs in root_data),
            tuple(int(c) for c in cent_hist[x]),
        )
        for x in range(n)
    ]


def signature(mul):
    """Cheap isomorphism invariant used for bucketing candidate groups."""
    inv = inverse_table(mul)
    der = derived_subgroup(mul, inv)
    classes = conjugacy_classes(mul, inv)
    return (
        mul.shape[0],
        bool(is_abelian(mul)),
        order_histogram(mul),
        int(center(mul).size),
        int(der.size),
        tuple(sorted(len(c) for c in classes)),
        tuple(sorted(element_invariants(mul, inv))),
    )


def power_map(mul, e):
    """Array m with m[x] = x**e, built by binary exponentiation (powers of a
    single element commute, so x**(a+b) = x**a * x**b)."""
    n = mul.shape[0]
    acc = np.zeros(n, dtype=np.int32)           # x**0
    sq = np.arange(n, dtype=np.int32)           # x**(2**bit)
    while e:
        if e & 1:
            acc = mul[acc, sq]
        e >>= 1
        if e:
            sq = mul[sq, sq]
    return acc


def quotient_table(mul, normal):
    """Multiplication table of G/N for a normal subgroup N (sorted element
    array); cosets are labelled by their minimal element, then reindexed."""
    n = mul.shape[0]
    coset_min = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        if coset_min[x] < 0:
            members = mul[x, normal]
            coset_min[members] = int(members.min())
    reps = np.array(sorted(set(map(int, coset_min))), dtype=np.int64)
    index = {int(r): i for i, r in enumerate(reps)}
    q = coset_min[mul[np.ix_(reps, reps)]]
    return np.array([[index[int(v)] for v in row] for row in q],
                    dtype=mul.dtype)


def refined_signature(mul):
    """Finer bucketing invariant than the element-invariant multiset: element
    classes are refined by each element's distribution of
    (class of y, xy, yx, x y x^-1, [x,y]) over all y until stable, and the
    stable classes are summarised as a canonical (size, profile) multiset.
    Ranks are always derived from sortable canonical keys, so the result is
    identical for isomorphic tables."""
    n = mul.shape[0]
    inv = inverse_table(mul)
    conj = mul[mul, inv[:, None]]                # conj[x,y] = x y x^-1
    comm = mul[mul, inv[mul.T]]                  # comm[x,y] = x y x^-1 y^-1
    iv = element_invariants(mul, inv)
    order = sorted(range(n), key=lambda x: iv[x])
    c = np.empty(n, dtype=np.int64)
    rank, prev = 0, None
    for x in order:
        if iv[x] != prev:
            prev = iv[x]
            rank += 1
        c[x] = rank - 1
    k = rank
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
        if rank == k:
            cells = sorted(
                (int((c2 == i).sum()), hists[int(np.argmax(c2 == i))][1:])
                for i in range(k)
            )
            return (k, tuple(cells))
        c, k = c2, rank


def relation_counts(mul):
    """Solution counts of a basket of small two-generator relation systems,
    one basket per prime divisor p of |G|.  Each count is the number of
    element pairs satisfying the relations (= |Hom(H, G)| for the presented
    group H), an isomorphism invariant that separates many groups sharing
    coarser statistics."""
    n = mul.shape[0]
    inv = inverse_table(mul)
    commute = mul == mul.T
    comm = mul[mul, inv[mul.T]]                  # comm[x,y] = x y x^-1 y^-1
    conj = mul[mul, inv[:, None]]                # conj[x,y] = x y x^-1
    central = np.zeros(n, dtype=bool)
    central[center(mul)] = True
    counts = []
    for p in _prime_divisors(n):
        pw = {e: power_map(mul, e) for e in
              sorted({p, p * p, p ** 3} |
                     {1 + m * p for m in range(1, p)} |
                     {1 + m * p * p for m in range(1, p)})}
        # metacyclic: a^ea = b^eb = 1, b a b^-1 = a^k
        patterns = []
        for m in range(1, p):
            patterns.append((p * p, p, 1 + m * p))
            patterns.append((p ** 3, p, 1 + m * p * p))
            patterns.append((p * p, p * p, 1 + m * p))
            patterns.append((p ** 3, p * p, 1 + m * p))
        for ea, eb, k in patterns:
            A = np.where(pw[ea] == 0)[0]
            B = np.where(pw[eb] == 0)[0]
            if len(A) and len(B):
                got = conj[np.ix_(B, A)]
                counts.append(int((got == pw[k][A][None, :]).sum()))
            else:
                counts.append(0)
        # central-commutator: a^ea = b^eb = 1, [a,b] commutes with a and b
        # and the class-3 variant with [[a,b],a] and [[a,b],b] central
        for ea, eb in ((p, p), (p * p, p), (p * p, p * p)):
            A = np.where(pw[ea] == 0)[0]
            B = np.where(pw[eb] == 0)[0]
            if len(A) and len(B):
                cc = comm[np.ix_(A, B)]
                ok = commute[cc, A[:, None]] & commute[cc, B[None, :]]
                counts.append(int(ok.sum()))
                ca = comm[cc, A[:, None]]
                cb = comm[cc, B[None, :]]
                counts.append(int((central[ca] & central[cb]).sum()))
            else:
                counts.extend((0, 0))
        # commuting triples of p-torsion elements, power-equality patterns,
        # and the pattern a^p = b^p = (ab)^p = 1
        A = np.where(pw[p] == 0)[0]
        if len(A):
            R = commute[np.ix_(A, A)]
            counts.append(int(np.einsum("ij,ik,jk->", R, R, R)))
            counts.append(int((pw[p][mul[np.ix_(A, A)]] == 0).sum()))
        else:
            counts.extend((0, 0))
        pp = pw[p]
        counts.append(int((pp[:, None] == pp[None, :]).sum()))
        counts.append(int(((pp[:, None] == pp[None, :]) & commute).sum()))
        counts.append(int((comm == pp[:, None]).sum()))
        counts.append(int((comm[:, A] == pp[:, None]).sum()))
    return tuple(counts)


def strong_signature(mul):
    """Layered isomorphism invariant for candidate deduplication: the cheap
    signature, the refined class profile, and the relation-count basket.
    Strictly finer than signature(); used to avoid pairwise isomorphism
    testing wherever the classes it separates are confirmed by a known
    class count."""
    return (signature(mul), refined_signature(mul), relation_counts(mul))


def generating_sequence(mul):
    """Short generating sequence: greedily add a highest-order element not yet
    in the closure.  Deterministic (ties broken by element index)."""
    n = mul.shape[0]
    if n == 1:
        return []
    orders = element_orders(mul)
    gens = []
    closure = np.array([0], dtype=np.int32)
    while closure.size < n:
        outside = np.setdiff1d(np.arange(n, dtype=np.int32), closure, assume_unique=False)
        pick = outside[np.argmax(orders[outside])]
        gens.append(int(pick))
        closure = subset_closure(mul, np.concatenate([closure, [pick]]))
    return gens


def _extend_hom(mul_a, mul_b, phi, members, new_a, new_b):
    """Extend the partial multiplication-preserving map phi (array over A's
    elements, -1 = unset, restricted so far to the subgroup `members`) with
    new_a -> new_b.  Saturates products; returns the grown member list or
    None on conflict.  phi is modified in place (caller keeps a copy)."""
    queue = [(int(new_a), int(new_b))]
    added = list(members)
    while queue:
        a, b = queue.pop()
        cur = phi[a]
        if cur != -1:
            if cur != b:
                return None
            continue
        phi[a] = b
        arr = np.asarray(added, dtype=np.int32)
        if arr.size:
            # products of the new element with everything already mapped
            pa1, pa2 = mul_a[a, arr], mul_a[arr, a]
            pb1, pb2 = mul_b[b, phi[arr]], mul_b[phi[arr], b]
            for xs, ys in ((pa1, pb1), (pa2, pb2)):
                known = phi[xs]
                bad = (known != -1) & (known != ys)
                if bad.any():
                    return None
                fresh = known == -1
                queue.extend(zip(xs[fresh].tolist(), ys[fresh].tolist()))
        # a*a as well (arr above may not contain a yet)
        queue.append((int(mul_a[a, a]), int(mul_b[b, b])))
        added.append(a)
    return added


def _image_is_bijective(phi):
    img = phi[phi != -1]
    return np.unique(img).size == img.size


def is_isomorphic(mul_a, mul_b):
    """Exact isomorphism test.  Abelian groups are decided by the order
    histogram; otherwise backtracking over images of a short generating
    sequence, pruned by per-element invariants."""
    n = mul_a.shape[0]
    if mul_b.shape[0] != n:
        return False
    ab_a, ab_b = is_abelian(mul_a), is_abelian(mul_b)
    if ab_a != ab_b:
        return False
    if order_histogram(mul_a) != order_histogram(mul_b):
        return False
    if ab_a:
        return True  # abelian groups are classified by their order statistics
    # Splitting off central C_p direct factors shrinks the highly symmetric
    # cases (the search below degrades badly on G x C_p^k).  By Krull-Schmidt
    # the factor counts and the reduced cores decide isomorphism.
    core_a, cnt_a = peel_central_factors(mul_a)
    core_b, cnt_b = peel_central_factors(mul_b)
    if cnt_a != cnt_b:
        return False
    if cnt_a:
        return is_isomorphic(core_a, core_b)
    inv_a, inv_b = inverse_table(mul_a), inverse_table(mul_b)
    ia = element_invariants(mul_a, inv_a)
    ib = element_invariants(mul_b, inv_b)
    if sorted(ia) != sorted(ib):
        return False
    gens = generating_sequence(mul_a)
    # candidate images per generator, filtered by invariants
    cand = [[y for y in range(n) if ib[y] == ia[g]] for g in gens]
    # restrict the first generator to one representative per conjugacy class
    # of mul_b (composing with an inner automorphism fixes any class rep)
    conj_b = conjugation_table(mul_b, inv_b)
    first = []
    seen = set()
    for y in cand[0]:
        if y in seen:
            continue
        orbit = np.unique(conj_b[:, y])
        seen.update(orbit.tolist())
        first.append(y)
    cand[0] = first

    def search(idx, phi, members):
        if idx == len(gens):
            return _image_is_bijective(phi) and phi[phi != -1].size == n
        for y in cand[idx]:
            phi2 = phi.copy()
            grown = _extend_hom(mul_a, mul_b, phi2, members, gens[idx], y)
            if grown is not None and _image_is_bijective(phi2):
                if search(idx + 1, phi2, grown):
                    return True
        return False

    phi0 = np.full(n, -1, dtype=np.int32)
    phi0[0] = 0
    return search(0, phi0, [0])


def _automorphism_transversals(mul):
    """Stabilizer-chain data along a generating sequence g_0..g_{L-1}:
    transversals[i] holds one automorphism per achievable image of g_i among
    the automorphisms fixing g_0..g_{i-1} pointwise.  Every automorphism is
    then a unique product t_0 o t_1 o ... o t_{L-1}.  Only first-solution
    searches are run, so cost scales with the number of cosets rather than
    with |Aut| times full search overhead."""
    n = mul.shape[0]
    inv = inverse_table(mul)
    iv = element_invariants(mul, inv)
    gens = generating_sequence(mul)
    if not gens:
        return [], []
    cand = [[y for y in range(n) if iv[y] == iv[g]] for g in gens]

    def first_solution(phi, members, idx):
        if idx == len(gens):
            return phi.copy() if _image_is_bijective(phi) and (phi != -1).all() else None
        for y in cand[idx]:
            phi2 = phi.copy()
            grown = _extend_hom(mul, mul, phi2, members, gens[idx], y)
            if grown is not None and _image_is_bijective(phi2):
                got = first_solution(phi2, grown, idx + 1)
                if got is not None:
                    return got
        return None

    transversals = []
    prefix_phi = np.full(n, -1, dtype=np.int32)
    prefix_phi[0] = 0
    prefix_members = [0]
    for i, g in enumerate(gens):
        reps = []
        for y in cand[i]:
            phi2 = prefix_phi.copy()
            grown = _extend_hom(mul, mul, phi2, prefix_members, g, y)
            if grown is None or not _image_is_bijective(phi2):
                continue
            got = first_solution(phi2, grown, i + 1)
            if got is not None:
                reps.append(got)
        transversals.append(reps)
        # advance the fixed prefix with the identity choice g -> g
        phi2 = prefix_phi.copy()
        prefix_members = _extend_hom(mul, mul, phi2, prefix_members, g, g)
        prefix_phi = phi2
    return gens, transversals


def automorphisms(mul):
    """All automorphisms, as a sorted array of permutation rows.  Built as
    the set of stabilizer-chain transversal products (see
    _automorphism_transversals), so enumeration cost is per coset, not per
    element."""
    n = mul.shape[0]
    gens, transversals = _automorphism_transversals(mul)
    if not gens:
        return np.zeros((1, 1), dtype=np.int32)
    prods = np.arange(n, dtype=np.int32)[None, :]
    for reps in reversed(transversals):
        t = np.asarray(reps, dtype=np.int32)
        # compose every pair: (t o s)(x) = t(s(x))
        prods = np.take(t, prods, axis=1).reshape(-1, n)
    return np.array(sorted(tuple(p.tolist()) for p in prods), dtype=np.int32)


def perm_group_generators(rows):
    """Small generating subset of a permutation group given as an array of
    all its rows.  Greedy: scan rows in order, adopt any row outside the
    closure of the generators so far, and re-close.  Cost is one batched
    composition per (member, generator) pair."""
    rows = np.asarray(rows, dtype=np.int32)
    n = rows.shape[1]
    ident = np.arange(n, dtype=np.int32)
    gens = []
    closed = ident[None, :]
    have = {ident.tobytes()}
    for row in rows:
        if row.tobytes() in have:
            continue
        gens.append(row)
        # close <gens>: right-multiply every known row by every generator
        frontier = closed
        while frontier.size:
            fresh = []
            for g in gens:
                for r in frontier[:, g]:
                    rb = r.tobytes()
                    if rb not in have:
                        have.add(rb)
                        fresh.append(r)
            if not fresh:
                break
            frontier = np.array(fresh, dtype=np.int32)
            closed = np.concatenate([closed, frontier])
    if not gens:
        gens = [ident]
    return np.array(gens, dtype=np.int32)


def automorphism_generators(mul):
    """A small generating set of Aut (the nontrivial stabilizer-chain
    transversal elements); the identity row alone when Aut is trivial."""
    n = mul.shape[0]
    _, transversals = _automorphism_transversals(mul)
    ident = np.arange(n, dtype=np.int32)
    out = [r for reps in transversals for r in reps
           if not np.array_equal(r, ident)]
    if not out:
        out = [ident]
    return np.asarray(out, dtype=np.int32)


def direct_product(mul_a, mul_b):
    """Componentwise product; pair (i, j) gets index i*|B| + j."""
    na, nb = mul_a.shape[0], mul_b.shape[0]
    ia, ja = np.divmod(np.arange(na * nb, dtype=np.int32), nb)
    i1 = ia[:, None]
    j1 = ja[:, None]
    i2 = ia[None, :]
    j2 = ja[None, :]
    return (mul_a[i1, i2] * nb + mul_b[j1, j2]).astype(np.int32)


def cyclic(m):
    a = np.arange(m, dtype=np.int32)
    return (a[:, None] + a[None, :]) % m


def abelian_from_partition(p, parts):
    """Direct product of cyclic groups of order p**e for e in parts."""
    mul = cyclic(1)
    for e in parts:
        mul = direct_product(mul, cyclic(p ** e))
    return mul


def elementary_abelian(p, k):
    return abelian_from_partition(p, [1] * k)


def dihedral(order):
    """Dihedral group of the given (even, >= 4) order: symmetries of an
    (order/2)-gon.  Element (i, j) = r^i s^j, index i*2 + j."""
    m = order // 2
    assert order % 2 == 0 and m >= 2
    n = order
    mul = np.empty((n, n), dtype=np.int32)
    for i1 in range(m):
        for j1 in range(2):
            for i2 in range(m):
                for j2 in range(2):
                    # r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                    i = (i1 + (i2 if j1 == 0 else -i2)) % m
                    mul[i1 * 2 + j1, i2 * 2 + j2] = i * 2 + ((j1 + j2) % 2)
    return _reindex_identity_first(mul, 0)


def generalized_quaternion(order):
    """Q_{2^k}: <a, b | a^(2^(k-1)) = 1, b^2 = a^(2^(k-2)), a^b = a^-1>,
    order = 2^k, k >= 3.  Element (i, j) = a^i b^j, index i*2 + j."""
    assert order >= 8 and (order & (order - 1)) == 0
    m = order // 2
    half = m // 2
    n = order
    mul = np.empty((n, n), dtype=np.int32)
    for i1 in range(m):
        for j1 in range(2):
            for i2 in range(m):
                for j2 in range(2):
                    i = (i1 + (i2 if j1 == 0 else -i2)) % m
                    j = j1 + j2
                    if j == 2:
                        i = (i + half) % m
                        j = 0
                    mul[i1 * 2 + j1, i2 * 2 + j2] = i * 2 + j
    return _reindex_identity_first(mul, 0)


def modular_mpk(p, k):
    """M_{p^k}: <a, b | a^(p^(k-1)), b^p, a^b = a^(p^(k-2)+1)>, order p^k, k >= 3.
    Element (i, j) = a^i b^j, index i*p + j."""
    m = p ** (k - 1)
    r = p ** (k - 2) + 1
    n = p ** k
    mul = np.empty((n, n), dtype=np.int32)
    # b^j a = a^(r^j) b^j, so (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2*r^j1) b^(j1+j2)
    rp = [pow(r, j, m) for j in range(p)]
    for i1 in range(m):
        for j1 in range(p):
            for i2 in range(m):
                for j2 in range(p):
                    i = (i1 + i2 * rp[j1]) % m
                    j = (j1 + j2) % p
                    mul[i1 * p + j1, i2 * p + j2] = i * p + j
    return _reindex_identity_first(mul, 0)


def extraspecial_exp_p(p):
    """Extraspecial group of order p^3 and exponent p (p odd): the Heisenberg
    group of unitriangular 3x3 matrices over F_p."""
    assert p > 2
    n = p ** 3
    # element (a, b, c) = upper unitriangular with entries a (1,2), b (2,3), c (1,3)
    def idx(a, b, c):
        return (a * p + b) * p + c
    mul = np.empty((n, n), dtype=np.int32)
    for a1 in range(p):
        for b1 in range(p):
            for c1 in range(p):
                for a2 in range(p):
                    for b2 in range(p):
                        for c2 in range(p):
                            mul[idx(a1, b1, c1), idx(a2, b2, c2)] = idx(
                                (a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p)
    return mul


def symmetric(k):
    """Symmetric group on k letters as the composition table of all k!
    permutations (lexicographic order of image tuples, identity first)."""
    import itertools
    perms = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    mul = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            pq = tuple(p[q[x]] for x in range(k))  # (p o q)(x) = p(q(x))
            mul[i, j] = index[pq]
    return _reindex_identity_first(mul, index[tuple(range(k))])


def _reindex_identity_first(mul, e):
    """Relabel elements so the identity lands at index 0 (swap 0 <-> e)."""
    if e == 0:
        return mul
    n = mul.shape[0]
    perm = np.arange(n, dtype=np.int32)
    perm[0], perm[e] = e, 0
    inv = perm  # an involution
    return perm[mul[np.ix_(inv, inv)]]


def left_regular_generators(mul, gens=None):
    """Regular-representation generator rows for the catalog: the left
    multiplication permutation lambda_g(x) = g*x for each generator."""
    if gens is None:
        gens = generating_sequence(mul)
    if not gens:  # trivial group still needs one row to define the degree
        return [np.zeros(1, dtype=np.int32)]
    return [mul[g, :].copy() for g in gens]
