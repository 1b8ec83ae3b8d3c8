import random

from maq.simplicial import SimplicialComplex


def random_complex(rng, m, max_facets=None):
    """Nonvoid complex on [m] with facets drawn uniformly-ish."""
    nf = rng.randint(1, max_facets or 2 * m)
    facets = []
    for _ in range(nf):
        size = rng.randint(1, max(1, m - 1))
        facets.append(frozenset(rng.sample(range(1, m + 1), size)))
    return SimplicialComplex(m, facets)


def random_unimodular(rng, n, steps=8):
    """Product of elementary row operations."""
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        for k in range(n):
            U[i][k] += c * U[j][k]
        if rng.random() < 0.3:
            U[i], U[j] = U[j], U[i]
        if rng.random() < 0.3:
            U[i] = [-x for x in U[i]]
    return U


def seeded(name, seed=0):
    return random.Random(repr((seed, name)))


def complexes_isomorphic(K1, K2):
    """Whether two complexes agree after some vertex relabeling.

    Backtracking search over degree-compatible assignments; fine for the
    small complexes used in the test batteries.
    """
    if K1.m != K2.m or sorted(map(len, K1.facets)) != \
            sorted(map(len, K2.facets)):
        return False
    m = K1.m
    f1 = set(K1.facets)
    f2 = set(K2.facets)

    def profile(facets, v):
        return tuple(sorted(len(F) for F in facets if v in F))

    p1 = {v: profile(f1, v) for v in range(1, m + 1)}
    p2 = {v: profile(f2, v) for v in range(1, m + 1)}
    if sorted(p1.values()) != sorted(p2.values()):
        return False
    # assign most-constrained vertices first
    order = sorted(range(1, m + 1),
                   key=lambda v: sum(1 for w in p2 if p2[w] == p1[v]))

    def extend(idx, mapping, used):
        if idx == len(order):
            return {frozenset(mapping[v] for v in F) for F in f1} == f2
        v = order[idx]
        for w in range(1, m + 1):
            if w in used or p2[w] != p1[v]:
                continue
            mapping[v] = w
            # partial consistency: fully mapped facets must land in f2
            ok = True
            for F in f1:
                if all(u in mapping for u in F):
                    if frozenset(mapping[u] for u in F) not in f2:
                        ok = False
                        break
            if ok and extend(idx + 1, mapping, used | {w}):
                return True
            del mapping[v]
        return False

    return extend(0, {}, set())
