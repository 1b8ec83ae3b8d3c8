"""Exact linear algebra over the integers and over F2.

Everything here works with plain Python ints (arbitrary precision), lists of
lists for dense matrices, and int bitmasks for F2 vectors.  No floating point
anywhere.
"""

from __future__ import annotations


# ---------------------------------------------------------------------------
# dense integer matrices (lists of rows)
# ---------------------------------------------------------------------------

def _addmul(target, source, q):
    for k in range(len(target)):
        target[k] += q * source[k]


def _xgcd(x, y):
    """(g, s, u) with g = gcd(x, y) > 0 and s*x + u*y == g."""
    old_r, r = x, y
    old_s, s = 1, 0
    old_u, u = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_u, u = u, old_u - q * u
    if old_r < 0:
        old_r, old_s, old_u = -old_r, -old_s, -old_u
    return old_r, old_s, old_u


def row_hnf(mat):
    """Canonical Hermite normal form of the row span of ``mat``.

    Returns the nonzero rows: pivots positive, entries above each pivot
    reduced into [0, pivot).  Two generating sets span the same subgroup of
    Z^n iff their HNFs are identical.
    """
    rows = [list(r) for r in mat if any(r)]
    if not rows:
        return []
    n = len(rows[0])
    r = 0
    for j in range(n):
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][j]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(rows[i][j]))
            i0 = nz[0]
            for i in nz[1:]:
                q = rows[i][j] // rows[i0][j]
                if q:
                    _addmul(rows[i], rows[i0], -q)
        nz = [i for i in range(r, len(rows)) if rows[i][j]]
        if nz:
            i0 = nz[0]
            rows[r], rows[i0] = rows[i0], rows[r]
            if rows[r][j] < 0:
                rows[r] = [-x for x in rows[r]]
            p = rows[r][j]
            for i in range(r):
                q = rows[i][j] // p
                if q:
                    _addmul(rows[i], rows[r], -q)
            r += 1
    return [rows[i] for i in range(r)]


def hnf_solve(hnf_rows, target):
    """Integer coefficients expressing ``target`` in HNF rows, or None."""
    t = list(target)
    coeffs = [0] * len(hnf_rows)
    for idx, row in enumerate(hnf_rows):
        j = next(i for i, x in enumerate(row) if x)
        if t[j] % row[j]:
            return None
        q = t[j] // row[j]
        coeffs[idx] = q
        if q:
            _addmul(t, row, -q)
    if any(t):
        return None
    return coeffs


def kernel_basis(mat, ncols):
    """Basis of {x in Z^ncols : mat @ x = 0} as a list of vectors."""
    r = len(mat)
    aug = []
    for j in range(ncols):
        head = [mat[i][j] for i in range(r)]
        tail = [1 if t == j else 0 for t in range(ncols)]
        aug.append(head + tail)
    out = []
    for row in row_hnf(aug):
        if not any(row[:r]):
            out.append(row[r:])
    return out


def transpose(mat, nrows, ncols):
    return [[mat[i][j] for i in range(nrows)] for j in range(ncols)]


def mat_mul(a, b):
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(mat, transforms=False):
    """Smith normal form of an integer matrix.

    Returns ``(diag, U, V)`` where ``diag`` is the list of nonzero invariant
    factors d1 | d2 | ... and, if ``transforms`` is set, U (rows x rows) and
    V (cols x cols) are unimodular with U @ mat @ V diagonal; otherwise U and
    V are None.
    """
    a = [list(r) for r in mat]
    n = len(a)
    m = len(a[0]) if n else 0
    U = identity(n) if transforms else None
    V = identity(m) if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def addmul_row(i, j, q):   # row_i += q * row_j
        _addmul(a[i], a[j], q)
        if U is not None:
            _addmul(U[i], U[j], q)

    def row_bezout(t, i):
        # unimodular 2x2 transform putting gcd(a[t][t], a[i][t]) at (t, t)
        # and 0 at (i, t); Bezout coefficients keep entry growth bounded,
        # unlike remainder-and-swap which compounds quotients into the
        # untouched rows
        x, y = a[t][t], a[i][t]
        g, s, u = _xgcd(x, y)
        xg, yg = x // g, y // g
        rt, ri = a[t], a[i]
        a[t] = [s * p + u * q for p, q in zip(rt, ri)]
        a[i] = [xg * q - yg * p for p, q in zip(rt, ri)]
        if U is not None:
            rt, ri = U[t], U[i]
            U[t] = [s * p + u * q for p, q in zip(rt, ri)]
            U[i] = [xg * q - yg * p for p, q in zip(rt, ri)]

    def col_bezout(t, j):
        x, y = a[t][t], a[t][j]
        g, s, u = _xgcd(x, y)
        xg, yg = x // g, y // g
        for row in a:
            p, q = row[t], row[j]
            row[t] = s * p + u * q
            row[j] = xg * q - yg * p
        if V is not None:
            for row in V:
                p, q = row[t], row[j]
                row[t] = s * p + u * q
                row[j] = xg * q - yg * p

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if U is not None:
            U[i] = [-x for x in U[i]]

    diag = []
    t = 0
    while True:
        # find a pivot in the submatrix a[t:, t:]
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if a[i][j] and (best is None or abs(a[i][j]) < best[0]):
                    best = (abs(a[i][j]), i, j)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            # clear column t, then row t; column transforms can refill the
            # column, so iterate (the pivot gcd strictly divides each time)
            done = True
            for i in range(t + 1, n):
                if a[i][t]:
                    if a[i][t] % a[t][t] == 0:
                        addmul_row(i, t, -(a[i][t] // a[t][t]))
                    else:
                        row_bezout(t, i)
                        done = False
            for j in range(t + 1, m):
                if a[t][j]:
                    if a[t][j] % a[t][t] == 0:
                        q = a[t][j] // a[t][t]
                        for row in a:
                            row[j] -= q * row[t]
                        if V is not None:
                            for row in V:
                                row[j] -= q * row[t]
                    else:
                        col_bezout(t, j)
                        done = False
            if not done:
                continue
            if all(a[i][t] == 0 for i in range(t + 1, n)):
                break
        # make every remaining entry divisible by the pivot
        p = a[t][t]
        fix = None
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if a[i][j] % p:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            addmul_row(t, fix, 1)
            continue
        if p < 0:
            negate_row(t)
        diag.append(a[t][t])
        t += 1

    # enforce the divisibility chain (pivot choice above already gives it,
    # but keep this as a safety net for equal-magnitude ties)
    for i in range(len(diag) - 1):
        if diag[i + 1] % diag[i]:
            from math import gcd
            g = gcd(diag[i], diag[i + 1])
            l = diag[i] * diag[i + 1] // g
            diag[i], diag[i + 1] = g, l
    return diag, U, V


def rank_and_invariants(entries, nrows, ncols):
    """Rank and nonzero invariant factors of a sparse integer matrix.

    ``entries`` is an iterable of ``(i, j, v)`` triples with v != 0.  Unit
    (+-1) pivots are eliminated first with Markowitz-style pivot selection,
    which keeps fill-in and coefficient growth small on the very sparse
    boundary matrices this package produces; whatever remains is handed to
    the dense SNF.
    """
    rows = {}
    cols = {}
    for i, j, v in entries:
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)
    ones = 0
    while True:
        # pick a unit entry with minimal fill estimate
        best = None
        for i, row in rows.items():
            li = len(row)
            for j, v in row.items():
                if v == 1 or v == -1:
                    cost = (li - 1) * (len(cols[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j, v)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj, pv = best
        prow = rows.pop(pi)
        for j in prow:
            cols[j].discard(pi)
            if not cols[j]:
                del cols[j]
        targets = list(cols.get(pj, ()))
        for i in targets:
            q = rows[i][pj] * pv
            row = rows[i]
            for j, v in prow.items():
                nv = row.get(j, 0) - q * v
                if nv:
                    if j not in row:
                        cols.setdefault(j, set()).add(i)
                    row[j] = nv
                else:
                    if j in row:
                        del row[j]
                        cols[j].discard(i)
                        if not cols[j]:
                            del cols[j]
            if not row:
                del rows[i]
        ones += 1
    if not rows:
        return ones, [1] * ones
    ridx = {i: k for k, i in enumerate(sorted(rows))}
    cset = set()
    for row in rows.values():
        cset.update(row)
    cidx = {j: k for k, j in enumerate(sorted(cset))}
    dense = [[0] * len(cidx) for _ in ridx]
    for i, row in rows.items():
        for j, v in row.items():
            dense[ridx[i]][cidx[j]] = v
    diag, _, _ = smith_normal_form(dense)
    return ones + len(diag), [1] * ones + diag


def dense_to_entries(mat):
    for i, row in enumerate(mat):
        for j, v in enumerate(row):
            if v:
                yield i, j, v


def matrix_rank(mat):
    if not mat:
        return 0
    r, _ = rank_and_invariants(dense_to_entries(mat), len(mat), len(mat[0]))
    return r


# ---------------------------------------------------------------------------
# F2 linear algebra on int bitmasks (bit i = coordinate i)
# ---------------------------------------------------------------------------

def f2_rref(vectors):
    """Reduced row echelon basis (canonical) of the span of bitmask vectors.

    Pivot of each row is its highest set bit; every pivot occurs in exactly
    one row, so equal subspaces give identical bases.
    """
    pivot = {}   # pivot bit -> row
    for v in vectors:
        while v:
            p = v.bit_length() - 1
            if p in pivot:
                v ^= pivot[p]
            else:
                pivot[p] = v
                break
    # back-substitute so each pivot appears only in its own row
    for p in sorted(pivot):
        row = pivot[p]
        for q in pivot:
            if q > p and (pivot[q] >> p) & 1:
                pivot[q] ^= row
    return [pivot[p] for p in sorted(pivot, reverse=True)]


def f2_reduce(basis, v):
    """Reduce v against an RREF basis; zero iff v is in the span."""
    for b in basis:
        if v ^ b < v:
            v ^= b
    return v


def f2_in_span(basis, v):
    return f2_reduce(basis, v) == 0


def f2_rank(vectors):
    return len(f2_rref(vectors))


def f2_dot(a, b):
    return bin(a & b).count("1") & 1


def f2_annihilator(vectors, width):
    """Basis of {x in F2^width : x . v = 0 for all v} as bitmasks."""
    basis = f2_rref(vectors)
    pivots = [b.bit_length() - 1 for b in basis]
    free = [j for j in range(width) if j not in pivots]
    out = []
    for j in free:
        x = 1 << j
        # solve for pivot coordinates
        for b, p in zip(basis, pivots):
            # after setting free coords, coordinate p must fix parity with b
            if f2_dot(x, b):
                x ^= 1 << p
        out.append(x)
    return f2_rref(out)
