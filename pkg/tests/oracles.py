"""Slow, independent reference computations used to freeze expected values.

Nothing here shares code with the package: faces are enumerated from
tuples, ranks come from sympy (over Q) or a throwaway elimination mod p.
"""

from itertools import combinations

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors


def all_faces(facets):
    out = {()}
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            out.update(combinations(f, k))
    return out


def restrict(faces, subset):
    s = set(subset)
    return {f for f in faces if set(f) <= s}


def _rank_mod_p(rows, p):
    rows = [[x % p for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def boundary_matrix(faces, d):
    """Rows: (d-1)-faces, columns: d-faces; the empty face sits in degree -1."""
    lo = sorted(f for f in faces if len(f) == d)
    hi = sorted(f for f in faces if len(f) == d + 1)
    index = {f: i for i, f in enumerate(lo)}
    M = [[0] * len(hi) for _ in lo]
    for j, f in enumerate(hi):
        for k in range(len(f)):
            M[index[f[:k] + f[k + 1:]]][j] = (-1) ** k
    return M


def matrix_rank(M, p=0):
    if not M or not M[0]:
        return 0
    if p:
        return _rank_mod_p(M, p)
    return Matrix(M).rank()


def reduced_betti(faces, p=0):
    """``{d: rank H̃_d}`` for d ≥ -1 (nonzero entries only)."""
    top = max(len(f) for f in faces) - 1
    counts = {d: sum(1 for f in faces if len(f) == d + 1) for d in range(-1, top + 1)}
    ranks = {d: matrix_rank(boundary_matrix(faces, d), p) for d in range(0, top + 1)}
    out = {}
    for d in range(-1, top + 1):
        b = counts[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    return out


def integral_torsion(faces, d):
    """Torsion invariant factors of ``H̃_d``."""
    M = boundary_matrix(faces, d + 1)
    if not M or not M[0]:
        return ()
    return tuple(x for x in sympy_invariant_factors(Matrix(M), domain=ZZ) if abs(x) > 1)


def moment_angle_betti(m, facets, p=0):
    faces = all_faces(facets)
    betti = {}
    for k in range(0, m + 1):
        for J in combinations(range(1, m + 1), k):
            for d, r in reduced_betti(restrict(faces, J), p).items():
                deg = k + d + 1
                betti[deg] = betti.get(deg, 0) + r
    top = max(betti)
    return [betti.get(i, 0) for i in range(top + 1)]


def snf_factors(A):
    """Nonzero invariant factors of an integer matrix via sympy."""
    if not A or not A[0]:
        return ()
    return tuple(abs(x) for x in sympy_invariant_factors(Matrix(A), domain=ZZ) if x)


def polygon_profile(m):
    """Betti numbers of ``#_k k C(m-2, k+1) S^{k+2} x S^{m-k}`` for the m-gon."""
    top = m + 2
    betti = [0] * (top + 1)
    betti[0] = betti[top] = 1
    for k in range(1, m - 2):
        c = k * _comb(m - 2, k + 1)
        betti[k + 2] += c
        betti[m - k] += c
    return betti


def _comb(n, k):
    from math import comb

    return comb(n, k)


def induced_cycles_of_length(edges, vertices, n):
    adj = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    out = []
    for c in combinations(sorted(vertices), n):
        s = set(c)
        if all(len(adj[v] & s) == 2 for v in c):
            # connected 2-regular induced graph
            seen, stack = {c[0]}, [c[0]]
            while stack:
                v = stack.pop()
                for w in adj[v] & s:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen == s:
                out.append(c)
    return out
