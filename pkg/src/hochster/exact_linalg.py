"""Exact linear algebra over the integers, the rationals and prime fields.

Two representations are used.  Small user-facing matrices are lists of rows
(``IntMatrix`` / ``FieldMatrix``); the homology engine works with sparse
vectors, i.e. ``dict`` objects mapping an index to a nonzero coefficient.

Rational coefficients are Python ``int`` whenever possible and
``fractions.Fraction`` otherwise.  Prime-field coefficients are ``int`` in
``range(p)``.  Nothing in this module touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from .exceptions import NoSolution

SparseVector = Dict[int, object]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Coefficients:
    """Coefficient domain: ``Z``, ``Q`` or ``F_p``.

    ``characteristic`` is 0 for Z and Q; ``integral`` distinguishes them.
    """

    characteristic: int = 0
    integral: bool = False

    def __post_init__(self):
        p = self.characteristic
        if p and not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p and self.integral:
            raise ValueError("integral coefficients have characteristic 0")

    @classmethod
    def parse(cls, spec) -> "Coefficients":
        if isinstance(spec, Coefficients):
            return spec
        if isinstance(spec, int):
            return cls(spec) if spec else cls()
        s = str(spec).strip().lower()
        if s in ("z", "zz", "int", "integers"):
            return cls(0, True)
        if s in ("q", "qq", "rationals"):
            return cls(0, False)
        for prefix in ("fp:", "gf:", "f", "gf"):
            if s.startswith(prefix):
                try:
                    return cls(int(s[len(prefix):]))
                except ValueError:
                    break
        raise ValueError(f"unknown coefficient spec {spec!r} (use z, q or fp:P)")

    @property
    def is_field(self) -> bool:
        return not self.integral

    @property
    def field_characteristic(self) -> int:
        """Characteristic used for field arithmetic (Z computes over Q)."""
        return self.characteristic

    def convert(self, x):
        p = self.characteristic
        if p:
            return int(x) % p
        return _canon(x)

    def __str__(self) -> str:
        if self.integral:
            return "z"
        if self.characteristic:
            return f"fp:{self.characteristic}"
        return "q"


ZZ = Coefficients(0, True)
QQ = Coefficients(0, False)


def GF(p: int) -> Coefficients:
    return Coefficients(p)


def _canon(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def field_inverse(x, p: int):
    if p:
        return pow(x, -1, p)
    if x == 1 or x == -1:
        return x
    return Fraction(1) / x


def format_scalar(x) -> object:
    """JSON-friendly scalar: int when integral, ``"a/b"`` otherwise."""
    x = _canon(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return int(x)


# ---------------------------------------------------------------------------
# sparse vectors


def axpy(v: SparseVector, a, w: SparseVector, p: int = 0) -> None:
    """In place ``v += a * w``, dropping zero entries."""
    if p:
        for k, c in w.items():
            x = (v.get(k, 0) + a * c) % p
            if x:
                v[k] = x
            else:
                v.pop(k, None)
    else:
        for k, c in w.items():
            x = v.get(k, 0) + a * c
            if x:
                v[k] = _canon(x) if isinstance(x, Fraction) else x
            else:
                v.pop(k, None)


def scale(v: SparseVector, a, p: int = 0) -> SparseVector:
    if p:
        return {k: (a * c) % p for k, c in v.items() if (a * c) % p}
    return {k: _canon(a * c) for k, c in v.items() if a * c}


def dot(u: SparseVector, v: SparseVector, p: int = 0):
    if len(u) > len(v):
        u, v = v, u
    s = 0
    for k, c in u.items():
        d = v.get(k)
        if d is not None:
            s += c * d
    return s % p if p else _canon(s)


class RowSpace:
    """Incrementally built echelon basis of a subspace of k^n.

    Each stored row has a distinct leading index (its smallest key) with
    leading coefficient 1.
    """

    def __init__(self, p: int = 0):
        self.p = p
        self.rows: Dict[int, SparseVector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: SparseVector) -> SparseVector:
        """Residual of ``vec`` with no leading index shared with a row."""
        v = dict(vec)
        rows = self.rows
        p = self.p
        while v:
            k = min(v)
            row = rows.get(k)
            if row is None:
                # remaining pivots past k could still be cleared, but the
                # residual's leading index is what matters for echelon form
                break
            axpy(v, -v[k], row, p)
        return v

    def full_reduce(self, vec: SparseVector) -> SparseVector:
        """Residual with every pivot index eliminated (zero iff in span)."""
        v = dict(vec)
        rows = self.rows
        p = self.p
        done = set()
        while True:
            cand = [k for k in v if k in rows and k not in done]
            if not cand:
                return v
            k = min(cand)
            axpy(v, -v[k], rows[k], p)
            done.add(k)

    def add(self, vec: SparseVector) -> Optional[SparseVector]:
        """Insert ``vec``; return the new normalized row or None if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        k = min(v)
        lead = v[k]
        if lead != 1:
            v = scale(v, field_inverse(lead, self.p), self.p)
        self.rows[k] = v
        return v

    def contains(self, vec: SparseVector) -> bool:
        v = dict(vec)
        rows = self.rows
        p = self.p
        while v:
            k = min(v)
            row = rows.get(k)
            if row is None:
                return False
            axpy(v, -v[k], row, p)
        return True


def sparse_rank(vectors: Iterable[SparseVector], p: int = 0) -> int:
    rs = RowSpace(p)
    for v in vectors:
        if v:
            rs.add(v)
    return rs.rank


def kernel_and_image(columns: Sequence[SparseVector], p: int = 0):
    """Reduce the columns of a matrix.

    Returns ``(image, kernel)``: a :class:`RowSpace` spanning the column
    space, and a list of sparse kernel vectors indexed by column position.
    """
    image = RowSpace(p)
    tracked: Dict[int, tuple] = {}
    kernel: List[SparseVector] = []
    for j, col in enumerate(columns):
        v = dict(col)
        combo: SparseVector = {j: 1}
        while v:
            k = min(v)
            hit = tracked.get(k)
            if hit is None:
                break
            row, rcombo = hit
            a = -v[k]
            axpy(v, a, row, p)
            axpy(combo, a, rcombo, p)
        if not v:
            kernel.append(combo)
            continue
        k = min(v)
        lead = v[k]
        if lead != 1:
            inv = field_inverse(lead, p)
            v = scale(v, inv, p)
            combo = scale(combo, inv, p)
        tracked[k] = (v, combo)
        image.rows[k] = v
    return image, kernel


@dataclass
class QuotientBasis:
    """Basis of a quotient ``space / subspace`` with dual functionals.

    ``representatives[j]`` lies in the space; ``functionals[i]`` vanishes on
    the subspace and satisfies ``functionals[i](representatives[j]) = [i == j]``.
    Applying the functionals to any vector of the space yields its coordinates
    modulo the subspace.
    """

    representatives: List[SparseVector]
    functionals: List[SparseVector]
    p: int = 0

    def __len__(self) -> int:
        return len(self.representatives)

    def coordinates(self, vec: SparseVector) -> list:
        return [dot(f, vec, self.p) for f in self.functionals]


def quotient_coordinates(space: Iterable[SparseVector], subspace: Iterable[SparseVector], p: int = 0) -> QuotientBasis:
    """Complement of ``subspace`` inside ``space`` plus coordinate functionals.

    ``subspace`` must be contained in the span of ``space``.
    """
    rs = RowSpace(p)
    for v in subspace:
        if v:
            rs.add(v)
    sub_pivots = set(rs.rows)
    reps = []
    for v in space:
        r = rs.add(v)
        if r is not None:
            reps.append(r)
    if not reps:
        return QuotientBasis([], [], p)
    pivots = sorted(rs.rows)
    # back substitution on the pivot columns: row with pivot q has support in
    # indices >= q, so the pivot-column matrix is unitriangular
    functionals = []
    rep_pivot = [min(r) for r in reps]
    for target in rep_pivot:
        psi: SparseVector = {}
        for q in reversed(pivots):
            row = rs.rows[q]
            want = 1 if q == target else 0
            acc = want
            for k, c in row.items():
                if k != q and k in psi:
                    acc -= psi[k] * c
            if p:
                acc %= p
            else:
                acc = _canon(acc)
            if acc:
                psi[q] = acc
        functionals.append(psi)
    del sub_pivots
    return QuotientBasis(reps, functionals, p)


# ---------------------------------------------------------------------------
# dense matrices over a field


def _to_sparse_rows(rows: Sequence[Sequence], p: int) -> List[SparseVector]:
    out = []
    for r in rows:
        if p:
            out.append({j: int(x) % p for j, x in enumerate(r) if int(x) % p})
        else:
            out.append({j: _canon(Fraction(x) if not isinstance(x, int) else x) for j, x in enumerate(r) if x})
    return out


def _dense(vec: SparseVector, n: int) -> list:
    return [vec.get(i, 0) for i in range(n)]


@dataclass(frozen=True)
class FieldMatrix:
    """Matrix over Q (characteristic 0) or F_p, stored as a tuple of rows."""

    rows: tuple
    ncols: int
    characteristic: int = 0

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], characteristic: int = 0, ncols: Optional[int] = None) -> "FieldMatrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        Coefficients(characteristic)
        p = characteristic
        conv = [[(int(x) % p) if p else _canon(x if isinstance(x, (int, Fraction)) else Fraction(x)) for x in r] for r in rows]
        return cls(tuple(tuple(r) for r in conv), ncols, characteristic)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def _columns(self) -> List[SparseVector]:
        cols = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if x:
                    cols[j][i] = x
        return cols

    def rank(self) -> int:
        return sparse_rank(_to_sparse_rows(self.rows, self.characteristic), self.characteristic)

    def kernel_basis(self) -> List[list]:
        """Basis of ``{x : A x = 0}`` as dense vectors."""
        _, ker = kernel_and_image(self._columns(), self.characteristic)
        return [_dense(v, self.ncols) for v in ker]

    def image_basis(self) -> List[list]:
        """Basis of the column space as dense vectors."""
        image, _ = kernel_and_image(self._columns(), self.characteristic)
        return [_dense(image.rows[k], self.nrows) for k in sorted(image.rows)]

    def solve(self, b: Sequence) -> list:
        """One solution of ``A x = b``; raises :class:`NoSolution`."""
        p = self.characteristic
        n = self.ncols
        # eliminate on the augmented rows [A | b]
        aug = []
        for r, bi in zip(self.rows, b):
            v = {j: x for j, x in enumerate(r) if x}
            bi = (int(bi) % p) if p else _canon(bi)
            if bi:
                v[n] = bi
            aug.append(v)
        if len(b) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        rs = RowSpace(p)
        for v in aug:
            if v:
                rs.add(v)
        if n in rs.rows:
            raise NoSolution("inconsistent linear system")
        x: SparseVector = {}
        for q in sorted(rs.rows, reverse=True):
            row = rs.rows[q]
            acc = row.get(n, 0)
            for k, c in row.items():
                if k != q and k != n:
                    acc -= c * x.get(k, 0)
            acc = acc % p if p else _canon(acc)
            if acc:
                x[q] = acc
        return _dense(x, n)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        p = self.characteristic
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = sum(a * b for a, b in zip(r, c))
                row.append(s % p if p else _canon(s))
            out.append(row)
        return FieldMatrix(tuple(tuple(r) for r in out), other.ncols, p)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass
class SmithForm:
    """Invariant factors ``d_1 | d_2 | ...`` of an integer matrix.

    When computed with transforms, ``U @ A @ V == D`` where ``D`` carries the
    invariant factors on its diagonal; ``U_inv``/``V_inv`` are the inverses.
    """

    invariant_factors: tuple
    rank: int
    shape: tuple = (0, 0)
    U: Optional[list] = None
    V: Optional[list] = None
    U_inv: Optional[list] = None
    V_inv: Optional[list] = None

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.invariant_factors if d > 1)

    def diagonal_matrix(self) -> list:
        r, c = self.shape
        D = [[0] * c for _ in range(r)]
        for i, d in enumerate(self.invariant_factors):
            D[i][i] = d
        return D


def _identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Sequence[Sequence[int]], transforms: bool = False, ncols: Optional[int] = None) -> SmithForm:
    """Smith normal form over Z with smallest-magnitude pivoting."""
    M = [list(map(int, r)) for r in A]
    nr = len(M)
    nc = ncols if ncols is not None else (len(M[0]) if M else 0)
    if any(len(r) != nc for r in M):
        raise ValueError("ragged matrix")
    if transforms:
        U, Ui = _identity(nr), _identity(nr)
        V, Vi = _identity(nc), _identity(nc)

    def row_swap(i, j):
        M[i], M[j] = M[j], M[i]
        if transforms:
            U[i], U[j] = U[j], U[i]
            for r in Ui:
                r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]
        if transforms:
            for r in V:
                r[i], r[j] = r[j], r[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def row_add(dst, src, q):
        # row_dst += q * row_src
        if not q:
            return
        rd, rs_ = M[dst], M[src]
        for k in range(nc):
            if rs_[k]:
                rd[k] += q * rs_[k]
        if transforms:
            ud, us = U[dst], U[src]
            for k in range(nr):
                if us[k]:
                    ud[k] += q * us[k]
            for r in Ui:
                if r[dst]:
                    r[src] -= q * r[dst]

    def col_add(dst, src, q):
        # col_dst += q * col_src
        if not q:
            return
        for r in M:
            if r[src]:
                r[dst] += q * r[src]
        if transforms:
            for r in V:
                if r[src]:
                    r[dst] += q * r[src]
            vd, vs = Vi[dst], Vi[src]
            for k in range(nc):
                if vd[k]:
                    vs[k] -= q * vd[k]

    def row_neg(i):
        M[i] = [-x for x in M[i]]
        if transforms:
            U[i] = [-x for x in U[i]]
            for r in Ui:
                r[i] = -r[i]

    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = M[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            row_swap(i, t)
        if j != t:
            col_swap(j, t)
        while True:
            piv = M[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if M[i][t]:
                    row_add(i, t, -(M[i][t] // piv))
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if M[t][j]:
                    col_add(j, t, -(M[t][j] // piv))
                    if M[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remaining entry of row/column t to the pivot
                cand = [(abs(M[i][t]), i, t) for i in range(t, nr) if M[i][t]]
                cand += [(abs(M[t][j]), t, j) for j in range(t, nc) if M[t][j]]
                _, i, j = min(cand)
                if i != t:
                    row_swap(i, t)
                if j != t:
                    col_swap(j, t)
                continue
            # divisibility of the remaining block
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if M[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if M[t][t] < 0:
            row_neg(t)
        t += 1
    factors = tuple(M[i][i] for i in range(t))
    sf = SmithForm(factors, len(factors), (nr, nc))
    if transforms:
        sf.U, sf.V, sf.U_inv, sf.V_inv = U, V, Ui, Vi
    return sf


def invariant_factors(columns: Sequence[SparseVector], nrows: int) -> tuple:
    """Invariant factors of a sparse integer matrix given by columns.

    Unit pivots are eliminated sparsely first (each contributes a factor 1);
    the leftover block goes through :func:`smith_normal_form`.
    """
    cols = [dict(c) for c in columns if c]
    units = 0
    # row index -> set of column positions touching it
    changed = True
    while changed:
        changed = False
        for ci, col in enumerate(cols):
            if not col:
                continue
            piv_row = None
            for r, x in col.items():
                if x == 1 or x == -1:
                    piv_row = r
                    break
            if piv_row is None:
                continue
            a = col[piv_row]
            # clear this row from every other column, then drop row and column
            for cj, other in enumerate(cols):
                if cj == ci or not other:
                    continue
                b = other.get(piv_row)
                if b:
                    axpy(other, -b * a, col)
            cols[ci] = {}
            units += 1
            changed = True
    rest = [c for c in cols if c]
    if not rest:
        return (1,) * units
    rows_used = sorted({r for c in rest for r in c})
    idx = {r: i for i, r in enumerate(rows_used)}
    dense = [[0] * len(rest) for _ in rows_used]
    for j, c in enumerate(rest):
        for r, x in c.items():
            dense[idx[r]][j] = x
    sf = smith_normal_form(dense)
    return (1,) * units + sf.invariant_factors


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> list:
    cols = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in A]


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g
