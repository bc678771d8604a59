"""Reduced simplicial (co)homology with explicit representatives.

Chains and cochains are sparse ``dict`` objects keyed by simplex bitmasks, so
that cochains on different full subcomplexes of one complex live in a common
coordinate system.  Simplices are oriented by increasing vertex order and the
augmentation ``C_0 -> C_{-1} = k·∅`` is part of every chain complex, which
makes degree ``-1`` behave like any other degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence

from .complex_core import SimplicialComplex, popcount, to_labels, to_mask
from .exact_linalg import (
    Coefficients,
    QuotientBasis,
    SparseVector,
    dot,
    invariant_factors,
    kernel_and_image,
    quotient_coordinates,
    smith_normal_form,
    sparse_rank,
)
from .exceptions import InternalInconsistency, NoFundamentalClass, NotSubcomplex, TorsionUnsupported


def boundary(sigma: int) -> Dict[int, int]:
    """Boundary of an oriented simplex; a vertex maps to ``+∅``."""
    out = {}
    sign = 1
    g = sigma
    while g:
        low = g & -g
        out[sigma & ~low] = sign
        sign = -sign
        g &= g - 1
    return out


def theta(A: int, B: int) -> int:
    """``Σ_{a∈A} #{b∈B : b<a}`` for vertex bitmasks."""
    total = 0
    g = A
    while g:
        low = g & -g
        total += popcount(B & (low - 1))
        g &= g - 1
    return total


class ChainComplex:
    """Augmented simplicial chain complex of ``K`` (or of ``K_I``)."""

    def __init__(self, K: SimplicialComplex, subset=None, validate: bool = True):
        self.complex = K
        self.subset = K.vertex_mask if subset is None else to_mask(subset)
        I = self.subset
        groups: Dict[int, list] = {}
        for f in K.faces:
            if f & I == f:
                groups.setdefault(popcount(f) - 1, []).append(f)
        self.bases: Dict[int, tuple] = {d: tuple(sorted(g, key=to_labels)) for d, g in sorted(groups.items())}
        self.top = max(self.bases)
        self.index = {d: {s: i for i, s in enumerate(b)} for d, b in self.bases.items()}
        if validate:
            self.check()

    def simplices(self, d: int) -> tuple:
        return self.bases.get(d, ())

    def boundary_columns(self, d: int) -> List[Dict[int, int]]:
        if d <= -1:
            return [{} for _ in self.simplices(d)]
        return [boundary(s) for s in self.simplices(d)]

    def boundary_matrix(self, d: int) -> List[List[int]]:
        """Dense matrix of ``∂_d`` with rows and columns in basis order."""
        rows = self.simplices(d - 1)
        cols = self.simplices(d)
        idx = self.index.get(d - 1, {})
        M = [[0] * len(cols) for _ in rows]
        if d <= -1:
            return M
        for j, s in enumerate(cols):
            for face, c in boundary(s).items():
                M[idx[face]][j] = c
        return M

    def check(self) -> None:
        for d in range(1, self.top + 1):
            for s in self.simplices(d):
                acc: Dict[int, int] = {}
                for face, c in boundary(s).items():
                    for f2, c2 in boundary(face).items():
                        acc[f2] = acc.get(f2, 0) + c * c2
                if any(acc.values()):
                    raise InternalInconsistency("boundary of a boundary is nonzero")


@dataclass
class HomologySummary:
    """Betti numbers and torsion of reduced homology, degrees ``-1..dim``."""

    betti: Dict[int, int]
    torsion: Dict[int, tuple] = field(default_factory=dict)
    coefficients: str = "z"

    def rank(self, d: int) -> int:
        return self.betti.get(d, 0)

    def cohomology_torsion(self, d: int) -> tuple:
        """Torsion of ``H̃^d``, which is the torsion of ``H̃_{d-1}``."""
        return self.torsion.get(d - 1, ())

    @property
    def is_torsion_free(self) -> bool:
        return not any(self.torsion.values())

    def nonzero(self) -> Dict[int, int]:
        return {d: r for d, r in self.betti.items() if r}


def _rank(columns, p):
    return sparse_rank([c for c in columns if c], p)


def reduced_homology(K: SimplicialComplex, coefficients="z", subset=None) -> HomologySummary:
    coeffs = Coefficients.parse(coefficients)
    C = ChainComplex(K, subset, validate=False)
    p = coeffs.characteristic
    ranks = {d: _rank(C.boundary_columns(d), p) for d in range(0, C.top + 1)}
    betti = {}
    torsion = {}
    for d in range(-1, C.top + 1):
        betti[d] = len(C.simplices(d)) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if coeffs.integral and d + 1 <= C.top:
            factors = invariant_factors(C.boundary_columns(d + 1), len(C.simplices(d)))
            tors = tuple(x for x in factors if x > 1)
            if tors:
                torsion[d] = tors
    return HomologySummary(betti, torsion, str(coeffs))


def subset_betti(faces_by_dim: Dict[int, Sequence[int]], p: int = 0) -> Dict[int, int]:
    """Reduced Betti numbers from simplices grouped by dimension (fast path)."""
    if not faces_by_dim:
        return {}
    top = max(faces_by_dim)
    ranks = {}
    for d in range(0, top + 1):
        ranks[d] = _rank([boundary(s) for s in faces_by_dim.get(d, ())], p)
    out = {}
    for d in range(-1, top + 1):
        b = len(faces_by_dim.get(d, ())) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    return out


@dataclass
class CohomologyBasis:
    """Basis of ``H̃^d`` by cocycles together with dual homology cycles.

    ``representatives[j]`` is a cocycle and ``cycles[i]`` a cycle with
    ``representatives[j](cycles[i]) = [i == j]``.  The coordinates of a
    cocycle ``w`` are ``(w(cycles[i]))_i``.
    """

    degree: int
    representatives: List[SparseVector]
    cycles: List[SparseVector]
    characteristic: int = 0

    @property
    def rank(self) -> int:
        return len(self.representatives)

    def coordinates(self, cochain: SparseVector) -> list:
        p = self.characteristic
        return [dot(cochain, z, p) for z in self.cycles]

    def homology_coordinates(self, chain: SparseVector) -> list:
        """Coordinates of a cycle in the basis ``cycles``."""
        p = self.characteristic
        return [dot(phi, chain, p) for phi in self.representatives]


def _keyed(vec: SparseVector, basis: Sequence[int]) -> SparseVector:
    return {basis[i]: c for i, c in vec.items()}


def _field_basis(C: ChainComplex, d: int, p: int) -> CohomologyBasis:
    cols = C.boundary_columns(d)
    _, kernel = kernel_and_image(cols, p)
    cycles = [_keyed(z, C.simplices(d)) for z in kernel]
    bounds = C.boundary_columns(d + 1) if d + 1 <= C.top else []
    q: QuotientBasis = quotient_coordinates(cycles, bounds, p)
    return CohomologyBasis(d, q.functionals, q.representatives, p)


def _integral_basis(C: ChainComplex, d: int) -> CohomologyBasis:
    simp = C.simplices(d)
    n = len(simp)
    if n == 0:
        return CohomologyBasis(d, [], [], 0)
    A = C.boundary_matrix(d) if d >= 0 else [[0] * n for _ in C.simplices(d - 1)]
    if not A:
        A = []
    sf = smith_normal_form(A, transforms=True, ncols=n)
    r = sf.rank
    V, Vi = sf.V, sf.V_inv
    z = n - r
    if z == 0:
        return CohomologyBasis(d, [], [], 0)
    B = C.boundary_matrix(d + 1) if d + 1 <= C.top else [[] for _ in range(n)]
    nb = len(B[0]) if B and B[0] else 0
    # coordinates of boundaries in the cycle basis V[:, r:]
    Cm = [[sum(Vi[r + i][k] * B[k][j] for k in range(n)) for j in range(nb)] for i in range(z)]
    sf2 = smith_normal_form(Cm, transforms=True, ncols=nb)
    if sf2.torsion:
        raise TorsionUnsupported(f"H_{d} has torsion {sf2.torsion}")
    r2 = sf2.rank
    U2, U2i = sf2.U, sf2.U_inv
    cycles, reps = [], []
    for j in range(r2, z):
        cyc = {}
        for k in range(n):
            s = sum(V[k][r + i] * U2i[i][j] for i in range(z))
            if s:
                cyc[simp[k]] = s
        cycles.append(cyc)
        fun = {}
        for k in range(n):
            s = sum(U2[j][i] * Vi[r + i][k] for i in range(z))
            if s:
                fun[simp[k]] = s
        reps.append(fun)
    return CohomologyBasis(d, reps, cycles, 0)


def reduced_cohomology_basis(K: SimplicialComplex, coefficients="q", subset=None, degrees=None) -> Dict[int, CohomologyBasis]:
    """Cohomology bases in every degree with nonzero reduced cohomology."""
    coeffs = Coefficients.parse(coefficients)
    C = ChainComplex(K, subset, validate=False)
    return chain_cohomology_basis(C, coeffs, degrees)


def chain_cohomology_basis(C: ChainComplex, coeffs: Coefficients, degrees=None) -> Dict[int, CohomologyBasis]:
    out = {}
    if coeffs.integral:
        summary_torsion = any(
            x > 1
            for d in range(0, C.top + 1)
            for x in invariant_factors(C.boundary_columns(d), len(C.simplices(d - 1)))
        )
        if summary_torsion:
            raise TorsionUnsupported("integral ring structure needs torsion-free homology")
    for d in range(-1, C.top + 1):
        if degrees is not None and d not in degrees:
            continue
        b = _integral_basis(C, d) if coeffs.integral else _field_basis(C, d, coeffs.characteristic)
        if b.rank:
            out[d] = b
    return out


@dataclass
class FundamentalClass:
    cycle: Dict[int, object]
    degree: int

    def facet_signs(self) -> Dict[tuple, object]:
        return {to_labels(s): c for s, c in self.cycle.items()}


def fundamental_class(K: SimplicialComplex, coefficients="z") -> FundamentalClass:
    """Generator of top homology; the lexicographically first facet gets ``+1``."""
    coeffs = Coefficients.parse(coefficients)
    p = coeffs.characteristic
    if not K.is_pure() or K.dim < 0:
        raise NoFundamentalClass("complex is not pure")
    C = ChainComplex(K, validate=False)
    d = C.top
    _, kernel = kernel_and_image(C.boundary_columns(d), p)
    if len(kernel) != 1:
        raise NoFundamentalClass(f"top homology has rank {len(kernel)}")
    z = _keyed(kernel[0], C.simplices(d))
    if coeffs.integral or p == 0:
        den = 1
        for c in z.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        z = {k: int(c * den) for k, c in z.items()}
        g = 0
        for c in z.values():
            g = gcd(g, c)
        z = {k: c // g for k, c in z.items()}
    first = min(z, key=to_labels)
    if z[first] != 1:
        if p:
            inv = pow(z[first], -1, p)
            z = {k: (c * inv) % p for k, c in z.items()}
        else:
            s = 1 if z[first] > 0 else -1
            z = {k: s * c for k, c in z.items()}
    if coeffs.integral and any(abs(c) != 1 for c in z.values()):
        raise NoFundamentalClass("top cycle is not a pseudomanifold orientation")
    if set(z) != set(K.facets):
        raise NoFundamentalClass("top cycle does not cover every facet")
    return FundamentalClass(z, d)


# ---------------------------------------------------------------------------
# chain-level products


def union_product(u: SparseVector, v: SparseVector, K: SimplicialComplex, p: int = 0) -> SparseVector:
    """``u ⊔ v`` expressed in the increasing-order basis of ``K``.

    A juxtaposed simplex ``(σ, τ)`` equals ``(-1)^θ(σ,τ)`` times ``σ ∪ τ`` in
    increasing order; pairs with ``σ ∩ τ ≠ ∅`` or ``σ ∪ τ ∉ K`` contribute 0.
    """
    faces = K.faces
    out: Dict[int, object] = {}
    for s, a in u.items():
        for t, b in v.items():
            if s & t:
                continue
            st = s | t
            if st not in faces:
                continue
            c = a * b
            if theta(s, t) & 1:
                c = -c
            out[st] = out.get(st, 0) + c
    return _clean(out, p)


def excision_product(c: SparseVector, phi: SparseVector, I=None, J=None, p: int = 0) -> SparseVector:
    """``c ⊓ φ``: each ``σ ⊓ τ`` with ``τ ⊆ σ`` gives ``ε (σ∖τ)``.

    ``ε`` is the sign of the shuffle putting ``τ`` in front of ``σ∖τ``.  When
    the supports ``I`` of ``c`` and ``J ⊆ I`` of ``φ`` are given, terms with
    ``σ∖τ ⊄ I∖J`` are dropped.
    """
    allowed = None
    if I is not None and J is not None:
        allowed = to_mask(I) & ~to_mask(J)
    out: Dict[int, object] = {}
    for s, a in c.items():
        for t, b in phi.items():
            if t & s != t:
                continue
            rest = s & ~t
            if allowed is not None and rest & ~allowed:
                continue
            x = a * b
            if theta(t, rest) & 1:
                x = -x
            out[rest] = out.get(rest, 0) + x
    return _clean(out, p)


def evaluate(cochain: SparseVector, chain: SparseVector, p: int = 0):
    return dot(cochain, chain, p)


def coboundary(phi: SparseVector, K: SimplicialComplex, subset=None, p: int = 0) -> SparseVector:
    """``δφ`` on ``K_I`` (``I`` defaults to all vertices)."""
    I = K.vertex_mask if subset is None else to_mask(subset)
    out: Dict[int, object] = {}
    for s in K.faces:
        if s & I != s or not s:
            continue
        acc = 0
        for face, c in boundary(s).items():
            x = phi.get(face)
            if x:
                acc += c * x
        if acc:
            out[s] = acc
    return _clean(out, p)


def _clean(vec: Dict[int, object], p: int) -> SparseVector:
    if p:
        return {k: c % p for k, c in vec.items() if c % p}
    return {k: (c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c) for k, c in vec.items() if c}


def induced_map_homology(K_sub: SimplicialComplex, K: SimplicialComplex, subset, degree: int, coefficients="q") -> List[list]:
    """Matrix of ``H̃_d((K_sub)_I) -> H̃_d(K_I)`` in the computed bases.

    Column ``i`` holds the image of the ``i``-th basis cycle of the source.
    """
    if not K_sub.is_subcomplex_of(K):
        raise NotSubcomplex("first complex is not a subcomplex of the second")
    coeffs = Coefficients.parse(coefficients)
    I = to_mask(subset)
    src = reduced_cohomology_basis(K_sub, coeffs, I, degrees={degree}).get(degree)
    dst = reduced_cohomology_basis(K, coeffs, I, degrees={degree}).get(degree)
    if src is None or dst is None:
        return [[] for _ in range(dst.rank if dst else 0)]
    return [[dot(phi, z, coeffs.characteristic) for z in src.cycles] for phi in dst.representatives]
