"""Cohomology of moment-angle complexes through full subcomplexes.

Every class of ``H*(Z_K)`` is indexed by a subset ``J ⊆ [m]`` and a class of
``H̃^d(K_J)``; its total degree is ``|J| + d + 1``.  :class:`HochsterRing`
builds explicit cocycle bases for every ``K_J`` and multiplies classes with
the signed union product, projecting the result back into the chosen bases.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .complex_core import (
    SimplicialComplex,
    full_mask,
    is_2_sphere,
    is_flag,
    missing_faces,
    popcount,
    to_labels,
    to_mask,
)
from .exact_linalg import Coefficients, FieldMatrix, RowSpace, axpy, dot
from .exceptions import InternalInconsistency, NoFundamentalClass, NotASphere, NotPoincareCandidate
from .graded_ring import GradedAlgebra, RingFingerprint, assemble_fingerprint, is_poincare_algebra
from .homology import (
    ChainComplex,
    CohomologyBasis,
    chain_cohomology_basis,
    excision_product,
    fundamental_class,
    induced_map_homology,
    reduced_homology,
    subset_betti,
    theta,
    union_product,
)

JOBS_ENV = "HOCHSTER_JOBS"


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def subsets_in_order(m: int) -> List[int]:
    """All subsets of ``[m]`` by increasing size, then numerically."""
    return sorted(range(1 << m), key=lambda J: (popcount(J), J))


def map_subsets(func: Callable, K: SimplicialComplex, subsets: Sequence[int], jobs: Optional[int] = None, *args) -> list:
    """``[func(K, J, *args) for J in subsets]``, optionally in worker processes.

    Results come back in input order, so the merge is deterministic.
    """
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(subsets) < 64:
        return [func(K, J, *args) for J in subsets]
    chunk = max(1, len(subsets) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_call, [(func, K, J, args) for J in subsets], chunksize=chunk))


def _call(job):
    func, K, J, args = job
    return func(K, J, *args)


def _faces_by_dim(K: SimplicialComplex, J: int) -> Dict[int, list]:
    groups: Dict[int, list] = {}
    for f in K.faces:
        if f & J == f:
            groups.setdefault(popcount(f) - 1, []).append(f)
    return groups


def _subset_ranks(K: SimplicialComplex, J: int, p: int, integral: bool):
    ranks = subset_betti(_faces_by_dim(K, J), p)
    torsion = {}
    if integral:
        summary = reduced_homology(K, "z", J)
        for d, t in summary.torsion.items():
            # torsion of H_d appears in H^{d+1}
            torsion[d + 1] = t
    return ranks, torsion


# ---------------------------------------------------------------------------
# bigraded Betti numbers


@dataclass
class BigradedBetti:
    """Ranks of ``H̃^d(K_J)`` keyed by ``(J, d)`` (nonzero entries only)."""

    m: int
    ranks: Dict[Tuple[int, int], int]
    torsion: Dict[Tuple[int, int], tuple] = field(default_factory=dict)
    coefficients: str = "z"

    @staticmethod
    def total_degree(J: int, d: int) -> int:
        return popcount(J) + d + 1

    @staticmethod
    def tor_bidegree(J: int, d: int) -> Tuple[int, int]:
        """``(−i, 2|J|)`` with ``d = |J| − i − 1``."""
        i = popcount(J) - d - 1
        return (-i, 2 * popcount(J))

    def betti(self) -> List[int]:
        """Betti numbers of ``Z_K`` indexed by degree."""
        if not self.ranks:
            return []
        top = max(self.total_degree(J, d) for J, d in self.ranks)
        out = [0] * (top + 1)
        for (J, d), r in self.ranks.items():
            out[self.total_degree(J, d)] += r
        return out

    def torsion_by_degree(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for (J, d), t in sorted(self.torsion.items()):
            out.setdefault(self.total_degree(J, d), []).extend(t)
        return {k: sorted(v) for k, v in sorted(out.items())}

    def rows(self, include_empty: bool = False) -> List[dict]:
        out = []
        for (J, d), r in sorted(self.ranks.items(), key=lambda kv: (popcount(kv[0][0]), kv[0][0], kv[0][1])):
            if J == 0 and not include_empty:
                continue
            out.append({"J": list(to_labels(J)), "d": d, "rank": r})
        return out

    def rank(self, J, d: int) -> int:
        return self.ranks.get((to_mask(J), d), 0)


def bigraded_betti(K: SimplicialComplex, coefficients="z", jobs: Optional[int] = None) -> BigradedBetti:
    coeffs = Coefficients.parse(coefficients)
    subsets = subsets_in_order(K.m)
    results = map_subsets(_subset_ranks, K, subsets, jobs, coeffs.characteristic, coeffs.integral)
    ranks, torsion = {}, {}
    for J, (r, t) in zip(subsets, results):
        for d, x in r.items():
            ranks[(J, d)] = x
        for d, x in t.items():
            torsion[(J, d)] = x
    return BigradedBetti(K.m, ranks, torsion, str(coeffs))


def betti_numbers(K: SimplicialComplex, coefficients="z", jobs: Optional[int] = None) -> List[int]:
    return bigraded_betti(K, coefficients, jobs).betti()


# ---------------------------------------------------------------------------
# the ring


def star_sign(I: int, J: int, q: int) -> int:
    """Sign ``(−1)^{|I| q + θ(I, J)}`` for ``[u] ∈ H̃^{p−1}(K_I)``, ``[v] ∈ H̃^{q−1}(K_J)``."""
    return -1 if (popcount(I) * q + theta(I, J)) & 1 else 1


def zeta_sign(sigma: int, tau: int, I: int, J: int) -> int:
    """Simplex-level sign of the star product against the increasing-order basis.

    ``ζ = θ(σ,I) + θ(τ,J) + θ(σ∪τ, I∪J) + θ(I∖σ, J∖τ)``.
    """
    z = theta(sigma, I) + theta(tau, J) + theta(sigma | tau, I | J) + theta(I & ~sigma, J & ~tau)
    return -1 if z & 1 else 1


@dataclass(frozen=True)
class HochsterClass:
    J: int
    d: int
    index: int

    @property
    def degree(self) -> int:
        return popcount(self.J) + self.d + 1

    @property
    def label(self) -> str:
        return "J=" + ",".join(map(str, to_labels(self.J))) + f";d={self.d};#{self.index}"


def _subset_bases(K: SimplicialComplex, J: int, coeffs: Coefficients):
    C = ChainComplex(K, J, validate=False)
    return chain_cohomology_basis(C, coeffs)


class HochsterRing:
    """Reduced cohomology ring of ``Z_K`` with the star product.

    The basis runs over nonempty ``J`` and is ordered by total degree, then
    ``|J|``, then ``J`` numerically, then the reduced degree and index.
    """

    def __init__(self, K: SimplicialComplex, coefficients="q", jobs: Optional[int] = None):
        self.complex = K
        self.coefficients = Coefficients.parse(coefficients)
        self.characteristic = self.coefficients.characteristic
        subsets = [J for J in subsets_in_order(K.m) if J]
        results = map_subsets(_subset_bases, K, subsets, jobs, self.coefficients)
        self.components: Dict[Tuple[int, int], CohomologyBasis] = {}
        for J, bases in zip(subsets, results):
            for d, b in bases.items():
                self.components[(J, d)] = b
        keys = sorted(self.components, key=lambda k: (popcount(k[0]) + k[1] + 1, popcount(k[0]), k[0], k[1]))
        self.basis: List[HochsterClass] = []
        self.offset: Dict[Tuple[int, int], int] = {}
        for key in keys:
            self.offset[key] = len(self.basis)
            for i in range(self.components[key].rank):
                self.basis.append(HochsterClass(key[0], key[1], i))
        self._cache: Dict[Tuple[int, int], dict] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def degree(self, i: int) -> int:
        return self.basis[i].degree

    def hilbert(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for c in self.basis:
            out[c.degree] = out.get(c.degree, 0) + 1
        return dict(sorted(out.items()))

    def index_of(self, J, d: int, i: int = 0) -> int:
        return self.offset[(to_mask(J), d)] + i

    def representative(self, i: int) -> dict:
        c = self.basis[i]
        return self.components[(c.J, c.d)].representatives[c.index]

    def _component_products(self, ka, kb) -> Dict[Tuple[int, int], dict]:
        """Products of every basis pair from two components."""
        I, du = ka
        J, dv = kb
        out = {}
        if I & J:
            return out
        kt = (I | J, du + dv + 1)
        target = self.components.get(kt)
        if target is None:
            return out
        sign = star_sign(I, J, dv + 1)
        p = self.characteristic
        K = self.complex
        A, B = self.components[ka], self.components[kb]
        base_a, base_b, base_t = self.offset[ka], self.offset[kb], self.offset[kt]
        for a, u in enumerate(A.representatives):
            for b, v in enumerate(B.representatives):
                w = union_product(u, v, K, p)
                if not w:
                    continue
                coords = target.coordinates(w)
                res = {}
                for k, c in enumerate(coords):
                    if c:
                        c = sign * c
                        res[base_t + k] = c % p if p else c
                if res:
                    out[(base_a + a, base_b + b)] = res
        return out

    def star_product(self, i: int, j: int) -> dict:
        key = (i, j)
        if key not in self._cache:
            ci, cj = self.basis[i], self.basis[j]
            prods = self._component_products((ci.J, ci.d), (cj.J, cj.d))
            for k, v in prods.items():
                self._cache.setdefault(k, v)
            for a in range(self.offset[(ci.J, ci.d)], self.offset[(ci.J, ci.d)] + self.components[(ci.J, ci.d)].rank):
                for b in range(self.offset[(cj.J, cj.d)], self.offset[(cj.J, cj.d)] + self.components[(cj.J, cj.d)].rank):
                    self._cache.setdefault((a, b), {})
        return dict(self._cache[key])

    def multiply(self, x: dict, y: dict) -> dict:
        p = self.characteristic
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.star_product(i, j)
                if prod:
                    axpy(out, a * b, prod, p)
        return out

    def multiplication_table(self) -> Dict[Tuple[int, int], dict]:
        """All nonzero products of basis pairs."""
        table: Dict[Tuple[int, int], dict] = {}
        comps = list(self.components)
        by_mask: Dict[int, List[Tuple[int, int]]] = {}
        for k in comps:
            by_mask.setdefault(k[0], []).append(k)
        masks = sorted(by_mask)
        present = set(self.components)
        for I in masks:
            for J in masks:
                if I & J:
                    continue
                for ka in by_mask[I]:
                    for kb in by_mask[J]:
                        if (I | J, ka[1] + kb[1] + 1) not in present:
                            continue
                        table.update(self._component_products(ka, kb))
        return table

    @cached_property
    def algebra(self) -> GradedAlgebra:
        return GradedAlgebra(
            [c.degree for c in self.basis],
            self.multiplication_table(),
            self.characteristic,
            [c.label for c in self.basis],
            keys=[(c.J, c.d) for c in self.basis],
        )

    def fingerprint(self) -> RingFingerprint:
        """Fingerprint computed one target component at a time.

        Avoids building the full table: each product group stops as soon as
        it spans its target component.
        """
        by_mask: Dict[int, List[int]] = {}
        for J, d in self.components:
            by_mask.setdefault(J, []).append(d)

        def deg(J, d):
            return popcount(J) + d + 1

        def groups(L, dt):
            A = (L - 1) & L
            while A:
                B = L ^ A
                if A in by_mask and B in by_mask:
                    for du in by_mask[A]:
                        dv = dt - du - 1
                        if (B, dv) not in self.components:
                            continue
                        i, j = deg(A, du), deg(B, dv)
                        # commuting factors give the same span, keep one order
                        if (i, A) > (j, B):
                            continue
                        yield i, j, (lambda ka=(A, du), kb=(B, dv): self._component_products(ka, kb).values())
                A = (A - 1) & L

        components = (
            (deg(L, dt), self.components[(L, dt)].rank, groups(L, dt))
            for (L, dt) in self.components
        )
        return assemble_fingerprint(self.hilbert(), components, self.characteristic)

    def to_algebra(self) -> GradedAlgebra:
        return self.algebra


def hochster_ring(K: SimplicialComplex, coefficients="q", jobs: Optional[int] = None) -> HochsterRing:
    return HochsterRing(K, coefficients, jobs)


# ---------------------------------------------------------------------------
# Alexander duality and Gorenstein* checks


def _field_for(coeffs: Coefficients) -> Coefficients:
    return Coefficients(coeffs.characteristic) if coeffs.integral else coeffs


@dataclass
class DualityReport:
    """Per-subset verdicts for ``H̃^i(K_I) ≅ H̃_{dim K − i − 1}(K_{[m]∖I})``."""

    rank_ok: Dict[int, bool] = field(default_factory=dict)
    map_ok: Dict[int, bool] = field(default_factory=dict)
    reason: str = ""

    @property
    def overall_pass(self) -> bool:
        return bool(self.rank_ok) and all(self.rank_ok.values()) and all(self.map_ok.values())

    def failures(self) -> List[Tuple[int, ...]]:
        return [to_labels(I) for I in self.rank_ok if not (self.rank_ok[I] and self.map_ok.get(I, True))]


def alexander_duality_check(K: SimplicialComplex, coefficients="q") -> DualityReport:
    """Rank- and map-level duality check on the vertex support of ``K``.

    Over Z the free ranks and torsion groups are compared and the excision
    map is checked over Q.
    """
    coeffs = Coefficients.parse(coefficients)
    field_ = _field_for(coeffs)
    p = field_.characteristic
    L = K.support_complex()
    report = DualityReport()
    if L.dim < 0 or not L.is_pure():
        report.reason = "not a pure complex"
        return report
    try:
        fc = fundamental_class(L, coeffs if not coeffs.integral else "q")
    except NoFundamentalClass as exc:
        report.reason = f"no fundamental class: {exc}"
        return report
    n = L.dim
    full = full_mask(L.m)
    bases = {}

    def basis(J):
        if J not in bases:
            bases[J] = chain_cohomology_basis(ChainComplex(L, J, validate=False), field_)
        return bases[J]

    summaries = {}

    def zsum(J):
        if J not in summaries:
            summaries[J] = reduced_homology(L, "z", J)
        return summaries[J]

    for I in subsets_in_order(L.m):
        comp = full & ~I
        src_all, dst_all = basis(I), basis(comp)
        ok_rank = True
        ok_map = True
        for i in range(-1, n + 1):
            src = src_all.get(i)
            dst = dst_all.get(n - i - 1)
            rs = src.rank if src else 0
            rd = dst.rank if dst else 0
            if rs != rd:
                ok_rank = False
                break
            if coeffs.integral and zsum(I).cohomology_torsion(i) != zsum(comp).torsion.get(n - i - 1, ()):
                ok_rank = False
                break
            if rs == 0:
                continue
            M = []
            for phi_row in dst.representatives:
                M.append([dot(phi_row, excision_product(fc.cycle, u, full, I, p), p) for u in src.representatives])
            if FieldMatrix.from_rows(M, p).rank() != rs:
                ok_map = False
        report.rank_ok[I] = ok_rank
        report.map_ok[I] = ok_map
    if not report.overall_pass:
        report.reason = f"duality fails for {len(report.failures())} subsets"
    return report


@dataclass
class GorensteinVerdict:
    value: bool
    witness: Optional[Tuple[int, ...]] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.value


def _sphere_like(summary, dim: int) -> bool:
    if not summary.is_torsion_free and summary.coefficients == "z":
        return False
    return summary.nonzero() == {dim: 1}


def is_gorenstein_star(K: SimplicialComplex, coefficients="q") -> GorensteinVerdict:
    """Not a cone, and every link (including that of ∅) is a homology sphere."""
    coeffs = Coefficients.parse(coefficients)
    L = K.support_complex()
    if L.is_cone():
        common = full_mask(L.m)
        for f in L.facets:
            common &= f
        return GorensteinVerdict(False, to_labels(common & -common), "complex is a cone")
    for sigma in sorted(L.faces, key=lambda f: (popcount(f), to_labels(f))):
        lk = L.link(sigma)
        summary = reduced_homology(lk, coeffs)
        if not _sphere_like(summary, lk.dim):
            back = K.vertices
            witness = tuple(back[v - 1] for v in to_labels(sigma))
            return GorensteinVerdict(False, witness, f"link of {witness} is not a homology sphere")
    return GorensteinVerdict(True)


def cross_validate_gorenstein(K: SimplicialComplex, coefficients="q") -> bool:
    a = is_gorenstein_star(K, coefficients).value
    b = alexander_duality_check(K, coefficients).overall_pass
    if a != b:
        raise InternalInconsistency(f"link criterion says {a}, duality says {b}")
    return a


def poincare_pairing_check(ring) -> bool:
    """Perfect pairings into a one-dimensional top degree."""
    A = ring.to_algebra() if isinstance(ring, HochsterRing) else ring
    if A.characteristic == 0 and isinstance(ring, HochsterRing) and ring.coefficients.integral:
        raise NotPoincareCandidate("pairing check needs field coefficients")
    return is_poincare_algebra(A)


# ---------------------------------------------------------------------------
# numerical invariants of 2-spheres and pseudomanifolds


def rank_h3_invariant(K: SimplicialComplex) -> int:
    """``C(m,2) − (3m − 6)``, asserted against missing edges and ``rank H³(Z_K)``."""
    if not is_2_sphere(K):
        raise NotASphere("rank of H^3 formula needs a simplicial 2-sphere")
    m = K.vertex_count
    formula = comb(m, 2) - (3 * m - 6)
    edges = sum(1 for mf in missing_faces(K) if len(mf) == 2)
    computed = 0
    for J in range(1 << K.m):
        if popcount(J) == 2:
            computed += subset_betti(_faces_by_dim(K, J)).get(0, 0)
    if not formula == edges == computed:
        raise InternalInconsistency(f"formula {formula}, missing edges {edges}, computed {computed}")
    return formula


def is_closed_pseudomanifold(K: SimplicialComplex) -> bool:
    if K.dim < 1 or not K.is_pure():
        return False
    counts: Dict[int, int] = {}
    for f in K.facets:
        g = f
        while g:
            low = g & -g
            counts[f & ~low] = counts.get(f & ~low, 0) + 1
            g &= g - 1
    return all(c == 2 for c in counts.values())


@dataclass
class LBCReport:
    holds: bool
    edges: int
    bound: int

    @property
    def tight(self) -> bool:
        return self.edges == self.bound

    def __bool__(self) -> bool:
        return self.holds


def lbc_report(K: SimplicialComplex) -> LBCReport:
    """``e ≥ m n − C(n+1, 2)`` for a closed pseudomanifold of dimension ``n − 1``."""
    if not is_closed_pseudomanifold(K):
        raise NotASphere("edge bound applies to closed pseudomanifolds")
    n = K.dim + 1
    m = K.vertex_count
    bound = m * n - comb(n + 1, 2)
    e = K.edge_count()
    return LBCReport(e >= bound, e, bound)


def lbc_check(K: SimplicialComplex) -> bool:
    return lbc_report(K).holds


# ---------------------------------------------------------------------------
# generation by the lowest Hochster degree


@dataclass
class GenerationReport:
    value: bool
    failing: Optional[Tuple[int, ...]] = None
    higher_generated: bool = True
    higher_failing: Optional[Tuple[int, ...]] = None
    witness_partitions: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.value


def _products_span(ring: HochsterRing, target_key, left_d: int, right_d: int) -> Tuple[int, list]:
    I, dt = target_key
    target = ring.components[target_key]
    p = ring.characteristic
    rs = RowSpace(p)
    partitions = []
    A = I
    while A:
        A = (A - 1) & I
        if A == 0:
            break
        B = I & ~A
        ka, kb = (A, left_d), (B, right_d)
        if ka in ring.components and kb in ring.components:
            partitions.append((to_labels(A), to_labels(B)))
            for v in ring._component_products(ka, kb).values():
                rs.add(v)
                if rs.rank == target.rank:
                    return rs.rank, partitions
    return rs.rank, partitions


def generation_by_degree_one(ring: HochsterRing) -> GenerationReport:
    """Whether each ``H̃¹(K_I)`` is spanned by products of ``H̃⁰`` classes.

    ``higher_generated`` records the same question for ``H̃²(K_I)`` against
    products of ``H̃⁰`` and ``H̃¹`` classes.
    """
    report = GenerationReport(True)
    for key in sorted(ring.components, key=lambda k: (popcount(k[0]), k[0])):
        I, d = key
        if d == 1:
            rank, parts = _products_span(ring, key, 0, 0)
            if rank < ring.components[key].rank and report.value:
                report.value = False
                report.failing = to_labels(I)
                report.witness_partitions = parts
        elif d == 2 and report.higher_generated:
            rank, _ = _products_span(ring, key, 0, 1)
            if rank < ring.components[key].rank:
                r2, _ = _products_span(ring, key, 1, 0)
                if max(rank, r2) < ring.components[key].rank:
                    report.higher_generated = False
                    report.higher_failing = to_labels(I)
    return report


def partition_sweep(K: SimplicialComplex) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Divisions ``I ⊔ J = [m]`` with both ``H̃⁰(K_I)`` and ``H̃⁰(K_J)`` nonzero."""
    full = K.vertex_mask
    zero_rank = {}
    out = []
    for I in range(1 << K.m):
        if I & ~full:
            continue
        J = full & ~I
        if I > J:
            continue
        for X in (I, J):
            if X not in zero_rank:
                zero_rank[X] = subset_betti(_faces_by_dim(K, X)).get(0, 0)
        if zero_rank[I] and zero_rank[J]:
            out.append((to_labels(I), to_labels(J)))
    return out


# ---------------------------------------------------------------------------
# hypothesis surrogates for stellar subdivisions


@dataclass
class StellarHypothesis:
    certified: bool
    surrogate: Optional[str]
    detail: str = ""


def link_join_pattern(link_complex: SimplicialComplex) -> Optional[List[int]]:
    """``[n_1, ..., n_k]`` when the link is a join of boundaries of simplices."""
    mfs = [mf.vertices for mf in missing_faces(link_complex) if len(mf) > 1]
    verts = link_complex.vertex_mask
    union = 0
    for f in mfs:
        if union & f:
            return None
        union |= f
    if union != verts or not mfs:
        return None
    # a join of boundaries has exactly these missing faces and this dimension
    dim_expected = sum(popcount(f) - 1 for f in mfs) - 1
    if link_complex.dim != dim_expected or not link_complex.is_pure():
        return None
    return sorted(popcount(f) - 1 for f in mfs)


def stellar_hypothesis(K: SimplicialComplex, simplex, coefficients="q") -> StellarHypothesis:
    """Check the pattern surrogate, then the induced-map surrogate."""
    sigma = to_mask(simplex)
    lk = K.link(sigma)
    V = lk.vertex_mask
    pattern = link_join_pattern(lk)
    if pattern is not None:
        q = 1 + sum(pattern)
        if K.full_subcomplex(V).is_q_neighborly(q):
            return StellarHypothesis(True, "pattern", f"link is a join of boundaries {pattern}; K_V is {q}-neighborly")
    # full subcomplexes of the link inside K_I
    J = V
    subsets = []
    while True:
        subsets.append(J)
        if J == 0:
            break
        J = (J - 1) & V
    for I in subsets:
        if not I:
            continue
        lkI = lk.full_subcomplex(I)
        KI = K.full_subcomplex(I)
        for d in range(-1, max(lkI.dim, 0) + 1):
            M = induced_map_homology(lkI, KI, I, d, coefficients)
            if any(any(row) for row in M):
                return StellarHypothesis(False, None, f"inclusion nonzero on H_{d} for {to_labels(I)}")
    return StellarHypothesis(True, "induced_map", "inclusions induce zero on reduced homology")


# ---------------------------------------------------------------------------
# machine-readable summary


def complex_report(K: SimplicialComplex, coefficients="z", jobs: Optional[int] = None, checks: bool = True) -> dict:
    """Betti numbers, torsion, bigraded ranks and the standard verdicts."""
    coeffs = Coefficients.parse(coefficients)
    bb = bigraded_betti(K, coeffs, jobs)
    report = {
        "m": K.m,
        "dim": K.dim,
        "betti": bb.betti(),
        "torsion": {str(d): t for d, t in bb.torsion_by_degree().items()},
        "bigraded": bb.rows(),
    }
    if checks:
        fld = _field_for(coeffs)
        try:
            pairing = poincare_pairing_check(hochster_ring(K, fld, jobs))
        except NotPoincareCandidate:
            pairing = False
        report["checks"] = {
            "gorenstein": is_gorenstein_star(K, fld).value,
            "flag": is_flag(K),
            "poincare_pairing": pairing,
            "lbc": lbc_check(K) if is_closed_pseudomanifold(K) else None,
        }
    return report
