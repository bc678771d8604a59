"""Finite graded algebras given by structure constants.

An algebra has a homogeneous basis ``0..dim-1`` with integer degrees and a
sparse multiplication table ``(i, j) -> {k: c}`` holding only nonzero
products.  The rings here are the reduced (augmentation-ideal) rings, so
there is no unit.  Coefficients live in Q or F_p.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exact_linalg import FieldMatrix, RowSpace, axpy, format_scalar
from .exceptions import (
    DimensionMismatch,
    InternalInconsistency,
    NoMatch,
    NoTopDegree,
    NotHomogeneous,
    NotPoincareCandidate,
)
from .homology import theta

Element = Dict[int, object]


def _norm(x, p):
    if p:
        return x % p
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class GradedAlgebra:
    """Graded algebra by basis degrees and a sparse product table."""

    def __init__(
        self,
        degrees: Sequence[int],
        products: Mapping[Tuple[int, int], Mapping[int, object]],
        characteristic: int = 0,
        labels: Optional[Sequence[str]] = None,
        validate: bool = False,
        keys: Optional[Sequence] = None,
    ):
        self.degrees = tuple(int(d) for d in degrees)
        # optional multigrading: every product of two basis elements lands
        # in the span of basis elements sharing one key
        self.keys = tuple(keys) if keys is not None else None
        self.characteristic = characteristic
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(len(self.degrees)))
        p = characteristic
        table = {}
        for (i, j), val in products.items():
            clean = {k: _norm(c, p) for k, c in val.items() if _norm(c, p)}
            if clean:
                target = self.degrees[i] + self.degrees[j]
                if any(self.degrees[k] != target for k in clean):
                    raise NotHomogeneous(f"product e{i}*e{j} leaves degree {target}")
                table[(i, j)] = clean
        self.table: Dict[Tuple[int, int], Element] = table
        if validate:
            self.validate()

    # -- shape ---------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def __len__(self) -> int:
        return self.dim

    def by_degree(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return dict(sorted(out.items()))

    def hilbert(self) -> Dict[int, int]:
        return {d: len(v) for d, v in self.by_degree().items()}

    @property
    def top_degree(self) -> int:
        if not self.degrees:
            raise NoTopDegree("zero algebra has no top degree")
        return max(self.degrees)

    def top_basis(self) -> List[int]:
        d = self.top_degree
        return [i for i, x in enumerate(self.degrees) if x == d]

    # -- arithmetic ----------------------------------------------------------------

    def mul(self, i: int, j: int) -> Element:
        return self.table.get((i, j), {})

    def multiply(self, x: Element, y: Element) -> Element:
        p = self.characteristic
        out: Element = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.table.get((i, j))
                if prod:
                    axpy(out, a * b, prod, p)
        return out

    def is_homogeneous(self, x: Element) -> bool:
        return len({self.degrees[i] for i in x}) <= 1

    def commutativity_violations(self) -> List[Tuple[int, int]]:
        bad = []
        p = self.characteristic
        for i in range(self.dim):
            for j in range(i, self.dim):
                ij = self.mul(i, j)
                ji = self.mul(j, i)
                sign = -1 if (self.degrees[i] * self.degrees[j]) % 2 else 1
                diff = dict(ij)
                axpy(diff, -sign, ji, p)
                if diff:
                    bad.append((i, j))
        return bad

    def associativity_violations(self, triples: Optional[Iterable[Tuple[int, int, int]]] = None) -> List[Tuple[int, int, int]]:
        p = self.characteristic
        if triples is None:
            triples = iproduct(range(self.dim), repeat=3)
        bad = []
        for i, j, k in triples:
            left = self.multiply(self.mul(i, j), {k: 1})
            right = self.multiply({i: 1}, self.mul(j, k))
            diff = dict(left)
            axpy(diff, -1, right, p)
            if diff:
                bad.append((i, j, k))
        return bad

    def random_triples(self, count: int, seed: int = 0) -> List[Tuple[int, int, int]]:
        rng = random.Random(seed)
        n = self.dim
        if n == 0:
            return []
        return [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(count)]

    def validate(self) -> None:
        if self.commutativity_violations():
            raise InternalInconsistency("algebra is not graded-commutative")
        if self.dim <= 200 and self.associativity_violations(self._nonzero_triples()):
            raise InternalInconsistency("algebra is not associative")

    def _nonzero_triples(self):
        # triples where at least one side can be nonzero
        for (i, j) in self.table:
            for k in range(self.dim):
                yield (i, j, k)
        for (j, k) in self.table:
            for i in range(self.dim):
                if (i, j) not in self.table:
                    yield (i, j, k)

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict:
        """``{"basis": [...], "products": [[i, j, [[k, c], ...]], ...]}``."""
        return {
            "characteristic": self.characteristic,
            "basis": [{"deg": d, "label": l} for d, l in zip(self.degrees, self.labels)],
            "products": [
                [i, j, [[k, format_scalar(c)] for k, c in sorted(v.items())]] for (i, j), v in sorted(self.table.items())
            ],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "GradedAlgebra":
        degrees = [b["deg"] for b in data["basis"]]
        labels = [b.get("label", f"e{i}") for i, b in enumerate(data["basis"])]
        products = {}
        for i, j, coeffs in data["products"]:
            products[(i, j)] = {k: Fraction(c) if isinstance(c, str) else c for k, c in coeffs}
        return cls(degrees, products, data.get("characteristic", 0), labels)

    @classmethod
    def from_json(cls, text: str) -> "GradedAlgebra":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        return f"GradedAlgebra(hilbert={self.hilbert()}, products={len(self.table)})"


# ---------------------------------------------------------------------------
# constructions


def zero_ring(characteristic: int = 0) -> GradedAlgebra:
    return GradedAlgebra([], {}, characteristic)


def sphere_ring(n: int, characteristic: int = 0) -> GradedAlgebra:
    """Reduced cohomology of ``S^n``."""
    return GradedAlgebra([n], {}, characteristic, [f"s{n}"])


def sphere_product_ring(a: int, b: int, characteristic: int = 0) -> GradedAlgebra:
    """Reduced cohomology of ``S^a × S^b`` with ``x·y = t``."""
    return connected_sum_of_sphere_products([(a, b, 1)], characteristic)


def connected_sum_of_sphere_products(terms: Sequence[Tuple[int, int, int]], characteristic: int = 0) -> GradedAlgebra:
    """Connected sum of ``count`` copies of ``S^a × S^b`` for each ``(a, b, count)``."""
    terms = [(a, b, c) for a, b, c in terms if c]
    if not terms:
        return zero_ring(characteristic)
    totals = {a + b for a, b, _ in terms}
    if len(totals) != 1:
        raise DimensionMismatch(f"sphere products of different dimensions {sorted(totals)}")
    if any(a < 1 or b < 1 for a, b, _ in terms):
        raise ValueError("sphere dimensions must be positive")
    top = totals.pop()
    degrees, labels, products = [], [], {}
    for a, b, count in terms:
        for c in range(count):
            x, y = len(degrees), len(degrees) + 1
            degrees += [a, b]
            labels += [f"x{a}_{b}_{c}", f"y{a}_{b}_{c}"]
            products[(x, y)] = ("top", 1)
            products[(y, x)] = ("top", -1 if (a * b) % 2 else 1)
    t = len(degrees)
    degrees.append(top)
    labels.append(f"t{top}")
    table = {k: {t: s} for k, (_, s) in products.items()}
    return GradedAlgebra(degrees, table, characteristic, labels)


def direct_product(A: GradedAlgebra, B: GradedAlgebra) -> GradedAlgebra:
    if A.characteristic != B.characteristic:
        raise DimensionMismatch("algebras over different coefficients")
    off = A.dim
    table = dict(A.table)
    for (i, j), v in B.table.items():
        table[(i + off, j + off)] = {k + off: c for k, c in v.items()}
    keys = [(0, k) for k in _keys(A)] + [(1, k) for k in _keys(B)]
    return GradedAlgebra(A.degrees + B.degrees, table, A.characteristic, A.labels + B.labels, keys=keys)


def _keys(A: GradedAlgebra) -> tuple:
    return A.keys if A.keys is not None else A.degrees


def product_of(*algebras: GradedAlgebra) -> GradedAlgebra:
    out = algebras[0]
    for B in algebras[1:]:
        out = direct_product(out, B)
    return out


def ideal_span(A: GradedAlgebra, generators: Sequence[Element]) -> RowSpace:
    """Echelon basis of the two-sided ideal generated by ``generators``."""
    p = A.characteristic
    space = RowSpace(p)
    queue = []
    for g in generators:
        g = {k: c for k, c in g.items() if c}
        if not g:
            continue
        if not A.is_homogeneous(g):
            raise NotHomogeneous("ideal generators must be homogeneous")
        r = space.add(g)
        if r is not None:
            queue.append(r)
    while queue:
        v = queue.pop()
        for i in range(A.dim):
            for prod in (A.multiply({i: 1}, v), A.multiply(v, {i: 1})):
                if prod:
                    r = space.add(prod)
                    if r is not None:
                        queue.append(r)
    return space


def quotient_by_ideal(A: GradedAlgebra, generators: Sequence[Element]) -> GradedAlgebra:
    """``A / (generators)`` on the basis elements that are not ideal pivots."""
    space = ideal_span(A, generators)
    p = A.characteristic
    keep = [i for i in range(A.dim) if i not in space.rows]
    pos = {i: n for n, i in enumerate(keep)}
    touched = set()
    for row in space.rows.values():
        touched.update(row)
    table = {}
    for (i, j), v in A.table.items():
        if i in pos and j in pos:
            red = space.full_reduce(v) if touched.intersection(v) else v
            proj = {pos[k]: c for k, c in red.items() if k in pos}
            if proj:
                table[(pos[i], pos[j])] = proj
    # keys joined by an ideal element become one key of the quotient
    old = _keys(A)
    parent = {}

    def find(k):
        while parent.get(k, k) != k:
            k = parent[k]
        return k

    for row in space.rows.values():
        first = find(old[next(iter(row))])
        for i in row:
            r = find(old[i])
            if r != first:
                parent[r] = first
    keys = [find(old[i]) for i in keep]
    return GradedAlgebra([A.degrees[i] for i in keep], table, p, [A.labels[i] for i in keep], keys=keys)


def _single_top(A: GradedAlgebra) -> int:
    if not A.dim:
        raise NotPoincareCandidate("zero algebra has no top class")
    tops = A.top_basis()
    if len(tops) != 1:
        raise NotPoincareCandidate(f"top degree has dimension {len(tops)}")
    return tops[0]


def quotient_by_top(A: GradedAlgebra) -> GradedAlgebra:
    t = _single_top(A)
    return quotient_by_ideal(A, [{t: 1}])


def connected_sum_ring(A: GradedAlgebra, B: GradedAlgebra) -> GradedAlgebra:
    """``(A × B) / (t_A − t_B)`` identifying the stored top generators."""
    if not B.dim:
        return A
    if not A.dim:
        return B
    ta, tb = _single_top(A), _single_top(B)
    if A.degrees[ta] != B.degrees[tb]:
        raise DimensionMismatch(f"top degrees {A.degrees[ta]} and {B.degrees[tb]} differ")
    P = direct_product(A, B)
    return quotient_by_ideal(P, [{ta: 1, A.dim + tb: -1}])


def gyration(A: GradedAlgebra) -> GradedAlgebra:
    return gyration_iter(A, 1)


def gyration_iter(A: GradedAlgebra, r: int) -> GradedAlgebra:
    """``(A ⊗ Λ[v_1..v_r]) / (⊕_{S≠[r]} A^d ⊗ v_S)`` with ``deg v_i = 1``.

    Products follow ``(a⊗u)(b⊗w) = (−1)^{deg u · deg b} (ab)⊗(uw)``.
    """
    if r < 0:
        raise ValueError("number of gyrations must be non-negative")
    if r == 0:
        return A
    if not A.dim:
        raise NoTopDegree("zero algebra has no top degree")
    d = A.top_degree
    full = (1 << r) - 1
    index: Dict[Tuple[int, int], int] = {}
    degrees, labels, keys = [], [], []
    base_keys = _keys(A)
    for S in range(1 << r):
        for a in range(A.dim):
            if A.degrees[a] == d and S != full:
                continue
            index[(a, S)] = len(degrees)
            degrees.append(A.degrees[a] + bin(S).count("1"))
            keys.append((base_keys[a], S))
            vs = "".join(f"v{i + 1}" for i in range(r) if S >> i & 1)
            labels.append(A.labels[a] + ("⊗" + vs if vs else ""))
    # pairs of disjoint exterior monomials with their sign
    pairs = []
    for S in range(1 << r):
        comp = full & ~S
        T = comp
        while True:
            pairs.append((S, T, theta(S, T) & 1))
            if T == 0:
                break
            T = (T - 1) & comp
    by_left: Dict[int, List[Tuple[int, Element]]] = {}
    for (a, b), v in A.table.items():
        by_left.setdefault(a, []).append((b, v))
    table = {}
    for S, T, par in pairs:
        U = S | T
        ns = bin(S).count("1")
        for a, rights in by_left.items():
            i = index.get((a, S))
            if i is None:
                continue
            for b, v in rights:
                j = index.get((b, T))
                if j is None:
                    continue
                neg = par ^ ((ns * A.degrees[b]) & 1)
                out = {}
                for k, c in v.items():
                    idx = index.get((k, U))
                    if idx is not None:
                        out[idx] = -c if neg else c
                if out:
                    table[(i, j)] = out
    return GradedAlgebra(degrees, table, A.characteristic, labels, keys=keys)


def gyration_dimension(A: GradedAlgebra, r: int) -> int:
    """Closed form ``dim A · 2^r − (2^r − 1) · dim A^d``."""
    return A.dim * 2 ** r - (2 ** r - 1) * len(A.top_basis())


def thm4_lambda(m1: int, m2: int, n: int) -> Dict[int, int]:
    """Multiplicities of ``S^{i+1} × S^{m1+m2−i−1}`` in the connected-sum ring."""
    N = m1 + m2 - 2 * n
    lam = {}
    for i in range(2, N + 1):
        val = comb(N, i) - comb(m1 - n, i) - comb(m2 - n, i)
        if val < 0:
            raise InternalInconsistency(f"negative multiplicity {val} at i={i}")
        if val:
            lam[i] = val
    return lam


def thm4_ring(H1: GradedAlgebra, H2: GradedAlgebra, m1: int, m2: int, n: int) -> GradedAlgebra:
    """Predicted reduced cohomology of the moment-angle manifold of ``K1 # K2``.

    ``H1``/``H2`` are the reduced rings for ``K1``/``K2`` with ``m1``/``m2``
    vertices and ``dim K_i = n − 1``.
    """
    lam = thm4_lambda(m1, m2, n)
    top = m1 + m2
    M = connected_sum_of_sphere_products([(i + 1, top - i - 1, c) for i, c in sorted(lam.items())], H1.characteristic)
    G1 = gyration_iter(H1, m2 - n)
    G2 = gyration_iter(H2, m1 - n)
    for G in (G1, G2):
        if G.top_degree != top:
            raise DimensionMismatch(f"gyrated top degree {G.top_degree} differs from {top}")
    R = product_of(G1, G2, M) if M.dim else product_of(G1, G2)
    t1 = _single_top(G1)
    t2 = G1.dim + _single_top(G2)
    if M.dim:
        tm = G1.dim + G2.dim + _single_top(M)
        gens = [{t1: 1, tm: -1}, {t2: 1, tm: -1}]
    else:
        gens = [{t1: 1, t2: -1}]
    return quotient_by_ideal(R, gens)


def thm5_terms(f: Sequence[int], m: int, n: int, s: int) -> List[Tuple[int, int, int]]:
    """Sphere products ``(a, b, count)`` forming ``Y`` for a stellar subdivision."""
    terms: Dict[Tuple[int, int], int] = {}
    for i, fi in enumerate(f):
        if not fi:
            continue
        for j in range(0, m - s + 1):
            if i + j < 1:
                continue
            count = fi * comb(m - s, j)
            a, b = i + j + 2, m + n - i - j - 1
            if count and b >= 1:
                terms[(a, b)] = terms.get((a, b), 0) + count
    return [(a, b, c) for (a, b), c in sorted(terms.items())]


def thm5_ring(HK: GradedAlgebra, f: Sequence[int], m: int, n: int, s: int) -> GradedAlgebra:
    """``G(HK) # Y`` for the stellar subdivision formula."""
    G = gyration(HK)
    Y = connected_sum_of_sphere_products(thm5_terms(f, m, n, s), HK.characteristic)
    if not Y.dim:
        return G
    return connected_sum_ring(G, Y)


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class RingFingerprint:
    """Isomorphism invariants: Hilbert function, multiplication ranks and
    decomposable dimensions.  Equal fingerprints are necessary, not
    sufficient, for isomorphism."""

    hilbert: Tuple[Tuple[int, int], ...]
    mult_ranks: Tuple[Tuple[int, int, int], ...]
    decomposable: Tuple[Tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "hilbert": {str(d): c for d, c in self.hilbert},
            "mult_ranks": [[i, j, r] for i, j, r in self.mult_ranks],
            "decomposable": {str(d): c for d, c in self.decomposable},
        }

    def feature_vector(self, max_degree: int) -> List[int]:
        """Flattened numeric view used by the estimator layer."""
        h = dict(self.hilbert)
        dec = dict(self.decomposable)
        mr = {(i, j): r for i, j, r in self.mult_ranks}
        out = [h.get(d, 0) for d in range(max_degree + 1)]
        out += [dec.get(d, 0) for d in range(max_degree + 1)]
        out += [mr.get((i, j), 0) for i in range(max_degree + 1) for j in range(i, max_degree + 1 - i)]
        return out


def assemble_fingerprint(hilbert: Mapping[int, int], components: Iterable, p: int = 0) -> RingFingerprint:
    """Build a fingerprint from products grouped by target component.

    ``components`` yields ``(degree, size, groups)`` where ``groups`` yields
    ``(i, j, products)`` and ``products`` is a callable returning product
    vectors of basis elements of degrees ``i`` and ``j``.  The image of
    ``A^i ⊗ A^j`` is the direct sum of its parts in the components, so
    ranks add up and each part can stop once it fills its component.
    """
    ranks: Dict[Tuple[int, int], int] = {}
    dec: Dict[int, int] = {}
    for degree, size, groups in components:
        spans: Dict[Tuple[int, int], RowSpace] = {}
        total = RowSpace(p)
        for i, j, products in groups:
            key = (min(i, j), max(i, j))
            rs = spans.setdefault(key, RowSpace(p))
            if rs.rank == size:
                continue
            for v in products():
                if rs.add(v) is not None and total.rank < size:
                    total.add(v)
                if rs.rank == size:
                    break
        for key, rs in spans.items():
            if rs.rank:
                ranks[key] = ranks.get(key, 0) + rs.rank
        if total.rank:
            dec[degree] = dec.get(degree, 0) + total.rank
    return RingFingerprint(
        tuple(sorted((d, c) for d, c in hilbert.items() if c)),
        tuple((i, j, r) for (i, j), r in sorted(ranks.items())),
        tuple(sorted(dec.items())),
    )


def fingerprint(A: GradedAlgebra) -> RingFingerprint:
    keys = _keys(A)
    size: Dict[object, int] = {}
    degree_of: Dict[object, int] = {}
    for k, d in zip(keys, A.degrees):
        size[k] = size.get(k, 0) + 1
        degree_of[k] = d
    grouped: Dict[object, Dict[Tuple[int, int], List[Element]]] = {}
    for (i, j), v in A.table.items():
        target = keys[next(iter(v))]
        grouped.setdefault(target, {}).setdefault((A.degrees[i], A.degrees[j]), []).append(v)
    components = (
        (degree_of[t], size[t], [(i, j, (lambda vs=vs: vs)) for (i, j), vs in groups.items()])
        for t, groups in grouped.items()
    )
    return assemble_fingerprint(A.hilbert(), components, A.characteristic)


def fingerprints_equal(F1: RingFingerprint, F2: RingFingerprint) -> bool:
    return F1 == F2


def match_factors(F1: Sequence[RingFingerprint], F2: Sequence[RingFingerprint]) -> List[int]:
    """Permutation ``perm`` with ``F1[i] == F2[perm[i]]``; raises :class:`NoMatch`."""
    if len(F1) != len(F2):
        raise NoMatch(f"factor counts differ: {len(F1)} vs {len(F2)}")
    free = list(range(len(F2)))
    perm = []
    for f in F1:
        for pos, j in enumerate(free):
            if F2[j] == f:
                perm.append(j)
                free.pop(pos)
                break
        else:
            raise NoMatch("no fingerprint-preserving bijection")
    return perm


# ---------------------------------------------------------------------------
# Poincaré duality and decompositions


def pairing_matrix(A: GradedAlgebra, i: int, top: Optional[int] = None) -> List[list]:
    t = _single_top(A) if top is None else top
    d = A.degrees[t]
    rows = [a for a in range(A.dim) if A.degrees[a] == i]
    cols = [b for b in range(A.dim) if A.degrees[b] == d - i]
    return [[A.mul(a, b).get(t, 0) for b in cols] for a in rows]


def is_poincare_algebra(A: GradedAlgebra) -> bool:
    """Whether every pairing ``A^i × A^{d−i} → A^d`` (``0 < i < d``) is perfect."""
    t = _single_top(A)
    d = A.degrees[t]
    hil = A.hilbert()
    for i in sorted(hil):
        if i == d:
            continue
        if i <= 0 or i >= d:
            return False
        if hil.get(i, 0) != hil.get(d - i, 0):
            return False
        M = pairing_matrix(A, i, t)
        if FieldMatrix.from_rows(M, A.characteristic).rank() != len(M):
            return False
    return True


def verify_product_decomposition(A: GradedAlgebra, parts: Sequence[Sequence[Element]]) -> bool:
    """Whether the spans of ``parts`` split ``A`` as a product of subalgebras."""
    p = A.characteristic
    part_spaces = []
    total = RowSpace(p)
    count = 0
    for part in parts:
        rs = RowSpace(p)
        vecs = []
        for v in part:
            v = {k: c for k, c in (v.items() if isinstance(v, dict) else enumerate(v)) if c}
            if not A.is_homogeneous(v):
                raise NotHomogeneous("spanning vectors must be homogeneous")
            if rs.add(v) is not None:
                vecs.append(v)
                total.add(v)
        count += rs.rank
        part_spaces.append((rs, vecs))
    if total.rank != A.dim or count != A.dim:
        return False
    for a, (rs, vecs) in enumerate(part_spaces):
        for x in vecs:
            for y in vecs:
                if not rs.contains(A.multiply(x, y)):
                    return False
            for b, (_, other) in enumerate(part_spaces):
                if a == b:
                    continue
                for y in other:
                    if A.multiply(x, y):
                        return False
    return True
