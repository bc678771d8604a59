"""Finite abstract simplicial complexes on a labelled ground set.

Vertices are labelled ``1..m``.  A set of vertices is stored as an ``int``
bitmask where label ``L`` occupies bit ``L - 1``; helpers :func:`to_mask` and
:func:`to_labels` convert between the two views.  Elements of the ground set
that lie in no simplex are ghost vertices.  The empty complex ``{∅}`` is the
complex whose only facet is the empty set (mask ``0``).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from .exceptions import InvalidConnectedSum, InvalidVertex, NotASimplex, NotASphere, NotFound

VertexSet = int


def to_mask(labels: Iterable[int]) -> VertexSet:
    if isinstance(labels, int):
        return labels
    if isinstance(labels, MissingFace):
        return labels.vertices
    mask = 0
    for v in labels:
        v = int(v)
        if v < 1:
            raise InvalidVertex(f"vertex labels start at 1, got {v}")
        mask |= 1 << (v - 1)
    return mask


def to_labels(mask: VertexSet) -> Tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def full_mask(m: int) -> VertexSet:
    return (1 << m) - 1


def _lex_key(mask: VertexSet):
    return to_labels(mask)


def _maximal(masks: Iterable[VertexSet]) -> Tuple[VertexSet, ...]:
    uniq = sorted(set(masks), key=lambda f: (-popcount(f), _lex_key(f)))
    kept: List[VertexSet] = []
    for f in uniq:
        if not any(f & g == f for g in kept):
            kept.append(f)
    if not kept:
        kept = [0]
    return tuple(sorted(kept, key=_lex_key))


@dataclass(frozen=True)
class MissingFace:
    vertices: VertexSet

    @property
    def labels(self) -> Tuple[int, ...]:
        return to_labels(self.vertices)

    def __len__(self) -> int:
        return popcount(self.vertices)


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on the ground set ``[m]`` given by its facets (bitmasks)."""

    m: int
    facets: Tuple[VertexSet, ...]

    def __post_init__(self):
        if self.m < 0:
            raise InvalidVertex("ground size must be non-negative")
        top = full_mask(self.m)
        for f in self.facets:
            if f & ~top:
                raise InvalidVertex(f"facet {to_labels(f)} exceeds ground set [{self.m}]")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_facets(cls, m: int, facets: Iterable) -> "SimplicialComplex":
        """Normalize ``facets`` (label iterables or bitmasks) to maximal ones."""
        masks = []
        for f in facets:
            mask = to_mask(f)
            if mask >> m:
                raise InvalidVertex(f"facet {to_labels(mask)} exceeds ground set [{m}]")
            masks.append(mask)
        return cls(m, _maximal(masks))

    @classmethod
    def empty(cls, m: int = 0) -> "SimplicialComplex":
        return cls(m, (0,))

    # -- basic data --------------------------------------------------------

    @cached_property
    def vertex_mask(self) -> VertexSet:
        v = 0
        for f in self.facets:
            v |= f
        return v

    @property
    def vertices(self) -> Tuple[int, ...]:
        return to_labels(self.vertex_mask)

    @property
    def vertex_count(self) -> int:
        return popcount(self.vertex_mask)

    @property
    def ghost_vertices(self) -> Tuple[int, ...]:
        return to_labels(full_mask(self.m) & ~self.vertex_mask)

    @cached_property
    def dim(self) -> int:
        return max(popcount(f) for f in self.facets) - 1

    @property
    def is_empty(self) -> bool:
        return self.facets == (0,)

    @cached_property
    def faces(self) -> frozenset:
        """All simplices including the empty one."""
        seen = set()
        stack = list(self.facets)
        while stack:
            f = stack.pop()
            if f in seen:
                continue
            seen.add(f)
            g = f
            while g:
                low = g & -g
                sub = f & ~low
                if sub not in seen:
                    stack.append(sub)
                g &= g - 1
        return frozenset(seen)

    @cached_property
    def faces_by_dim(self) -> Dict[int, Tuple[VertexSet, ...]]:
        """Simplices grouped by dimension, each group in lexicographic order."""
        groups: Dict[int, list] = {}
        for f in self.faces:
            groups.setdefault(popcount(f) - 1, []).append(f)
        return {d: tuple(sorted(g, key=_lex_key)) for d, g in sorted(groups.items())}

    def __contains__(self, simplex) -> bool:
        return to_mask(simplex) in self.faces

    def facet_labels(self) -> List[Tuple[int, ...]]:
        return [to_labels(f) for f in self.facets]

    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, facets={self.facet_labels()})"

    # -- statistics ----------------------------------------------------------

    def f_vector(self) -> List[int]:
        """Face counts ``[f_0, f_1, ..., f_dim]`` (the empty face excluded)."""
        return [len(self.faces_by_dim.get(d, ())) for d in range(self.dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.f_vector()))

    def edge_count(self) -> int:
        return len(self.faces_by_dim.get(1, ()))

    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) == 1

    def is_q_neighborly(self, q: int) -> bool:
        """Whether every ``q`` vertices span a simplex."""
        if q <= 0:
            return True
        faces = self.faces
        return all(to_mask(c) in faces for c in combinations(self.vertices, q))

    def edges(self) -> List[Tuple[int, int]]:
        return [to_labels(e) for e in self.faces_by_dim.get(1, ())]

    def graph(self) -> nx.Graph:
        """The 1-skeleton as a networkx graph on vertex labels."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g

    @cached_property
    def _adjacency(self) -> Dict[int, VertexSet]:
        adj = {v: 0 for v in self.vertices}
        for e in self.faces_by_dim.get(1, ()):
            a, b = to_labels(e)
            adj[a] |= 1 << (b - 1)
            adj[b] |= 1 << (a - 1)
        return adj

    # -- subcomplexes -----------------------------------------------------------

    def full_subcomplex(self, subset) -> "SimplicialComplex":
        """``K_I`` with original labels kept."""
        I = to_mask(subset) & full_mask(self.m)
        return SimplicialComplex(self.m, _maximal(f & I for f in self.facets))

    def faces_within(self, subset: VertexSet) -> List[VertexSet]:
        return [f for f in self.faces if f & subset == f]

    def _require_face(self, sigma: VertexSet) -> None:
        if sigma not in self.faces:
            raise NotASimplex(f"{to_labels(sigma)} is not a simplex of the complex")

    def link(self, simplex) -> "SimplicialComplex":
        sigma = to_mask(simplex)
        self._require_face(sigma)
        return SimplicialComplex(self.m, _maximal(f & ~sigma for f in self.facets if f & sigma == sigma))

    def star(self, simplex) -> "SimplicialComplex":
        sigma = to_mask(simplex)
        self._require_face(sigma)
        return SimplicialComplex(self.m, _maximal(f for f in self.facets if f & sigma == sigma))

    def is_cone(self) -> bool:
        """True when some vertex lies in every facet."""
        common = full_mask(self.m)
        for f in self.facets:
            common &= f
        return bool(common)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.m == other.m and all(f in other.faces for f in self.facets)

    # -- relabelling -----------------------------------------------------------------

    def relabel(self, mapping: Mapping[int, int], m: Optional[int] = None) -> "SimplicialComplex":
        """Apply a label map to every facet; unmapped labels must be ghosts."""
        if m is None:
            m = max(mapping.values(), default=0)

        def move(f):
            return to_mask(mapping[v] for v in to_labels(f))

        try:
            return SimplicialComplex.from_facets(m, [move(f) for f in self.facets])
        except KeyError as exc:
            raise InvalidVertex(f"vertex {exc.args[0]} has no image under relabelling") from None

    def support_complex(self) -> "SimplicialComplex":
        """Drop ghost vertices and relabel the remaining vertices 1..n."""
        verts = self.vertices
        return self.relabel({v: i + 1 for i, v in enumerate(verts)}, len(verts))

    def is_isomorphic(self, other: "SimplicialComplex") -> bool:
        """Combinatorial isomorphism of the vertex supports (ghosts ignored)."""
        if self.f_vector() != other.f_vector():
            return False
        return nx.is_isomorphic(
            _incidence_graph(self), _incidence_graph(other), node_match=lambda a, b: a["kind"] == b["kind"]
        )


def _incidence_graph(K: SimplicialComplex) -> nx.Graph:
    g = nx.Graph()
    for v in K.vertices:
        g.add_node(("v", v), kind="v")
    for i, f in enumerate(K.facets):
        g.add_node(("f", i), kind="f")
        for v in to_labels(f):
            g.add_edge(("f", i), ("v", v))
    return g


# ---------------------------------------------------------------------------
# constructions


def from_facets(m: int, facets: Iterable) -> SimplicialComplex:
    return SimplicialComplex.from_facets(m, facets)


def full_subcomplex(K: SimplicialComplex, subset) -> SimplicialComplex:
    return K.full_subcomplex(subset)


def link(K: SimplicialComplex, simplex) -> SimplicialComplex:
    return K.link(simplex)


def star(K: SimplicialComplex, simplex) -> SimplicialComplex:
    return K.star(simplex)


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Join with the vertices of ``K2`` shifted past those of ``K1``."""
    shift = K1.m
    facets = [f1 | (f2 << shift) for f1 in K1.facets for f2 in K2.facets]
    return SimplicialComplex(K1.m + K2.m, _maximal(facets))


def cone(K: SimplicialComplex) -> SimplicialComplex:
    """Cone with apex ``m + 1``."""
    return join(K, SimplicialComplex(1, (1,)))


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    """Suspension with the two new vertices labelled ``m + 1`` and ``m + 2``."""
    return join(K, SimplicialComplex(2, (1, 2)))


def default_matching(f1: VertexSet, f2: VertexSet) -> Dict[int, int]:
    """Order-preserving bijection from the labels of ``f2`` to those of ``f1``."""
    return dict(zip(to_labels(f2), to_labels(f1)))


def connected_sum(
    K1: SimplicialComplex,
    f1=None,
    K2: Optional[SimplicialComplex] = None,
    f2=None,
    matching: Optional[Mapping[int, int]] = None,
) -> SimplicialComplex:
    """Glue ``K1`` and ``K2`` along facets ``f1 ~ f2`` and delete the shared facet.

    Labels of ``K1`` are kept; the labels of ``K2`` outside ``f2`` become
    ``m1 + 1, m1 + 2, ...`` in ascending order.  ``matching`` maps each label
    of ``f2`` to a label of ``f1`` (order-preserving by default); facets
    default to the lexicographically smallest ones.
    """
    if K2 is None:
        raise InvalidConnectedSum("second complex missing")
    if not (K1.is_pure() and K2.is_pure()) or K1.dim != K2.dim or K1.dim < 0:
        raise InvalidConnectedSum("connected sum needs pure complexes of equal dimension")
    f1 = K1.facets[0] if f1 is None else to_mask(f1)
    f2 = K2.facets[0] if f2 is None else to_mask(f2)
    if f1 not in K1.facets or f2 not in K2.facets:
        raise InvalidConnectedSum("gluing sets must be facets")
    if matching is None:
        matching = default_matching(f1, f2)
    matching = {int(k): int(v) for k, v in matching.items()}
    if sorted(matching) != list(to_labels(f2)) or sorted(matching.values()) != list(to_labels(f1)):
        raise InvalidConnectedSum("matching must be a bijection from the second facet onto the first")
    rest = [v for v in range(1, K2.m + 1) if not (f2 >> (v - 1)) & 1]
    relabel = dict(matching)
    for i, v in enumerate(rest):
        relabel[v] = K1.m + 1 + i
    m = K1.m + len(rest)
    facets = [f for f in K1.facets if f != f1]
    facets += [to_mask(relabel[v] for v in to_labels(f)) for f in K2.facets if f != f2]
    return SimplicialComplex.from_facets(m, facets)


def stellar_subdivision(K: SimplicialComplex, simplex) -> SimplicialComplex:
    """Replace the star of ``simplex`` by a cone with apex ``m + 1``."""
    sigma = to_mask(simplex)
    K._require_face(sigma)
    if popcount(sigma) == 0:
        raise NotASimplex("cannot subdivide the empty simplex")
    if popcount(sigma) == 1:
        return K
    apex = 1 << K.m
    facets = [f for f in K.facets if f & sigma != sigma]
    for f in K.facets:
        if f & sigma == sigma:
            g = sigma
            while g:
                low = g & -g
                facets.append((f & ~low) | apex)
                g &= g - 1
    return SimplicialComplex.from_facets(K.m + 1, facets)


# ---------------------------------------------------------------------------
# missing faces, flagness, belts


def missing_faces(K: SimplicialComplex) -> List[MissingFace]:
    """All minimal non-faces (ghost vertices appear as singletons)."""
    faces = K.faces
    found = set()
    for sigma in faces:
        top = sigma.bit_length()
        for v in range(top, K.m):
            cand = sigma | (1 << v)
            if cand in faces:
                continue
            g = sigma
            ok = True
            while g:
                low = g & -g
                if cand & ~low not in faces:
                    ok = False
                    break
                g &= g - 1
            if ok:
                found.add(cand)
    return [MissingFace(f) for f in sorted(found, key=lambda f: (popcount(f), _lex_key(f)))]


def is_flag(K: SimplicialComplex) -> bool:
    return all(len(mf) <= 2 for mf in missing_faces(K))


def is_clique_complex(K: SimplicialComplex) -> bool:
    """Whether K equals the clique complex of its 1-skeleton."""
    cliques = {to_mask(c) for c in nx.find_cliques(K.graph())}
    if not K.vertices:
        return True
    return set(K.facets) == cliques


def _is_cycle(K: SimplicialComplex, subset: VertexSet) -> bool:
    adj = K._adjacency
    verts = to_labels(subset)
    if len(verts) < 3:
        return False
    for v in verts:
        if v not in adj or popcount(adj[v] & subset) != 2:
            return False
    # connectedness
    start = verts[0]
    seen = 1 << (start - 1)
    stack = [start]
    while stack:
        v = stack.pop()
        nb = adj[v] & subset & ~seen
        seen |= nb
        stack.extend(to_labels(nb))
    return seen == subset


def is_polygon_subset(K: SimplicialComplex, subset: VertexSet) -> bool:
    """Whether ``K_I`` is the boundary of a polygon with at least 4 sides."""
    if popcount(subset) < 4 or not _is_cycle(K, subset):
        return False
    return all(popcount(f) <= 2 for f in K.full_subcomplex(subset).facets)


def _induced_paths(adj: Dict[int, VertexSet], a: int, b: int) -> List[Tuple[int, ...]]:
    """All chordless paths from ``a`` to ``b`` of length at least 2."""
    out = []
    abit = 1 << (a - 1)
    bbit = 1 << (b - 1)

    def extend(path, used):
        v = path[-1]
        if len(path) >= 2 and adj[v] & bbit:
            out.append(tuple(path) + (b,))
            return
        for w in to_labels(adj[v] & ~used & ~bbit):
            # w must not be adjacent to earlier path vertices except v
            if adj[w] & (used & ~(1 << (v - 1))):
                continue
            extend(path + [w], used | (1 << (w - 1)))

    extend([a], abit)
    out.sort(key=lambda p: (len(p), p))
    return out


def belt_through_missing_edge(K: SimplicialComplex, edge) -> VertexSet:
    """A vertex set ``I`` containing ``edge`` with ``K_I`` a polygon boundary."""
    e = edge.vertices if isinstance(edge, MissingFace) else to_mask(edge)
    if popcount(e) != 2 or e in K.faces:
        raise NotFound(f"{to_labels(e)} is not a missing edge")
    a, b = to_labels(e)
    adj = K._adjacency
    if a not in adj or b not in adj:
        raise NotFound("endpoint is a ghost vertex")
    best = None
    for p1 in _induced_paths(adj, a, b):
        inner = to_mask(p1[1:-1])
        blocked = inner
        for v in p1[1:-1]:
            blocked |= adj[v]
        blocked &= ~((1 << (a - 1)) | (1 << (b - 1)))
        p2 = _shortest_path(adj, a, b, blocked | inner)
        if p2 is None or len(p2) < 3:
            continue
        subset = to_mask(p1) | to_mask(p2)
        if is_polygon_subset(K, subset):
            if best is None or popcount(subset) < popcount(best[0]) or (
                popcount(subset) == popcount(best[0]) and _lex_key(subset) < _lex_key(best[0])
            ):
                best = (subset,)
    if best is None and K.m <= 20:
        best = _exhaustive_belt(K, e)
    if best is None:
        raise NotFound(f"no belt through {to_labels(e)}")
    return best[0]


def _exhaustive_belt(K: SimplicialComplex, e: VertexSet):
    rest = [v for v in K.vertices if not e >> (v - 1) & 1]
    for k in range(2, len(rest) + 1):
        for c in combinations(rest, k):
            subset = e | to_mask(c)
            if is_polygon_subset(K, subset):
                return (subset,)
    return None


def _shortest_path(adj, a, b, blocked):
    prev = {a: None}
    q = deque([a])
    while q:
        v = q.popleft()
        if v == b:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path[::-1]
        for w in to_labels(adj[v] & ~blocked):
            if w not in prev:
                if v == a and w == b:
                    continue
                prev[w] = v
                q.append(w)
    return None


def find_belts(K: SimplicialComplex, n: int) -> List[VertexSet]:
    """Every ``I`` with ``K_I`` the boundary of an ``n``-gon (exhaustive)."""
    if n < 4:
        raise ValueError("belts have at least 4 vertices")
    out = []
    for c in combinations(K.vertices, n):
        mask = to_mask(c)
        if is_polygon_subset(K, mask):
            out.append(mask)
    return out


# ---------------------------------------------------------------------------
# 2-spheres and their decomposition


def is_closed_surface(K: SimplicialComplex) -> bool:
    """Pure 2-dimensional, every edge in two triangles, every vertex link a circle."""
    if K.dim != 2 or not K.is_pure():
        return False
    for e in K.faces_by_dim.get(1, ()):
        if sum(1 for f in K.facets if f & e == e) != 2:
            return False
    for v in K.vertices:
        lk = K.link(1 << (v - 1))
        if not _is_cycle(lk, lk.vertex_mask) or lk.dim != 1:
            return False
    return True


def is_2_sphere(K: SimplicialComplex) -> bool:
    if not is_closed_surface(K):
        return False
    return K.euler_characteristic() == 2 and nx.is_connected(K.graph())


def empty_triangles(K: SimplicialComplex) -> List[VertexSet]:
    """3-cycles of the 1-skeleton that are not simplices."""
    adj = K._adjacency
    out = []
    for a in K.vertices:
        for b in to_labels(adj[a]):
            if b <= a:
                continue
            for c in to_labels(adj[a] & adj[b]):
                if c <= b:
                    continue
                t = to_mask((a, b, c))
                if t not in K.faces:
                    out.append(t)
    return out


def irreducible_decomposition(K: SimplicialComplex) -> List[SimplicialComplex]:
    """Split a 2-sphere along empty triangles until none remain.

    Each factor is relabelled to ``1..k`` keeping the relative order of its
    vertices.  Factors equal to ``∂Δ³`` are kept as they are.
    """
    if not is_2_sphere(K):
        raise NotASphere("irreducible decomposition needs a simplicial 2-sphere")
    K = K.support_complex()
    tris = empty_triangles(K)
    if not tris:
        return [K]
    T = tris[0]
    g = K.graph()
    g.remove_nodes_from(to_labels(T))
    comps = sorted((sorted(c) for c in nx.connected_components(g)), key=lambda c: c[0])
    if len(comps) != 2:
        raise NotASphere("empty triangle does not separate the sphere")
    factors = []
    for comp in comps:
        side = to_mask(comp) | T
        facets = [f for f in K.facets if f & side == f] + [T]
        verts = to_labels(side)
        piece = SimplicialComplex.from_facets(K.m, facets).relabel({v: i + 1 for i, v in enumerate(verts)}, len(verts))
        factors.extend(irreducible_decomposition(piece))
    return factors
