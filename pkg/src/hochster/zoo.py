"""Built-in complexes and a tiny expression language for combining them.

``zoo("join(boundary_simplex(3), boundary_simplex(3))")`` and
``zoo("suspension(polygon(5))")`` both work; ``∂Δ3``/``∂Δ³`` are accepted as
shorthands for ``boundary_simplex(3)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from .complex_core import SimplicialComplex, cone, connected_sum, join, suspension

FLAG9_FACETS = [
    (1, 2, 5), (1, 2, 8), (1, 4, 8), (2, 3, 6), (2, 5, 6), (3, 4, 7),
    (3, 6, 7), (4, 7, 8), (5, 6, 9), (6, 7, 9), (7, 8, 9),
]


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n + 1, ((1 << (n + 1)) - 1,))


def boundary_simplex(n: int) -> SimplicialComplex:
    full = (1 << (n + 1)) - 1
    return SimplicialComplex.from_facets(n + 1, [full & ~(1 << i) for i in range(n + 1)])


def polygon(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("a polygon has at least 3 vertices")
    return SimplicialComplex.from_facets(n, [(i, i % n + 1) for i in range(1, n + 1)])


def bipyramid(n: int) -> SimplicialComplex:
    """Suspension of the boundary of an ``(n - 2)``-gon."""
    return suspension(polygon(n - 2))


def octahedron() -> SimplicialComplex:
    """Octahedron boundary; the antipodal pairs are 14, 25 and 36."""
    return SimplicialComplex.from_facets(6, [(a, b, c) for a in (1, 4) for b in (2, 5) for c in (3, 6)])


def icosahedron() -> SimplicialComplex:
    """Vertex 1 on top, rings 2..6 and 7..11, vertex 12 at the bottom."""
    up = [2 + i for i in range(5)]
    lo = [7 + i for i in range(5)]
    facets = []
    for i in range(5):
        j = (i + 1) % 5
        facets.append((1, up[i], up[j]))
        facets.append((12, lo[i], lo[j]))
        facets.append((up[i], up[j], lo[i]))
        facets.append((up[j], lo[i], lo[j]))
    return SimplicialComplex.from_facets(12, facets)


def flag9() -> SimplicialComplex:
    return SimplicialComplex.from_facets(9, FLAG9_FACETS)


def torus7() -> SimplicialComplex:
    """Seven-vertex triangulation of the torus."""
    facets = []
    for i in range(7):
        facets.append(tuple(sorted((i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1))))
        facets.append(tuple(sorted((i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1))))
    return SimplicialComplex.from_facets(7, facets)


@dataclass(frozen=True)
class PolyhedralData:
    """Vertex-facet incidence of a non-simplicial polytope boundary."""

    name: str
    vertex_count: int
    facets: Tuple[Tuple[int, ...], ...]
    is_simplicial: bool = False


def _dual_polytope(K: SimplicialComplex, name: str) -> PolyhedralData:
    # facets of the dual are the vertex stars, vertices are the triangles
    tri = list(K.facets)
    index = {t: i + 1 for i, t in enumerate(tri)}
    faces = []
    for v in K.vertices:
        around = [index[t] for t in tri if t >> (v - 1) & 1]
        faces.append(tuple(sorted(around)))
    return PolyhedralData(name, len(tri), tuple(faces))


def cube() -> PolyhedralData:
    return _dual_polytope(octahedron(), "C8")


def dodecahedron() -> PolyhedralData:
    return _dual_polytope(icosahedron(), "D20")


_CONSTANTS: Dict[str, Callable[[], object]] = {
    "T4": lambda: boundary_simplex(3),
    "O6": octahedron,
    "I12": icosahedron,
    "C8": cube,
    "D20": dodecahedron,
    "flag9": flag9,
    "torus7": torus7,
    "square": lambda: polygon(4),
    "pentagon": lambda: polygon(5),
    "B5": lambda: bipyramid(5),
    "B7": lambda: bipyramid(7),
}

_FUNCTIONS: Dict[str, Callable] = {
    "simplex": simplex,
    "boundary_simplex": boundary_simplex,
    "polygon": polygon,
    "bipyramid": bipyramid,
    "join": join,
    "cone": cone,
    "suspension": suspension,
    "suspend": suspension,
    "connected_sum": lambda a, b: connected_sum(a, None, b, None),
}

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def names() -> List[str]:
    return sorted(_CONSTANTS) + [f"{f}(...)" for f in sorted(_FUNCTIONS)]


def zoo(name: str):
    """Evaluate a built-in name or expression."""
    text = name.strip()
    if text.startswith("zoo:"):
        text = text[4:]
    text = text.translate(_SUPERSCRIPTS)
    text = re.sub(r"∂Δ(\d+)", r"boundary_simplex(\1)", text)
    text = re.sub(r"Δ(\d+)", r"simplex(\1)", text)
    tokens = []
    for num, ident, other in _TOKEN.findall(text):
        if num:
            tokens.append(("num", int(num)))
        elif ident:
            tokens.append(("id", ident))
        elif other.strip():
            tokens.append(("op", other))
    pos = 0

    def expr():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of expression {name!r}")
        kind, val = tokens[pos]
        pos += 1
        if kind == "num":
            return val
        if kind != "id":
            raise ValueError(f"unexpected {val!r} in {name!r}")
        if pos < len(tokens) and tokens[pos] == ("op", "("):
            pos += 1
            args = []
            if tokens[pos:pos + 1] != [("op", ")")]:
                args.append(expr())
                while tokens[pos:pos + 1] == [("op", ",")]:
                    pos += 1
                    args.append(expr())
            if tokens[pos:pos + 1] != [("op", ")")]:
                raise ValueError(f"missing ')' in {name!r}")
            pos += 1
            fn = _FUNCTIONS.get(val)
            if fn is None:
                raise ValueError(f"unknown zoo function {val!r}")
            return fn(*args)
        const = _CONSTANTS.get(val)
        if const is None:
            raise ValueError(f"unknown zoo name {val!r}")
        return const()

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {name!r}")
    return result


__all__ = [
    "FLAG9_FACETS", "PolyhedralData", "bipyramid", "boundary_simplex", "cube", "dodecahedron",
    "flag9", "icosahedron", "names", "octahedron", "polygon", "simplex", "torus7", "zoo",
]
