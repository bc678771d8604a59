"""Reading and writing the ``.scx`` facet-list format.

::

    m 4
    # comments and blank lines are ignored
    1 2 3
    3 4
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import TextIO, Union

from .complex_core import SimplicialComplex, to_labels
from .exceptions import ParseError


def loads(text: str) -> SimplicialComplex:
    m = None
    facets = []
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if m is None:
            if parts[0] != "m" or len(parts) != 2:
                raise ParseError("expected header 'm <ground_size>'", lineno)
            try:
                m = int(parts[1])
            except ValueError:
                raise ParseError(f"ground size {parts[1]!r} is not an integer", lineno) from None
            if m < 0:
                raise ParseError("ground size must be non-negative", lineno)
            continue
        try:
            labels = [int(x) for x in parts]
        except ValueError:
            raise ParseError(f"non-integer vertex label in {line!r}", lineno) from None
        bad = [v for v in labels if v < 1 or v > m]
        if bad:
            raise ParseError(f"vertex {bad[0]} outside 1..{m}", lineno)
        if len(set(labels)) != len(labels):
            raise ParseError("repeated vertex in facet", lineno)
        facets.append(labels)
    if m is None:
        raise ParseError("missing header 'm <ground_size>'")
    return SimplicialComplex.from_facets(m, facets)


def load(source: Union[str, Path, TextIO]) -> SimplicialComplex:
    if hasattr(source, "read"):
        return loads(source.read())
    return loads(Path(source).read_text())


def dumps(K: SimplicialComplex) -> str:
    lines = [f"m {K.m}"]
    for f in sorted(to_labels(f) for f in K.facets if f):
        lines.append(" ".join(map(str, f)))
    return "\n".join(lines) + "\n"


def dump(K: SimplicialComplex, target: Union[str, Path, TextIO]) -> None:
    if hasattr(target, "write"):
        target.write(dumps(K))
    else:
        Path(target).write_text(dumps(K))
