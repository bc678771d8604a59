"""Command-line front end.

Inputs are ``.scx`` files or built-in expressions (``zoo:O6``,
``zoo:join(T4,T4)``; the ``zoo:`` prefix may be dropped when no file of
that name exists).  Exit codes: 0 success or verdict true, 1 verdict
false, 2 usage error, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import scx
from .complex_core import (
    SimplicialComplex,
    cone,
    connected_sum,
    irreducible_decomposition,
    is_clique_complex,
    is_flag,
    join,
    missing_faces,
    popcount,
    stellar_subdivision,
    suspension,
    to_labels,
    to_mask,
)
from .exact_linalg import Coefficients, format_scalar
from .exceptions import HochsterError, NoMatch, NotASphere, NotPoincareCandidate
from .graded_ring import (
    fingerprint,
    fingerprints_equal,
    match_factors,
    quotient_by_top,
    thm4_ring,
    thm5_ring,
    thm5_terms,
)
from .moment_angle import (
    alexander_duality_check,
    betti_numbers,
    bigraded_betti,
    complex_report,
    generation_by_degree_one,
    hochster_ring,
    is_closed_pseudomanifold,
    is_gorenstein_star,
    lbc_report,
    partition_sweep,
    poincare_pairing_check,
    stellar_hypothesis,
)
from .zoo import boundary_simplex, zoo

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3
MAX_UNFORCED_M = 24


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# input handling


def load_complex(spec: str) -> SimplicialComplex:
    if not spec.startswith("zoo:") and Path(spec).is_file():
        return scx.load(spec)
    try:
        K = zoo(spec)
    except (ValueError, TypeError) as exc:
        if spec.startswith("zoo:"):
            raise InputError(str(exc)) from exc
        raise InputError(f"{spec}: no such file or built-in complex") from exc
    if not isinstance(K, SimplicialComplex):
        raise InputError(f"{spec} is not a simplicial complex")
    return K


def parse_simplex(text: str) -> int:
    try:
        return to_mask(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise InputError(f"bad vertex list {text!r}") from exc


def _guard(K: SimplicialComplex, args) -> None:
    if K.m > MAX_UNFORCED_M and not args.force:
        raise InputError(f"m = {K.m} exceeds {MAX_UNFORCED_M}; pass --force to enumerate 2^m subsets")


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _labels(mask: int) -> str:
    return "{" + ",".join(map(str, to_labels(mask))) + "}"


def _table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _fingerprint_text(fp) -> str:
    h = ", ".join(f"{d}:{c}" for d, c in fp.hilbert)
    mr = ", ".join(f"({i},{j}):{r}" for i, j, r in fp.mult_ranks)
    dec = ", ".join(f"{d}:{c}" for d, c in fp.decomposable)
    return f"  hilbert       {{{h}}}\n  mult ranks    {{{mr}}}\n  decomposable  {{{dec}}}"


# ---------------------------------------------------------------------------
# commands


def cmd_info(args) -> int:
    K = load_complex(args.complex)
    gor = is_gorenstein_star(K, "q")
    data = {
        "m": K.m,
        "dim": K.dim,
        "vertices": K.vertex_count,
        "ghost_vertices": list(K.ghost_vertices),
        "f_vector": K.f_vector(),
        "euler_characteristic": K.euler_characteristic(),
        "facets": len(K.facets),
        "pure": K.is_pure(),
        "flag": is_flag(K),
        "closed_pseudomanifold": is_closed_pseudomanifold(K),
        "sphere": gor.value,
    }
    if args.json and args.report:
        _guard(K, args)
        data["report"] = complex_report(K, args.coeff, args.jobs)
    text = "\n".join(f"{k:22} {json.dumps(v)}" for k, v in data.items() if k != "report")
    _emit(args, data, text)
    return EXIT_OK


def cmd_betti(args) -> int:
    K = load_complex(args.complex)
    _guard(K, args)
    bb = bigraded_betti(K, args.coeff, args.jobs)
    betti = bb.betti()
    torsion = bb.torsion_by_degree()
    data = {
        "m": K.m,
        "dim": K.dim,
        "coefficients": str(Coefficients.parse(args.coeff)),
        "betti": betti,
        "torsion": {str(d): t for d, t in torsion.items()},
    }
    rows = [(d, r, " ".join(map(str, torsion.get(d, [])))) for d, r in enumerate(betti) if r or d in torsion]
    _emit(args, data, _table(["degree", "rank", "torsion"], rows))
    return EXIT_OK


def cmd_bigraded(args) -> int:
    K = load_complex(args.complex)
    _guard(K, args)
    bb = bigraded_betti(K, args.coeff, args.jobs)
    rows = bb.rows()
    data = {"m": K.m, "dim": K.dim, "coefficients": str(Coefficients.parse(args.coeff)), "bigraded": rows}
    table = []
    for r in rows:
        J = to_mask(r["J"])
        i, two_j = bb.tor_bidegree(J, r["d"])
        table.append((_labels(J), r["d"], r["rank"], bb.total_degree(J, r["d"]), f"({i},{two_j})"))
    _emit(args, data, _table(["J", "d", "rank", "degree", "tor"], table))
    return EXIT_OK


def cmd_ring(args) -> int:
    K = load_complex(args.complex)
    _guard(K, args)
    R = hochster_ring(K, args.coeff, args.jobs)
    A = R.algebra
    fp = R.fingerprint()
    data = {"m": K.m, "ring": A.to_dict(), "fingerprint": fp.to_dict()}
    lines = [f"basis ({A.dim}):"]
    lines += [f"  {i:4}  deg {A.degrees[i]:3}  {A.labels[i]}" for i in range(A.dim)]
    if not args.no_table:
        lines.append("products:")
        for (i, j), v in sorted(A.table.items()):
            rhs = " + ".join(f"{format_scalar(c)}*{A.labels[k]}" for k, c in sorted(v.items()))
            lines.append(f"  {A.labels[i]} * {A.labels[j]} = {rhs}")
    lines.append("fingerprint:")
    lines.append(_fingerprint_text(fp))
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _check_gorenstein(K, args) -> dict:
    coeffs = Coefficients.parse(args.coeff)
    verdict = is_gorenstein_star(K, coeffs if coeffs.is_field else "q")
    duality = alexander_duality_check(K, coeffs)
    out = {"verdict": verdict.value, "witness": list(verdict.witness or ()), "reason": verdict.reason}
    out["duality"] = duality.overall_pass
    out["duality_failures"] = [list(f) for f in duality.failures()]
    if duality.overall_pass != verdict.value:
        out["reason"] += " (duality disagrees)"
    return out


def _check_flag(K, args) -> dict:
    big = [list(mf.labels) for mf in missing_faces(K) if len(mf) > 2]
    value = is_flag(K)
    return {"verdict": value, "witness": big[:1], "clique_complex": is_clique_complex(K)}


def _check_pairing(K, args) -> dict:
    coeffs = Coefficients.parse(args.coeff)
    if not coeffs.is_field:
        coeffs = Coefficients(0)
    try:
        value = poincare_pairing_check(hochster_ring(K, coeffs, args.jobs))
        reason = ""
    except NotPoincareCandidate as exc:
        value, reason = False, str(exc)
    return {"verdict": value, "reason": reason}


def _check_lbc(K, args) -> dict:
    try:
        rep = lbc_report(K)
    except NotASphere as exc:
        return {"verdict": False, "reason": str(exc)}
    return {"verdict": rep.holds, "edges": rep.edges, "bound": rep.bound, "tight": rep.tight}


def _check_generation(K, args) -> dict:
    coeffs = Coefficients.parse(args.coeff)
    if not coeffs.is_field:
        coeffs = Coefficients(0)
    rep = generation_by_degree_one(hochster_ring(K, coeffs, args.jobs))
    out = {
        "verdict": rep.value,
        "failing": list(rep.failing or ()),
        "higher_generated": rep.higher_generated,
        "higher_failing": list(rep.higher_failing or ()),
        "witness_partitions": [[list(a), list(b)] for a, b in rep.witness_partitions],
    }
    if not rep.value:
        out["disconnected_partitions"] = [[list(a), list(b)] for a, b in partition_sweep(K)]
    return out


CHECKS = {
    "gorenstein": _check_gorenstein,
    "flag": _check_flag,
    "pairing": _check_pairing,
    "lbc": _check_lbc,
    "generation": _check_generation,
}


def cmd_check(args) -> int:
    K = load_complex(args.complex)
    _guard(K, args)
    out = CHECKS[args.which](K, args)
    out["check"] = args.which
    lines = [f"{args.which}: {'true' if out['verdict'] else 'false'}"]
    for k, v in out.items():
        if k not in ("verdict", "check") and v not in ("", None):
            lines.append(f"  {k}: {json.dumps(v)}")
    _emit(args, out, "\n".join(lines))
    return EXIT_OK if out["verdict"] else EXIT_FALSE


def _write_complex(K: SimplicialComplex, args) -> int:
    text = scx.dumps(K)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _gluing(args):
    f1 = parse_simplex(args.facets[0]) if args.facets else None
    f2 = parse_simplex(args.facets[1]) if args.facets else None
    matching = None
    if args.match:
        if f2 is None:
            raise InputError("--match needs --facets")
        images = [int(x) for x in args.match.split(",")]
        matching = dict(zip(to_labels(f2), images))
    return f1, f2, matching


def cmd_op(args) -> int:
    if args.op == "connect-sum":
        f1, f2, matching = _gluing(args)
        K = connected_sum(load_complex(args.first), f1, load_complex(args.second), f2, matching)
    elif args.op == "stellar":
        K = stellar_subdivision(load_complex(args.first), parse_simplex(args.simplex))
    elif args.op == "join":
        K = join(load_complex(args.first), load_complex(args.second))
    elif args.op == "cone":
        K = cone(load_complex(args.first))
    else:
        K = suspension(load_complex(args.first))
    return _write_complex(K, args)


def _ring_fingerprint(K: SimplicialComplex, args):
    return hochster_ring(K, args.coeff, args.jobs).fingerprint()


def _require_gorenstein(K: SimplicialComplex, name: str) -> None:
    verdict = is_gorenstein_star(K)
    if not verdict:
        raise InputError(f"{name} is not Gorenstein*: {verdict.reason}")


def _verify_thm4(args) -> dict:
    K1 = load_complex(args.first).support_complex()
    K2 = load_complex(args.second).support_complex()
    for K, name in ((K1, args.first), (K2, args.second)):
        _guard(K, args)
        _require_gorenstein(K, name)
    if K1.dim != K2.dim:
        raise InputError("both complexes must have the same dimension")
    n = K1.dim + 1
    f1, f2, matching = _gluing(args)
    glued = connected_sum(K1, f1, K2, f2, matching)
    _guard(glued, args)
    H1 = hochster_ring(K1, args.coeff, args.jobs).algebra
    H2 = hochster_ring(K2, args.coeff, args.jobs).algebra
    formula = fingerprint(thm4_ring(H1, H2, K1.m, K2.m, n))
    direct = _ring_fingerprint(glued, args)
    return {
        "theorem": "thm4",
        "m1": K1.m,
        "m2": K2.m,
        "n": n,
        "formula": formula.to_dict(),
        "direct": direct.to_dict(),
        "result": "PASS" if fingerprints_equal(formula, direct) else "FAIL",
    }


def _verify_thm5(args) -> dict:
    K = load_complex(args.first).support_complex()
    _guard(K, args)
    sigma = parse_simplex(args.simplex)
    out = {"theorem": "thm5", "simplex": list(to_labels(sigma))}
    _require_gorenstein(K, args.first)
    if sigma not in K.faces:
        raise InputError(f"{_labels(sigma)} is not a simplex")
    if popcount(sigma) == 1:
        out.update(result="PASS", detail="subdividing a vertex changes nothing")
        return out
    hyp = stellar_hypothesis(K, sigma, args.coeff)
    out["surrogate"] = hyp.surrogate
    out["hypothesis"] = hyp.detail
    if not hyp.certified:
        out["result"] = "SKIPPED"
        return out
    link = K.link(sigma).support_complex()
    f = betti_numbers(link, args.coeff, args.jobs) or [1]
    m, n = K.m, K.dim + 1
    s = link.m + popcount(sigma)
    terms = thm5_terms(f, m, n, s)
    HK = hochster_ring(K, args.coeff, args.jobs).algebra
    formula = fingerprint(thm5_ring(HK, f, m, n, s))
    direct = _ring_fingerprint(stellar_subdivision(K, sigma), args)
    out.update(
        f=f,
        m=m,
        n=n,
        s=s,
        terms=[list(t) for t in terms],
        formula=formula.to_dict(),
        direct=direct.to_dict(),
        result="PASS" if fingerprints_equal(formula, direct) else "FAIL",
    )
    return out


def cmd_verify(args) -> int:
    out = _verify_thm4(args) if args.theorem == "thm4" else _verify_thm5(args)
    lines = [f"{out['theorem']}: {out['result']}"]
    for k, v in out.items():
        if k in ("theorem", "result"):
            continue
        if k in ("formula", "direct"):
            lines.append(f"  {k} fingerprint:")
            lines.append("    " + json.dumps(v, sort_keys=True))
        else:
            lines.append(f"  {k}: {json.dumps(v)}")
    _emit(args, out, "\n".join(lines))
    return EXIT_FALSE if out["result"] == "FAIL" else EXIT_OK


def factor_fingerprints(K: SimplicialComplex, coefficients="q", jobs: Optional[int] = None):
    """Irreducible factors of a 2-sphere with their quotient-by-top fingerprints."""
    factors = irreducible_decomposition(K)
    return factors, [fingerprint(quotient_by_top(hochster_ring(F, coefficients, jobs).algebra)) for F in factors]


def _factor_rows(factors, fps) -> List[dict]:
    return [
        {
            "vertices": F.m,
            "facets": [list(f) for f in F.facet_labels()],
            "tetrahedron": F.is_isomorphic(boundary_simplex(3)),
            "fingerprint": fp.to_dict(),
        }
        for F, fp in zip(factors, fps)
    ]


def cmd_decompose(args) -> int:
    K = load_complex(args.complex)
    factors, fps = factor_fingerprints(K, args.coeff, args.jobs)
    out = {"factors": _factor_rows(factors, fps), "count": len(factors), "prime": len(factors) == 1}
    lines = [f"{len(factors)} irreducible factor(s)" + (" (prime)" if len(factors) == 1 else "")]
    for i, (F, fp) in enumerate(zip(factors, fps), start=1):
        kind = " (boundary of a tetrahedron)" if F.is_isomorphic(boundary_simplex(3)) else ""
        lines.append(f"factor {i}: {F.m} vertices, f-vector {F.f_vector()}{kind}")
        lines.append(_fingerprint_text(fp))
    _emit(args, out, "\n".join(lines))
    return EXIT_OK


def cmd_compare(args) -> int:
    KA, KB = load_complex(args.first), load_complex(args.second)
    fa, pa = factor_fingerprints(KA, args.coeff, args.jobs)
    fb, pb = factor_fingerprints(KB, args.coeff, args.jobs)
    out = {"factors_a": len(fa), "factors_b": len(fb), "same_count": len(fa) == len(fb)}
    try:
        out["permutation"] = match_factors(pa, pb)
        out["match"] = True
    except NoMatch as exc:
        out["permutation"] = None
        out["match"] = False
        out["reason"] = str(exc)
    lines = [f"factors: {len(fa)} vs {len(fb)}", f"match: {'true' if out['match'] else 'false'}"]
    if out["match"]:
        lines.append("permutation: " + " ".join(f"{i + 1}->{j + 1}" for i, j in enumerate(out["permutation"])))
    _emit(args, out, "\n".join(lines))
    return EXIT_OK if out["match"] else EXIT_FALSE


# ---------------------------------------------------------------------------
# argument parsing


def _coeff(text: str) -> str:
    try:
        return str(Coefficients.parse(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=None, help="worker processes for subset enumeration")
    common.add_argument("--force", action="store_true", help="allow more than 24 vertices")

    def coeff(p, default):
        p.add_argument("--coeff", type=_coeff, default=default, help="z, q or fp:P")

    parser = argparse.ArgumentParser(prog="hochster", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="f-vector and basic flags")
    p.add_argument("complex")
    p.add_argument("--report", action="store_true", help="with --json, include the full cohomology report")
    coeff(p, "z")
    p.set_defaults(func=cmd_info)

    for name, func, default, helptext in (
        ("betti", cmd_betti, "z", "Betti numbers and torsion of the moment-angle complex"),
        ("bigraded", cmd_bigraded, "z", "ranks of every full subcomplex"),
        ("ring", cmd_ring, "q", "cohomology ring and fingerprint"),
        ("decompose", cmd_decompose, "q", "irreducible factors of a 2-sphere"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("complex")
        coeff(p, default)
        if name == "ring":
            p.add_argument("--no-table", action="store_true", help="omit the multiplication table in text output")
        p.set_defaults(func=func)

    p = sub.add_parser("check", parents=[common], help="one verdict; exit code mirrors it")
    p.add_argument("which", choices=sorted(CHECKS))
    p.add_argument("complex")
    coeff(p, "q")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("op", parents=[common], help="build a new complex and write it as .scx")
    p.add_argument("op", choices=["connect-sum", "stellar", "join", "cone", "suspend"])
    p.add_argument("first")
    p.add_argument("second", nargs="?")
    p.add_argument("--facets", nargs=2, metavar=("F1", "F2"), help="gluing facets as comma lists")
    p.add_argument("--match", help="images in F1 of the vertices of F2, in increasing order")
    p.add_argument("--simplex", help="simplex to subdivide, e.g. 1,2")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("verify", parents=[common], help="compare a ring formula with direct computation")
    p.add_argument("theorem", choices=["thm4", "thm5"])
    p.add_argument("first")
    p.add_argument("second", nargs="?")
    p.add_argument("--simplex")
    p.add_argument("--facets", nargs=2, metavar=("F1", "F2"))
    p.add_argument("--match")
    coeff(p, "q")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", parents=[common], help="match irreducible factors of two 2-spheres")
    p.add_argument("first")
    p.add_argument("second")
    coeff(p, "q")
    p.set_defaults(func=cmd_compare)
    return parser


def _validate(parser, args) -> None:
    if args.command == "op":
        if args.op in ("connect-sum", "join") and not args.second:
            parser.error(f"op {args.op} needs two complexes")
        if args.op == "stellar" and not args.simplex:
            parser.error("op stellar needs --simplex")
    if args.command == "verify":
        if args.theorem == "thm4" and not args.second:
            parser.error("verify thm4 needs two complexes")
        if args.theorem == "thm5" and not args.simplex:
            parser.error("verify thm5 needs --simplex")
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        parser.error("--jobs must be positive")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.func(args)
    except (InputError, HochsterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
