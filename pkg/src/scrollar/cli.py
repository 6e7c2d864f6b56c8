"""Command-line interface.

Exit codes: 0 success, 1 a verification or search failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .bivariate import BiPoly
from .bundle import BundleLattice, InflationDatum, InvalidLatticeError, cohomology, inflate, predicted_inflation
from .cover import (
    CoverAlgebra, DegenerateTraceForm, InvalidAlgebraError, MaximalityNotCertified, branch_and_genus,
    from_plane_model, kummer_cover, pinch_tower, tschirnhausen,
)
from .field import CharacteristicError, field_for
from .invariants import (
    Exhausted, HurwitzParams, filtration_degrees, hurwitz_dimension, maroni_expected,
    miranda_construct, miranda_degenerate_diagnostic, miranda_realizable, rees_degeneration_target,
)
from .parse import ParseError, parse_bivariate, parse_poly, parse_scalar
from .rnc import RncData, lingen_sample_rank, lingen_values, rnc_parametrize
from .suites import SUITES, RunConfig, run_suite


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def parse_model(text: str, field):
    """A plane model, cover JSON or bundle JSON from text."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        if "f" in data:
            return parse_bivariate(data["f"], field)
        if "mult" in data:
            return CoverAlgebra.from_json(data)
        if "finite" in data:
            return BundleLattice.from_json(data, field)
        raise UsageError("JSON must describe a plane model, a cover or a bundle")
    return parse_bivariate(stripped, field)


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _cover_of(model) -> CoverAlgebra:
    if isinstance(model, CoverAlgebra):
        return model
    if isinstance(model, BiPoly):
        return from_plane_model(model)
    raise UsageError("expected a cover or a plane model")


def _cover_summary(c: CoverAlgebra) -> dict:
    _, E = tschirnhausen(c)
    out = {"d": c.d, "provenance": c.provenance}
    if E is None:
        out.update(type=[], degree=0)
        return out
    out.update(E.to_json())
    bg = branch_and_genus(c)
    out.update(branch_degree=bg.branch_degree, p_a=bg.p_a, discriminant_degree=bg.discriminant_degree)
    if bg.independent_branch is not None:
        out["independent_branch_degree"] = bg.independent_branch
    return out


def cmd_scrollar(args, field) -> tuple[dict, int]:
    return _cover_summary(_cover_of(parse_model(_read(args.model), field))), 0


def cmd_pinch(args, field) -> tuple[dict, int]:
    ls = _ints(args.degrees)
    tower = pinch_tower(ls, field)
    out = _cover_summary(tower[-1])
    out["cover"] = tower[-1].to_json()
    return out, 0


def cmd_kummer(args, field) -> tuple[dict, int]:
    return _cover_summary(kummer_cover(args.d, parse_poly(args.p, field))), 0


def cmd_fibers(args, field) -> tuple[dict, int]:
    c = _cover_of(parse_model(_read(args.model), field))
    y = parse_scalar(args.x, field)
    pts = c.fiber_points(y)
    return {"x": str(y), "unramified": c.unramified_at(y),
            "points": [[str(v) for v in p] for p in pts]}, 0


def cmd_inflate(args, field) -> tuple[dict, int]:
    B = parse_model(_read(args.bundle), field)
    if not isinstance(B, BundleLattice):
        raise UsageError("--bundle must be bundle JSON")
    vecs = tuple(tuple(parse_scalar(t, field) for t in v.split(",")) for v in args.vectors.split(";"))
    datum = InflationDatum(parse_scalar(args.point, field), vecs)
    E = inflate(B, datum)
    h0, h1, rk = predicted_inflation(B, datum)
    observed = cohomology(E.splitting_type())
    out = {"before": B.splitting_type().to_json(), "after": E.splitting_type().to_json(),
           "predicted": {"h0": h0, "h1": h1, "rank_qV": rk},
           "law_holds": observed == (h0, h1), "bundle": E.to_json()}
    return out, 0 if out["law_holds"] else 1


def cmd_lingen(args, field) -> tuple[dict, int]:
    res = lingen_sample_rank(args.d, args.trials, args.seed, field)
    out = res.to_json()
    out["inconclusive"] = res.inconclusive
    return out, 0


def cmd_rnc(args, field) -> tuple[dict, int]:
    r = RncData(tuple(parse_scalar(t, field) for t in args.a.split(",")),
                tuple(parse_scalar(t, field) for t in args.b.split(",")), field)
    comps, G, report = rnc_parametrize(r)
    out = {"components": [str(c) for c in comps], "report": report.to_json()}
    if r.d >= 3:
        out["lingen"] = {f"{u},{v}": {f"{i + 1},{j + 1}": str(val) for (i, j), val in
                                      lingen_values(r, u, v).items()} for u, v in ((1, 0), (0, 1))}
    return out, 0


def cmd_miranda(args, field) -> tuple[dict, int]:
    a1, a2 = args.a1, args.a2
    out = {"a1": a1, "a2": a2, "realizable": miranda_realizable(a1, a2)}
    if not args.construct:
        return out, 0
    if not out["realizable"]:
        diag = miranda_degenerate_diagnostic(a1, a2, args.attempts, args.seed, field)
        out["diagnostic"] = diag.to_json()
        return out, 0
    try:
        w = miranda_construct(a1, a2, args.attempts, args.seed, field)
    except Exhausted as exc:
        out["exhausted"] = exc.stats
        return out, 1
    out["witness"] = w.to_json()
    out["type"] = list(tschirnhausen(w.section.cover())[1].parts)
    return out, 0


def cmd_dims(args, field) -> tuple[dict, int]:
    p = HurwitzParams(args.d, args.g, args.gy)
    return {"d": p.d, "g": p.g, "g_Y": p.g_Y, "b": p.b, "hurwitz_dim": hurwitz_dimension(p)}, 0


def cmd_maroni(args, field) -> tuple[dict, int]:
    p = HurwitzParams(args.d, args.g, args.gy)
    out = {"type": sorted(_ints(args.type)), "d": p.d, "g": p.g, "g_Y": p.g_Y}
    out.update(maroni_expected(_ints(args.type), p).to_json())
    return out, 0


def cmd_filtration(args, field) -> tuple[dict, int]:
    degs = filtration_degrees(args.rank, args.degree, args.gap)
    return {"rank": args.rank, "degree": args.degree, "gap": args.gap, "degrees": list(degs),
            "rees_target": sorted(degs)}, 0


def cmd_verify(args, field) -> tuple[dict, int]:
    rep = run_suite(args.suite, RunConfig(args.char, args.seed, args.trials))
    return rep.to_json(), 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    def flags(suppress: bool) -> argparse.ArgumentParser:
        # the subcommand copy must not overwrite flags given before the subcommand
        dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        c = argparse.ArgumentParser(add_help=False)
        c.add_argument("--char", type=int, default=dflt(0), help="0 for the rationals or a prime p > d")
        c.add_argument("--seed", type=int, default=dflt(1))
        c.add_argument("--json", action="store_true", default=dflt(False), help="emit JSON instead of text")
        c.add_argument("-v", "--verbose", action="store_true", default=dflt(False))
        return c

    common = flags(True)
    ap = argparse.ArgumentParser(prog="scrollar", description=__doc__.splitlines()[0], parents=[flags(False)])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(fn=fn)
        return p

    p = add("scrollar", cmd_scrollar, "Tschirnhausen splitting type of a cover")
    p.add_argument("--model", required=True, help="file with a plane model or cover JSON ('-' for stdin)")
    p = add("pinch", cmd_pinch, "realize a splitting type by a pinching tower")
    p.add_argument("--degrees", required=True)
    p = add("kummer", cmd_kummer, "the cover y^d = p(x)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", required=True)
    p = add("fibers", cmd_fibers, "rational fiber points of a cover over x")
    p.add_argument("--model", required=True)
    p.add_argument("--x", required=True)
    p = add("inflate", cmd_inflate, "inflate a bundle and check the cohomology law")
    p.add_argument("--bundle", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--vectors", required=True, help="fiber vectors, e.g. '1,0;0,1'")
    p = add("lingen", cmd_lingen, "sampling certificate for the pairing independence")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p = add("rnc", cmd_rnc, "rational normal curve through the coordinate points")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p = add("miranda", cmd_miranda, "triple-cover realizability of (a1, a2)")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--construct", action="store_true")
    p.add_argument("--attempts", type=int, default=100)
    p = add("dims", cmd_dims, "Hurwitz space dimension")
    for flag in ("--d", "--g", "--gy"):
        p.add_argument(flag, type=int, required=True)
    p = add("maroni", cmd_maroni, "expected dimension of a Maroni locus")
    p.add_argument("--type", required=True)
    for flag in ("--d", "--g", "--gy"):
        p.add_argument(flag, type=int, required=True)
    p = add("filtration", cmd_filtration, "degree sequence with prescribed gaps")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--gap", type=int, required=True)
    p = add("verify", cmd_verify, "run a seeded verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--trials", type=int, default=None)
    return ap


def render_text(data, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, dict):
                lines.append(render_text(item, indent))
            else:
                lines.append(f"{pad}- {json.dumps(item) if isinstance(item, list) else item}")
            if isinstance(item, dict):
                lines.append("")
    else:
        lines.append(f"{pad}{data}")
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        field = field_for(args.char)
        data, code = args.fn(args, field)
    except (ParseError, UsageError, json.JSONDecodeError, OSError, InvalidLatticeError,
            InvalidAlgebraError, MaximalityNotCertified, DegenerateTraceForm, CharacteristicError,
            ValueError, KeyError) as exc:
        print(f"scrollar: error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(data, sort_keys=True) if args.json else render_text(data))
    return code


if __name__ == "__main__":
    sys.exit(main())
