"""Command-line front end.

Subcommands build families, fill cusps, evaluate obstruction tests, search
covers, and dump pairwise intersection data; `serve` runs the HTTP service.
Output is a human table by default or, with --json, the exact report model
serialized with sorted keys, so identical invocations of the same version
produce identical bytes.

Exit codes: 0 once a report is computed, whatever its verdicts say; 1 for
domain errors (no cover found, bad selection, degenerate input); 2 for usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from pydantic import ValidationError

from . import __version__
from .errors import EinfillError
from .service import handlers
from .service.schemas import (
    CheckRequest,
    CoverSearchRequest,
    FamilyRequest,
    FillRequest,
    PointsRequest,
)


def _rat(r: dict) -> str:
    return str(Fraction(r["num"], r["den"]))


def _point(p: list[dict]) -> str:
    return "(" + ", ".join(_rat(c) for c in p) + ")"


def _verdict(v: dict) -> str:
    return f"{v['status']} (margin {_rat(v['margin'])}): {v['note']}"


def _cusped(m: dict) -> str:
    return f"chi {m['chi']}   tau {m['tau']}   cusps {m['cusps']}"


def _header() -> list[str]:
    return [f"einfill {__version__}  schema 1", ""]


def _splitting_lines(s: dict) -> list[str]:
    lines = [f"{'splitting':<18}{'obstruction' if s['obstruction'] else 'no obstruction'}"]
    lines.append(f"  verdict: {s['verdict']}")
    lines.extend(f"  - {r}" for r in s["reasons"])
    if s["citations"]:
        lines.append("  citations: " + ", ".join(s["citations"]))
    return lines


def _render_family(d: dict) -> str:
    lines = _header()
    req = d["input"]
    lines.append(f"{'family':<18}{req['name']} (e = {req['e']})")
    if d["cover"] is not None:
        lines.append(f"{'cover':<18}phi = {d['cover']['phi']} mod {d['cover']['n']}")
    lines.append(f"{'ambient basis':<18}" + ", ".join(d["config"]["basis"]))
    incs = d["config"]["incidences"]
    lines.append(f"{'incidence points':<18}{len(incs)}")
    for inc in incs:
        lines.append(f"  {_point(inc['point'])}  on  " + ", ".join(inc["curves"]))
    ch = d["pair"]["chars"]
    lines.append(
        f"{'after blow-up':<18}chi {ch['chi']}   tau {ch['tau']}   c1^2 {ch['c1sq']}"
        f"   ({d['pair']['blowup_count']} blow-ups)"
    )
    lines.append("divisor curves")
    for c in d["pair"]["curves"]:
        lines.append(f"  {c['id']:<12}genus {c['genus']}   self-int {c['self_int']}")
    lines.append(f"{'(K + D)^2':<18}{d['log_canonical_sq']}")
    lines.append(f"{'log-BMY':<18}{_verdict(d['log_bmy'])}")
    lines.append(f"{'after removal':<18}{_cusped(d['cusped'])}")
    return "\n".join(lines)


def _render_fill(d: dict) -> str:
    lines = _header()
    req = d["input"]
    lines.append(f"{'family':<18}{req['name']} (e = {req['e']})")
    lines.append(f"{'before':<18}{_cusped(d['before'])}")
    lines.append(f"{'filled':<18}{d['filled_indices']}")
    lines.append(f"{'after':<18}{_cusped(d['after'])}")
    lines.append(f"{'l2 signature':<18}{_rat(d['l2_signature'])}")
    lines.append(f"{'test':<18}{d['verdict_kind']}")
    lines.append(f"{'verdict':<18}{_verdict(d['verdict'])}")
    lines.extend(_splitting_lines(d["splitting"]))
    return "\n".join(lines)


def _render_check(d: dict) -> str:
    lines = _header()
    lines.append(f"{'manifold':<18}{_cusped(d['manifold'])}")
    lines.append(f"{'l2 signature':<18}{_rat(d['l2_signature'])}")
    if d["hitchin_thorpe"] is not None:
        lines.append(f"{'Hitchin-Thorpe':<18}{_verdict(d['hitchin_thorpe'])}")
    lines.append(f"{'Dai-Wei':<18}{_verdict(d['dai_wei'])}")
    lines.extend(_splitting_lines(d["splitting"]))
    return "\n".join(lines)


def _render_cover_search(d: dict) -> str:
    lines = _header()
    req = d["input"]
    lines.append(f"{'mode':<18}{req['mode']} (modulus {req['n']})")
    lines.append(f"{'planes':<18}{len(d['planes'])}")
    if d["cover"] is not None:
        lines.append(f"{'cover':<18}phi = {d['cover']['phi']} mod {d['cover']['n']}")
    if d["census"] is not None:
        c = d["census"]
        lines.append(
            f"{'census':<18}total {c['total']}   bad {c['bad']}   good {c['good']}"
        )
        lines.append(f"{'per-plane bad':<18}{c['per_plane_bad']}")
    if d["bound"] is not None:
        holds = "" if d["bound_holds"] is None else (
            "   holds: yes" if d["bound_holds"] else "   holds: NO"
        )
        lines.append(f"{'bound':<18}(p^2 - 3)(p + 1) = {d['bound']}{holds}")
    return "\n".join(lines)


def _render_points(d: dict) -> str:
    lines = _header()
    lines.append(f"{'planes':<18}{len(d['planes'])}")
    for pair in d["pairs"]:
        tag = f"pair ({pair['i']}, {pair['j']})"
        if pair["index"] is None:
            lines.append(f"{tag:<18}{pair['note']}")
            continue
        lines.append(f"{tag:<18}index {pair['index']}   {pair['note']}")
        if pair["points"] is not None:
            lines.extend(f"  {_point(pt)}" for pt in pair["points"])
    return "\n".join(lines)


def _emit(report, as_json: bool, render) -> int:
    data = report.model_dump()
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(render(data))
    return 0


def _load_planes(path: str | None):
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read plane file: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: plane file is not valid JSON: {exc}", file=sys.stderr)
        return 2
    return data


def _parse_cusps(text: str) -> list[int] | int:
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        print(f"error: --cusps expects comma-separated integers, got {text!r}", file=sys.stderr)
        return 2


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="einfill",
        description="Exact surgery calculus and Einstein obstruction tests "
        "for complex-hyperbolic surface families.",
    )
    parser.add_argument("--version", action="version", version=f"einfill {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", help="build a family member and report the full pipeline")
    fam.add_argument("name", choices=("hirzebruch", "xe", "ye"))
    fam.add_argument("--e", type=int, default=1, help="family parameter (default 1)")
    fam.add_argument("--json", action="store_true", help="emit the JSON report")

    fil = sub.add_parser("fill", help="Dehn fill selected cusps and run the obstruction tests")
    fil.add_argument("name", choices=("hirzebruch", "xe", "ye"))
    fil.add_argument(
        "selection",
        nargs="?",
        default="all",
        help="'all', 'none', 'euler=K', or comma-separated indices (default: all)",
    )
    fil.add_argument("--e", type=int, default=1, help="family parameter (default 1)")
    fil.add_argument("--json", action="store_true", help="emit the JSON report")

    chk = sub.add_parser("check", help="run the obstruction tests on raw (chi, tau, cusps)")
    chk.add_argument("--chi", type=int, required=True)
    chk.add_argument("--tau", type=int, required=True)
    chk.add_argument("--cusps", default="", help="comma-separated cusp Euler numbers")
    chk.add_argument("--json", action="store_true", help="emit the JSON report")

    cov = sub.add_parser("cover-search", help="search covers or census the hyperplanes mod p")
    cov.add_argument("mode", choices=("prime", "cyclic", "census"))
    cov.add_argument("--p", type=int, help="prime modulus (prime and census modes)")
    cov.add_argument("--e", type=int, help="cover degree (cyclic mode)")
    cov.add_argument(
        "--seed-planes",
        metavar="FILE",
        help="JSON array of integer 4-vectors, two consecutive vectors per plane "
        "(default: the four base-configuration planes)",
    )
    cov.add_argument("--json", action="store_true", help="emit the JSON report")

    pts = sub.add_parser("points", help="pairwise intersection indices and points of a plane list")
    pts.add_argument("--seed-planes", metavar="FILE", help="as for cover-search")
    pts.add_argument("--json", action="store_true", help="emit the JSON report")

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=8000)
    return parser


def _dispatch(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.command == "family":
        req = FamilyRequest(name=args.name, e=args.e)
        return _emit(handlers.family_report(req), args.json, _render_family)

    if args.command == "fill":
        req = FillRequest(name=args.name, e=args.e, selection=args.selection)
        return _emit(handlers.fill_report(req), args.json, _render_fill)

    if args.command == "check":
        cusps = _parse_cusps(args.cusps)
        if isinstance(cusps, int):
            return cusps
        req = CheckRequest(chi=args.chi, tau=args.tau, cusps=cusps)
        return _emit(handlers.check_report(req), args.json, _render_check)

    if args.command == "cover-search":
        if args.mode == "cyclic":
            if args.e is None or args.p is not None:
                parser.error("cyclic mode takes --e, not --p")
            n = args.e
        else:
            if args.p is None or args.e is not None:
                parser.error(f"{args.mode} mode takes --p, not --e")
            n = args.p
        planes = _load_planes(args.seed_planes)
        if isinstance(planes, int):
            return planes
        req = CoverSearchRequest(mode=args.mode, n=n, planes=planes)
        return _emit(handlers.cover_search_report(req), args.json, _render_cover_search)

    if args.command == "points":
        planes = _load_planes(args.seed_planes)
        if isinstance(planes, int):
            return planes
        req = PointsRequest(planes=planes)
        return _emit(handlers.points_report(req), args.json, _render_points)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    parser.error(f"unknown command {args.command!r}")
    return 2  # pragma: no cover


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(parser, args)
    except ValidationError as exc:
        first = exc.errors()[0]
        loc = ".".join(str(p) for p in first["loc"])
        print(f"error: invalid {loc}: {first['msg']}", file=sys.stderr)
        return 2
    except EinfillError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
