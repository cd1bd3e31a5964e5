"""Command-line driver: ``ribbontile <command> ...``.

Exit codes: 0 success, 1 computation or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from ribbontile import dimers, oracles
from ribbontile.geometry import (
    Cell,
    GeometryError,
    Region,
    diagonal_cell,
    make_deficient_square,
    parse_region,
    serialize_region,
)
from ribbontile.projection import ImageTiling, LiftChoices, ProjectionError, lift, project
from ribbontile.propagation import PropagationError, propagate, propagation_checks
from ribbontile.render import render_ascii, render_svg
from ribbontile.solver import Tiling, count_tilings, enumerate_tilings, validate_tiling
from ribbontile.structure import (
    Side,
    StructureError,
    crack_census,
    decompose,
    extract_crack,
    validate_crack,
    window_balance,
)
from ribbontile.tiles import TileSet

log = logging.getLogger("ribbontile")


class UsageError(Exception):
    """Bad flags or inputs; exit status 2."""


class Failure(Exception):
    """A computation or validation failed; exit status 1."""


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise Failure(f"cannot write {args.out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def _parse_pair(text: str):
    try:
        r, c = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected R,C but got {text!r}") from None
    return r, c


def _tileset(args) -> TileSet:
    try:
        return TileSet.parse(args.tileset)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _region(args) -> Region:
    if args.region and args.square:
        raise UsageError("give either --square or --region, not both")
    if args.region:
        if args.missing or args.missing_pos:
            raise UsageError("--missing/--missing-pos go with --square; mark the missing cell with * in the region file")
        try:
            text = Path(args.region).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read region file: {exc}") from None
        try:
            return parse_region(text)
        except GeometryError as exc:
            raise UsageError(f"{args.region}: {exc}") from None
    if not args.square:
        raise UsageError("one of --square or --region is required")
    if args.missing and args.missing_pos:
        raise UsageError("give either --missing or --missing-pos, not both")
    if args.missing:
        missing = _parse_pair(args.missing)
    elif args.missing_pos:
        missing = diagonal_cell(args.missing_pos)
    else:
        raise UsageError("--square needs --missing R,C or --missing-pos P")
    try:
        return make_deficient_square(args.square, missing)
    except GeometryError as exc:
        raise UsageError(str(exc)) from None


def _load_tiling(args, region: Region, tileset: TileSet) -> Tiling:
    if args.tiling:
        try:
            raw = sys.stdin.read() if args.tiling == "-" else Path(args.tiling).read_text()
            first = raw.strip().splitlines()[0]
            tiling = Tiling.from_json(first if first.startswith("{") and first.endswith("}") else raw)
        except (OSError, IndexError, KeyError, ValueError) as exc:
            raise UsageError(f"cannot read tiling: {exc}") from None
        problems = validate_tiling(region, tiling)
        if problems:
            raise Failure(f"tiling does not cover the region exactly: {problems[:3]}")
        return tiling
    for i, t in enumerate(enumerate_tilings(region, tileset)):
        if i == args.index:
            return t
    raise Failure(f"region has fewer than {args.index + 1} tilings")


def cmd_count(args) -> int:
    region, tileset = _region(args), _tileset(args)
    n = count_tilings(region, tileset, threads=args.threads)
    if args.json:
        _emit(args, _dump({"count": n, "tileset": tileset.value, "region": serialize_region(region)}) + "\n")
    else:
        _emit(args, f"{n}\n")
    return 0


def cmd_enumerate(args) -> int:
    region, tileset = _region(args), _tileset(args)
    lines = [t.to_jsonl() + "\n" for t in enumerate_tilings(region, tileset, limit=args.limit)]
    _emit(args, "".join(lines))
    return 0


def _analysis(region: Region, tiling: Tiling, tileset: TileSet) -> dict:
    dec = decompose(region, tiling)
    report = extract_crack(region, tiling, dec)
    verdict = validate_crack(report, region.width, tileset)
    balance = window_balance(report)
    return {
        "decomposition": {
            "blocks": [
                {"origin": list(b.origin), "shape": b.orientation, "side": b.side.value}
                for b in sorted(dec.blocks, key=lambda b: b.piece)
            ],
            "irregular": [p.to_json() for p in dec.irregular],
        },
        "crack": {
            "cells": [list(c) for c in sorted(report.crack_cells)],
            "irregular_count": report.irregular_count,
            "component_sizes": [len(c) for c in report.components],
            "windows": [s.value for s in report.window_occupancy],
            "window_balance": {s.value: balance[s] for s in Side},
        },
        "verdict": dict(verdict.flags(), ok=verdict.ok, diagnostics=verdict.diagnostics),
    }


def cmd_analyze(args) -> int:
    region, tileset = _region(args), _tileset(args)
    if args.census:
        _emit(args, crack_census(region, tileset).dumps() + "\n")
        return 0
    tiling = _load_tiling(args, region, tileset)
    out = _analysis(region, tiling, tileset)
    _emit(args, _dump(out) + "\n")
    return 0 if out["verdict"]["ok"] else 1


def cmd_project(args) -> int:
    region, tileset = _region(args), _tileset(args)
    tiling = _load_tiling(args, region, tileset)
    _emit(args, project(region, tiling).dumps() + "\n")
    return 0


def _monomer_sides(items) -> dict:
    out = {}
    for item in items or ():
        try:
            k, side = item.split("=")
            out[Cell(int(k), int(k))] = Side(side)
        except ValueError:
            raise UsageError(f"--monomer-side expects K=lower|upper, got {item!r}") from None
    return out


def cmd_lift(args) -> int:
    try:
        text = sys.stdin.read() if args.image == "-" else Path(args.image).read_text()
        image = ImageTiling.from_json(text)
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot read image: {exc}") from None
    if not args.square or not args.missing_pos:
        raise UsageError("lift needs --square and --missing-pos")
    choices = LiftChoices(args.variant, _monomer_sides(args.monomer_side))
    tiling = lift(image, args.square, args.missing_pos, choices)
    _emit(args, tiling.to_jsonl() + "\n")
    return 0


def cmd_dimers(args) -> int:
    n = args.board
    if n < 1:
        raise UsageError("--board must be positive")
    out: dict = {"board": n}
    try:
        if args.profile:
            out["profile"] = dimers.diagonal_profile(n).counts
            out["weighted"] = sum((1 << k) * v for k, v in enumerate(out["profile"]))
        elif args.missing_pos:
            out["missing_pos"] = args.missing_pos
            out["count"] = dimers.count_dimer_deficient(n, args.missing_pos)
        elif args.monomers:
            out["count"] = dimers.count_monomer_dimer_tilings(n, n)
        elif args.method == "kasteleyn":
            out["count"] = dimers.kasteleyn_closed_form(n)
        elif args.method == "brute":
            out["count"] = oracles.count_perfect_matchings([(r, c) for r in range(n) for c in range(n)])
        else:
            out["count"] = dimers.count_dimer_tilings(n)
    except dimers.DimerError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        _emit(args, _dump(out) + "\n")
    elif "profile" in out:
        _emit(args, " ".join(map(str, out["profile"])) + "\n")
    else:
        _emit(args, f"{out['count']}\n")
    return 0


def cmd_propagate(args) -> int:
    region, tileset = _region(args), _tileset(args)
    tiling = _load_tiling(args, region, tileset)
    new_region, new_tiling = propagate(region, tiling, tileset)
    problems = propagation_checks(region, tiling, new_region, new_tiling, tileset)
    out = {
        "side": new_region.width,
        "region": serialize_region(new_region),
        "tiling": new_tiling.to_json(),
        "problems": problems,
    }
    _emit(args, _dump(out) + "\n")
    return 1 if problems else 0


def cmd_render(args) -> int:
    region, tileset = _region(args), _tileset(args)
    tiling = _load_tiling(args, region, tileset)
    if args.format == "ascii":
        _emit(args, render_ascii(region, tiling))
        return 0
    crack = frozenset()
    if region.is_deficient_square and region.width % 2 == 1:
        try:
            crack = extract_crack(region, tiling).crack_cells
        except StructureError:
            crack = frozenset()
    _emit(args, render_svg(region, tiling, crack))
    return 0


def cmd_verify(args) -> int:
    from ribbontile.verify import run_suite

    report = run_suite(args.suite, threads=args.threads)
    if args.json:
        _emit(args, report.dumps() + "\n")
    else:
        _emit(args, "\n".join(report.lines()) + "\n")
    return report.exit_code


def _add_region_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--square", type=int, help="side of a deficient square")
    p.add_argument("--missing", help="missing cell R,C (0-indexed)")
    p.add_argument("--missing-pos", type=int, help="missing cell at diagonal position P (1-indexed)")
    p.add_argument("--region", help="region file (# cell, . absent, * missing)")
    p.add_argument("--tileset", default="t4", help="t4 or t4plus (default t4)")


def _add_tiling_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tiling", help="tiling JSON file (or - for stdin)")
    p.add_argument("--index", type=int, default=0, help="use the I-th enumerated tiling (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ribbontile", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, region=True, tiling=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if region:
            _add_region_flags(p)
        if tiling:
            _add_tiling_flags(p)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", help="write output to FILE")
        p.add_argument("--threads", type=int, default=1)
        return p

    command("count", cmd_count, "count tilings")
    p = command("enumerate", cmd_enumerate, "list tilings as JSON Lines")
    p.add_argument("--limit", type=int)
    p = command("analyze", cmd_analyze, "blocks, crack and verdict of one tiling", tiling=True)
    p.add_argument("--census", action="store_true", help="group all tilings by crack instead")
    command("project", cmd_project, "half-scale image of a tiling", tiling=True)
    p = command("lift", cmd_lift, "rebuild a tiling from its image", region=False)
    p.add_argument("--image", required=True, help="image JSON file (or - for stdin)")
    p.add_argument("--square", type=int)
    p.add_argument("--missing-pos", type=int)
    p.add_argument("--variant", type=int, choices=(0, 1))
    p.add_argument("--monomer-side", action="append", metavar="K=lower|upper")
    p = command("dimers", cmd_dimers, "domino and monomer-dimer counts", region=False)
    p.add_argument("--board", type=int, required=True)
    p.add_argument("--missing-pos", type=int, help="remove diagonal cell P")
    p.add_argument("--profile", action="store_true", help="counts by number of diagonal monomers")
    p.add_argument("--monomers", action="store_true", help="count domino+monomer tilings")
    p.add_argument("--method", choices=("dp", "kasteleyn", "brute"), default="dp")
    command("propagate", cmd_propagate, "extend a tiling to side + 4", tiling=True)
    p = command("render", cmd_render, "draw a tiling", tiling=True)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p = command("verify", cmd_verify, "run the verification suite", region=False)
    p.add_argument("--suite", choices=("quick", "full"), default="quick")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    if getattr(args, "limit", None) is not None and args.limit < 0:
        print("error: --limit must be non-negative", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (Failure, ProjectionError, PropagationError, StructureError, GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
