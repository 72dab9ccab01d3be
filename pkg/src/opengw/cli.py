"""Command-line front end.

Exit codes: 0 success, 1 invariant or audit failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction
from typing import Sequence

from .contributions import ContributionTable, build_table, contribution, gf_series
from .exact import format_rational, parse_rational
from .lattice import all_strata, gluing_audit, lattice_graph
from .moduli import FrameError, FrameLoop, maslov_index
from .partitions import cell_summary, enumerate_partitions

CACHE_ENV = "OPENGW_CACHE"
CACHE_SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class CacheError(OSError):
    pass


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _pos(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonzero_rational(s: str) -> Fraction:
    try:
        v = parse_rational(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {s!r}")
    if v == 0:
        raise argparse.ArgumentTypeError("maslov factor must be nonzero")
    return v


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# cache ----------------------------------------------------------------------


def _cache_key(max_g: int, m: Fraction) -> str:
    return f"{max_g}|{format_rational(m)}"


def load_cache(path: str) -> dict:
    if not os.path.exists(path):
        return {"schema_version": CACHE_SCHEMA, "entries": {}}
    try:
        with open(path) as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        raise CacheError(f"cannot read cache {path}: {e}") from e
    if data.get("schema_version") != CACHE_SCHEMA:
        raise CacheError(f"unsupported cache schema in {path}")
    return data


def save_cache(path: str, data: dict) -> None:
    """Write-temp-then-rename so readers never see a partial file."""
    d = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=d, prefix=".opengw-cache-")
        with os.fdopen(fd, "w") as f:
            json.dump(data, f, sort_keys=True)
        os.replace(tmp, path)
    except OSError as e:
        raise CacheError(f"cannot write cache {path}: {e}") from e


def cached_table(max_g: int, m: Fraction, path: str | None) -> ContributionTable:
    if path is None:
        return build_table(max_g, m)
    data = load_cache(path)
    key = _cache_key(max_g, m)
    entry = data["entries"].get(key)
    if entry is not None:
        return ContributionTable.from_json(entry)
    table = build_table(max_g, m)
    data["entries"][key] = table.to_json()
    save_cache(path, data)
    return table


# subcommands ----------------------------------------------------------------


def cmd_contrib(args) -> int:
    c = contribution(args.genus, args.boundary, args.maslov_factor)
    obj = {
        "genus": args.genus,
        "boundary": args.boundary,
        "m": format_rational(args.maslov_factor),
        "contribution": format_rational(c),
    }
    _emit(obj, args.format, format_rational(c))
    return EXIT_OK


def cmd_series(args) -> int:
    path = args.cache if args.cache is not None else os.environ.get(CACHE_ENV)
    table = cached_table(args.max_genus, args.maslov_factor, path)
    gf = gf_series(args.max_genus)
    for g in range(args.max_genus + 1):
        if table.contrib[g] != gf[2 * g]:
            print(f"generating function mismatch at genus {g}", file=sys.stderr)
            return EXIT_FAIL
    if args.format == "json":
        print(json.dumps(table.to_json()["contrib"]))
    else:
        print("\n".join(format_rational(table.contrib[g]) for g in range(args.max_genus + 1)))
    return EXIT_OK


def cmd_partitions(args) -> int:
    parts = enumerate_partitions(args.genus, args.boundary)
    _emit([p.to_json() for p in parts], args.format, "\n".join(str(p) for p in parts))
    return EXIT_OK


def cmd_cells(args) -> int:
    cells = [cell_summary(p) for p in enumerate_partitions(args.genus, args.boundary)]
    lines = [
        f"{c.partition}  dim={c.dim} ob={c.ob_rank} glue={c.gluing_rank} obF={c.obF_rank}" for c in cells
    ]
    _emit([c.to_json() for c in cells], args.format, "\n".join(lines))
    return EXIT_OK


def cmd_audit(args) -> int:
    g, h = args.genus, args.boundary
    target = 3 * (2 * g + h - 1)
    graph = lattice_graph(g, h)
    lines = []
    cells = []
    for lam in graph.vertices:
        s = cell_summary(lam)
        cells.append(s.to_json())
        lines.append(f"cell {lam}: dim {s.dim} + glue {s.gluing_rank} = {s.dim + s.gluing_rank} (ob {s.ob_rank})")
        if s.obF_rank != s.dim:
            print(f"audit failed: cell {lam} has obF rank {s.obF_rank} != dim {s.dim}", file=sys.stderr)
            return EXIT_FAIL
    strata = sorted(all_strata(g, h), key=str)
    for c in strata:
        total, ok = gluing_audit(c)
        if not ok:
            print(f"audit failed: configuration {c} totals {total} != {target}", file=sys.stderr)
            return EXIT_FAIL
    lines.append(f"{len(strata)} configurations: every total = {target} = 3*g~")
    lines.append(f"lattice: {len(graph.vertices)} cells, {len(graph.edges)} edges, connected={graph.connected}")
    if not graph.connected:
        print("audit failed: lattice graph is disconnected", file=sys.stderr)
        return EXIT_FAIL
    obj = {
        "target": [g, h],
        "rank": target,
        "cells": cells,
        "configurations": len(strata),
        "edges": [list(e) for e in graph.edges],
        "connected": graph.connected,
        "ok": True,
    }
    _emit(obj, args.format, "\n".join(lines + ["ok"]))
    return EXIT_OK


def cmd_lattice(args) -> int:
    graph = lattice_graph(args.genus, args.boundary)
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
    else:
        print(graph.dumps())
    return EXIT_OK


def cmd_maslov(args) -> int:
    try:
        if args.loop == "-":
            raw = sys.stdin.read()
        else:
            with open(args.loop) as f:
                raw = f.read()
    except OSError as e:
        print(f"cannot read {args.loop}: {e}", file=sys.stderr)
        return EXIT_IO
    try:
        loop = FrameLoop.from_json(raw)
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as e:
        print(f"malformed frame loop: {e}", file=sys.stderr)
        return EXIT_USAGE
    mu = maslov_index(loop)
    _emit({"maslov": mu}, args.format, str(mu))
    return EXIT_OK


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="opengw",
        description="Degree-one disk cover contributions and moduli bookkeeping, in exact arithmetic.",
        allow_abbrev=False,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default=choices[0])

    def gh(sp):
        sp.add_argument("--genus", type=_nonneg, required=True)
        sp.add_argument("--boundary", type=_pos, required=True)

    def mflag(sp):
        sp.add_argument("--maslov-factor", type=_nonzero_rational, default=Fraction(-1),
                        help="half the normal Maslov index of the disk (default -1)")

    sp = sub.add_parser("contrib", help="contribution C(g,h)", allow_abbrev=False)
    gh(sp); mflag(sp); fmt(sp)
    sp.set_defaults(func=cmd_contrib)

    sp = sub.add_parser("series", help="C(g,1) for g <= max-genus", allow_abbrev=False)
    sp.add_argument("--max-genus", type=_nonneg, required=True)
    sp.add_argument("--cache", default=None, help=f"JSON cache file (else ${CACHE_ENV})")
    mflag(sp); fmt(sp)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("partitions", help="ghost partitions of (g,h)", allow_abbrev=False)
    gh(sp); fmt(sp)
    sp.set_defaults(func=cmd_partitions)

    sp = sub.add_parser("cells", help="dimension and rank summary per cell", allow_abbrev=False)
    gh(sp); fmt(sp)
    sp.set_defaults(func=cmd_cells)

    sp = sub.add_parser("audit", help="gluing audit over all strata", allow_abbrev=False)
    gh(sp); fmt(sp)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("lattice", help="degeneration graph of cells", allow_abbrev=False)
    gh(sp); fmt(sp, ("json", "dot"))
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("maslov", help="Maslov index of a sampled frame loop", allow_abbrev=False)
    sp.add_argument("--loop", required=True, help="JSON frame loop file, or - for stdin")
    fmt(sp)
    sp.set_defaults(func=cmd_maslov)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CacheError as e:
        print(str(e), file=sys.stderr)
        return EXIT_IO
    except FrameError as e:
        print(f"invalid frame loop: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (AssertionError, ArithmeticError) as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
