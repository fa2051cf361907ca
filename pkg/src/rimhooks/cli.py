"""Command-line front end.

Every subcommand reads grids from stdin (or --in) and writes to stdout (or
--out). Exit status: 0 on success, 1 with a diagnostic on domain errors
(JSON shaped under --format json), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import classical, peeling, render
from .enumeration import (
    BudgetExceededError,
    DEFAULT_CEILING,
    enumerate_rpps,
    enumerate_tableaux,
)
from .geometry import Partition, content_key, format_cell, parse_cell, revlex_key
from .insertion import (
    InsertionFailure,
    Tableau,
    build,
    extract_min,
    extraction_path,
    factorize,
    try_insert,
)
from .rpp import Rpp
from .series import gansner_product, hook_product, rpp_series, trace_series
from .verify import SUITE_NAMES, VerifyConfig, run_suites


class DomainError(Exception):
    pass


def _read_input(args) -> str:
    if getattr(args, "infile", None):
        with open(args.infile, encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _write_output(args, text: str) -> None:
    if getattr(args, "outfile", None):
        with open(args.outfile, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _read_grid(args, cls):
    text = _read_input(args)
    if args.format == "json":
        value = cls.from_json(text)
    else:
        value = cls.from_text(text)
    shape = _shape_arg(args, required=False)
    if shape is not None and value.shape != shape:
        raise DomainError(f"input has shape {value.shape}, expected {shape}")
    return value


def _read_tableau(args) -> Tableau:
    if getattr(args, "perm", None):
        return classical.permutation_matrix(args.perm)
    return _read_grid(args, Tableau)


def _shape_arg(args, required: bool = True) -> Partition | None:
    text = getattr(args, "shape", None)
    if text is None:
        if required:
            raise DomainError("this subcommand requires --shape")
        return None
    return Partition.from_string(text)


def _emit_obj(args, obj, text: str) -> None:
    if args.format == "json":
        _write_output(args, json.dumps(obj))
    else:
        _write_output(args, text)


# ------------------------------------------------------------- subcommands


def cmd_info(args) -> int:
    shape = _shape_arg(args)
    if not shape:
        raise DomainError("the empty partition has no cells to describe")
    inner, outer = shape.corners()
    hooks = {format_cell(u): shape.hook_length(u) for u in shape.cells()}
    regions = {format_cell(u): shape.region(u).value for u in shape.cells()}
    revlex_rank = {
        format_cell(u): n
        for n, u in enumerate(sorted(shape.cells(), key=revlex_key), start=1)
    }
    content_rank = {
        format_cell(u): n
        for n, u in enumerate(sorted(shape.cells(), key=content_key), start=1)
    }
    obj = {
        "shape": list(shape.parts),
        "conjugate": list(shape.conjugate().parts),
        "hook_lengths": hooks,
        "inner_corners": [format_cell(u) for u in inner],
        "outer_corners": [format_cell(u) for u in outer],
        "regions": regions,
        "revlex_rank": revlex_rank,
        "content_rank": content_rank,
    }
    lines = [
        f"shape: {shape}",
        f"conjugate: {shape.conjugate()}",
        f"inner corners: {' '.join(format_cell(u) for u in inner) or '(none)'}",
        f"outer corners: {' '.join(format_cell(u) for u in outer)}",
        "hook lengths:",
        render.ascii_grid(_grid_of(shape, shape.hook_length)),
        "regions:",
        *(
            " ".join(shape.region((i, j)).value.ljust(5) for j in range(1, p + 1)).rstrip()
            for i, p in enumerate(shape.parts, start=1)
        ),
        "reverse lexicographic ranks:",
        render.ascii_grid(_grid_of(shape, lambda u: revlex_rank[format_cell(u)])),
        "content ranks:",
        render.ascii_grid(_grid_of(shape, lambda u: content_rank[format_cell(u)])),
    ]
    _emit_obj(args, obj, "\n".join(lines))
    return 0


def _grid_of(shape: Partition, fn) -> Tableau:
    return Tableau(shape, [[fn((i, j)) for j in range(1, p + 1)] for i, p in enumerate(shape.parts, start=1)])


def cmd_rimhooks(args) -> int:
    shape = _shape_arg(args)
    hooks = shape.rim_hooks()
    if args.svg:
        parts = [render.svg_shape(shape, hook.cells) for hook in hooks]
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write("\n".join(parts) + "\n")
    obj = [
        {
            "anchor": format_cell(h.anchor),
            "head": format_cell(h.head),
            "tail": format_cell(h.tail),
            "cells": [format_cell(u) for u in h.cells],
        }
        for h in hooks
    ]
    blocks = []
    for h in hooks:
        blocks.append(f"anchor {format_cell(h.anchor)} ({len(h)} cells)")
        blocks.append(render.ascii_shape(shape, h.cells))
    _emit_obj(args, obj, "\n".join(blocks))
    return 0


def cmd_validate(args) -> int:
    pi = _read_grid(args, Rpp)
    _emit_obj(
        args,
        {"valid": True, "shape": list(pi.shape.parts), "size": pi.size},
        f"valid reverse plane partition of shape {pi.shape}, size {pi.size}",
    )
    return 0


def cmd_trace(args) -> int:
    pi = _read_grid(args, Rpp)
    if args.k is not None:
        _emit_obj(args, {"k": args.k, "trace": pi.trace(args.k)}, str(pi.trace(args.k)))
        return 0
    traces = {str(k): pi.trace(k) for k in pi.diagonal_range()}
    text = "\n".join(f"{k}: {v}" for k, v in traces.items())
    _emit_obj(args, traces, text)
    return 0


def cmd_candidates(args) -> int:
    pi = _read_grid(args, Rpp)
    cells = sorted(pi.candidates(), key=content_key)
    _emit_obj(
        args,
        [format_cell(u) for u in cells],
        "\n".join(format_cell(u) for u in cells),
    )
    return 0


def cmd_insert(args) -> int:
    pi = _read_grid(args, Rpp)
    anchor = parse_cell(args.hook)
    if anchor not in pi.shape:
        raise DomainError(f"anchor {args.hook} lies outside the shape {pi.shape}")
    result = try_insert(pi.shape.rim_hook(anchor), pi)
    if isinstance(result, InsertionFailure):
        obj = {
            "inserted": False,
            "witness": format_cell(result.witness),
            "path": [format_cell(u) for u in result.path],
        }
        if args.format == "json":
            _write_output(args, json.dumps(obj))
        else:
            _write_output(args, str(result))
        return 1
    if args.format == "json":
        _write_output(args, json.dumps({"inserted": True, "result": result.to_json_obj()}))
    else:
        _write_output(args, result.to_text())
    return 0


def cmd_factorize(args) -> int:
    pi = _read_grid(args, Rpp)
    steps = []
    if args.paths:
        cur = pi
        while (step := extract_min(cur)) is not None:
            hook, reduced = step
            path = extraction_path(cur.min_candidate(), cur)
            steps.append((hook.anchor, path))
            cur = reduced
    fact = factorize(pi)
    tableau = fact.to_tableau()
    obj = {
        "anchors": [format_cell(u) for u in fact.anchors],
        "tableau": tableau.to_json_obj(),
    }
    lines = [fact.to_text(), "", tableau.to_text()] if fact.anchors else [tableau.to_text()]
    if steps:
        obj["paths"] = [
            {"anchor": format_cell(a), "path": [format_cell(u) for u in p]}
            for a, p in steps
        ]
        lines.append("")
        for a, p in steps:
            lines.append(f"extract {format_cell(a)} along {p}")
    _emit_obj(args, obj, "\n".join(lines))
    return 0


def cmd_build(args) -> int:
    t = _read_tableau(args)
    pi = build(t)
    _emit_obj(args, pi.to_json_obj(), pi.to_text())
    return 0


def cmd_xi(args) -> int:
    pi = _read_grid(args, Rpp)
    t = peeling.peel_tableau(pi)
    _emit_obj(args, t.to_json_obj(), t.to_text())
    return 0


def cmd_zeta(args) -> int:
    pi = _read_grid(args, Rpp)
    corner = parse_cell(args.corner)
    toggled = peeling.corner_toggle(pi, corner)
    _emit_obj(args, toggled.to_json_obj(), toggled.to_text())
    return 0


def cmd_hg(args) -> int:
    pi = _read_grid(args, Rpp)
    t = classical.hg(pi)
    _emit_obj(args, t.to_json_obj(), t.to_text())
    return 0


def cmd_hg_inv(args) -> int:
    t = _read_tableau(args)
    pi = classical.hg_inv(t)
    _emit_obj(args, pi.to_json_obj(), pi.to_text())
    return 0


def cmd_rsk(args) -> int:
    t = _read_tableau(args)
    pair = classical.rsk(t)
    obj = {"p": pair.p.to_json_obj(), "q": pair.q.to_json_obj()}
    _emit_obj(args, obj, f"{pair.p.to_text()}\n\n{pair.q.to_text()}")
    return 0


def cmd_rsk_inv(args) -> int:
    text = _read_input(args)
    if args.format == "json":
        obj = json.loads(text)
        pair = classical.SsytPair(Rpp.from_json_obj(obj["p"]), Rpp.from_json_obj(obj["q"]))
    else:
        first, _, second = text.partition("\n\n")
        if not second.strip():
            raise DomainError("expected two grids separated by a blank line")
        pair = classical.SsytPair(Rpp.from_text(first), Rpp.from_text(second))
    shape = _shape_arg(args, required=False)
    t = classical.rsk_inv(pair, shape)
    _emit_obj(args, t.to_json_obj(), t.to_text())
    return 0


def cmd_diag(args) -> int:
    pi = _read_grid(args, Rpp)
    mu = classical.diag_partition(pi, args.k)
    _emit_obj(args, list(mu.parts), str(mu))
    return 0


def cmd_gk(args) -> int:
    t = _read_tableau(args)
    value = classical.gk_chain_max(t, args.k, args.r, args.kind)
    _emit_obj(args, {"max": value}, str(value))
    return 0


def cmd_series(args) -> int:
    shape = _shape_arg(args)
    if args.which in ("hook-product", "rpp"):
        series = (
            hook_product(shape, args.degree)
            if args.which == "hook-product"
            else rpp_series(shape, args.degree)
        )
        _emit_obj(args, series.to_json_obj(), series.to_text())
    else:
        series = (
            gansner_product(shape, args.degree)
            if args.which == "trace-product"
            else trace_series(shape, args.degree)
        )
        _emit_obj(args, series.to_json_obj(), series.to_text())
    return 0


def cmd_verify(args) -> int:
    overrides = {}
    if args.shape:
        overrides["shapes"] = tuple(tuple(Partition.from_string(s).parts) for s in args.shape)
    if args.size_bound is not None:
        overrides["size_bound"] = args.size_bound
    if args.weight_bound is not None:
        overrides["weight_bound"] = args.weight_bound
    if args.path_size_bound is not None:
        overrides["path_size_bound"] = args.path_size_bound
    if args.degree is not None:
        overrides["stanley_degree"] = args.degree
    if args.trace_degree is not None:
        overrides["trace_degree"] = args.trace_degree
    if args.sample is not None:
        overrides["sample"] = args.sample
    overrides["seed"] = args.seed
    config = VerifyConfig(**overrides)
    results = run_suites([args.suite], config, jobs=args.jobs)
    ok = all(r.passed for r in results)
    if args.format == "json":
        obj = [
            {"suite": r.suite, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ]
        _write_output(args, json.dumps(obj))
    else:
        _write_output(args, "\n".join(r.line() for r in results))
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    shape = _shape_arg(args)
    if args.what == "rpps":
        stream = enumerate_rpps(shape, args.bound, ceiling=args.ceiling)
    else:
        stream = enumerate_tableaux(shape, args.bound, ceiling=args.ceiling)
    out = sys.stdout if not args.outfile else open(args.outfile, "w", encoding="utf-8")
    try:
        for item in stream:
            out.write(json.dumps(item.to_json_obj()) + "\n")
    finally:
        if args.outfile:
            out.close()
    return 0


def cmd_render(args) -> int:
    pi = _read_grid(args, Rpp)
    highlight = [parse_cell(tok) for tok in (args.highlight or [])]
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render.svg_grid(pi, highlight) + "\n")
    _write_output(args, render.ascii_rpp(pi, highlight))
    return 0


# --------------------------------------------------------------- parser


def _add_io(p, needs_shape=False, shape_required=False):
    p.add_argument("--in", dest="infile", metavar="PATH", help="read input from a file")
    p.add_argument("--out", dest="outfile", metavar="PATH", help="write output to a file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    if needs_shape:
        p.add_argument(
            "--shape",
            required=shape_required,
            help="comma separated parts, e.g. 4,3,1",
        )


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rimhooks",
        description="Rim-hook insertion, factorization, peeling, classical "
        "correspondences and exact series checks for reverse plane partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="hooks, corners, regions and both cell orders")
    _add_io(p, needs_shape=True, shape_required=True)
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("rimhooks", help="list the rim-hooks in increasing order")
    _add_io(p, needs_shape=True, shape_required=True)
    p.add_argument("--svg", metavar="PATH", help="also write an SVG rendering")
    p.set_defaults(fn=cmd_rimhooks)

    p = sub.add_parser("validate", help="check a grid and report shape and size")
    _add_io(p, needs_shape=True)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("trace", help="diagonal sums of a filling")
    _add_io(p, needs_shape=True)
    p.add_argument("--k", type=int, help="a single diagonal (default: all)")
    p.set_defaults(fn=cmd_trace)

    p = sub.add_parser("candidates", help="extraction starting cells, minimal first")
    _add_io(p, needs_shape=True)
    p.set_defaults(fn=cmd_candidates)

    p = sub.add_parser("insert", help="insert one rim-hook into a filling")
    _add_io(p, needs_shape=True)
    p.add_argument("--hook", required=True, metavar="(i,j)", help="anchor of the rim-hook")
    p.set_defaults(fn=cmd_insert)

    p = sub.add_parser("factorize", help="lexicographic factorization of a filling")
    _add_io(p, needs_shape=True)
    p.add_argument("--paths", action="store_true", help="also emit the extraction paths")
    p.set_defaults(fn=cmd_factorize)

    p = sub.add_parser("build", help="insert a whole multiset of rim-hooks into zero")
    _add_io(p, needs_shape=True)
    p.add_argument("--perm", metavar="WORD", help="permutation in one-line notation, e.g. 3,1,2")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("xi", help="corner-peeling tableau of a filling")
    _add_io(p, needs_shape=True)
    p.set_defaults(fn=cmd_xi)

    p = sub.add_parser("zeta", help="toggle one outer corner away")
    _add_io(p, needs_shape=True)
    p.add_argument("--corner", required=True, metavar="(i,j)")
    p.set_defaults(fn=cmd_zeta)

    p = sub.add_parser("hg", help="Hillman-Grassl image of a filling")
    _add_io(p, needs_shape=True)
    p.set_defaults(fn=cmd_hg)

    p = sub.add_parser("hg-inv", help="inverse Hillman-Grassl of a tableau")
    _add_io(p, needs_shape=True)
    p.add_argument("--perm", metavar="WORD", help="permutation in one-line notation, e.g. 3,1,2")
    p.set_defaults(fn=cmd_hg_inv)

    p = sub.add_parser("rsk", help="row insertion of a count matrix")
    _add_io(p, needs_shape=True)
    p.add_argument("--perm", metavar="WORD", help="permutation in one-line notation, e.g. 3,1,2")
    p.set_defaults(fn=cmd_rsk)

    p = sub.add_parser("rsk-inv", help="inverse row insertion of a tableau pair")
    _add_io(p, needs_shape=True)
    p.set_defaults(fn=cmd_rsk_inv)

    p = sub.add_parser("diag", help="partition formed by one diagonal of a filling")
    _add_io(p, needs_shape=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_diag)

    p = sub.add_parser("gk", help="maximal total length of r chains in a rectangle")
    _add_io(p, needs_shape=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=("weak", "strict"), required=True)
    p.add_argument("--perm", metavar="WORD", help="permutation in one-line notation, e.g. 3,1,2")
    p.set_defaults(fn=cmd_gk)

    p = sub.add_parser("series", help="truncated size or trace series of a shape")
    _add_io(p, needs_shape=True, shape_required=True)
    p.add_argument(
        "which",
        choices=("hook-product", "rpp", "trace-product", "trace"),
        help="which series to print",
    )
    p.add_argument("--degree", type=int, default=10)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("verify", help="run a property suite")
    _add_io(p)
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--shape", action="append", help="override the verification shapes")
    p.add_argument("--size-bound", type=int, dest="size_bound")
    p.add_argument("--weight-bound", type=int, dest="weight_bound")
    p.add_argument("--path-size-bound", type=int, dest="path_size_bound")
    p.add_argument("--degree", type=int, help="univariate series truncation")
    p.add_argument("--trace-degree", type=int, dest="trace_degree")
    p.add_argument("--sample", type=int, help="randomly subsample heavy loops")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("enumerate", help="stream fillings or tableaux as JSON lines")
    _add_io(p, needs_shape=True, shape_required=True)
    p.add_argument("what", choices=("rpps", "tableaux"))
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("render", help="ASCII (and optional SVG) picture of a filling")
    _add_io(p, needs_shape=True)
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--highlight", nargs="*", metavar="(i,j)")
    p.set_defaults(fn=cmd_render)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, ValueError, BudgetExceededError) as exc:
        if getattr(args, "format", "text") == "json":
            print(json.dumps({"error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
