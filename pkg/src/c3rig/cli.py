"""Command-line surface: check | certify | realize | oracle | render.

Every command reads one graph document, prints a JSON report to standard
output (unless --no-json asks for a short text summary) and exits with
0 when the graph is isostatic, 1 when it is not, and 2 on any error.
Reports are deterministic for a fixed (input, flags, seed, version).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .certify import check_c3_isostatic, extract_sequence, replay_sequence
from .errors import C3RigError, NotIsostatic
from .geometry import (
    Placement,
    frame_from_partition,
    framework_from_frame,
    numeric_isostatic_check,
    pull_apart_fully,
    symmetric_generic_positions,
)
from .graphs import SymGraph, count_fixed, parse_graph, relabel_symgraph
from .pebble import brute_force_laman, laman_check, pebble_sparsity
from .render import render_svg
from .trees import build_tree_partition, relabel_partition, verify_tree_partition


def _dump(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def _emit(report: dict, as_json: bool, summary: str) -> None:
    if as_json:
        print(_dump(report))
    else:
        print(summary)


def _base_report(command: str, data: bytes) -> dict:
    return {
        "command": command,
        "input_digest": hashlib.sha256(data).hexdigest(),
        "version": __version__,
    }


def _placement_json(sg: SymGraph, placement: Placement) -> dict:
    exact = [
        {"x": x.as_json_dict(), "y": y.as_json_dict()} for x, y in placement.positions
    ]
    return {
        "exact": exact,
        "float_view": {
            "note": "non-authoritative",
            "positions": [[x, y] for x, y in placement.float_positions()],
        },
    }


def _sparsity_json(report) -> dict:
    return {
        "is_sparse": report.is_sparse,
        "is_tight": report.is_tight,
        "edge_count": report.edge_count,
        "target": report.target,
        "witness": list(report.witness) if report.witness is not None else None,
    }


def _verdict_json(verdict) -> dict:
    witness = verdict.witness
    if isinstance(witness, tuple):
        witness = list(witness)
    return {
        "isostatic": verdict.isostatic,
        "reasons": list(verdict.reasons),
        "witness": witness,
    }


def cmd_check(args) -> int:
    data = Path(args.file).read_bytes()
    sg = parse_graph(data.decode("utf-8"))
    report = _base_report("check", data)
    sparsity = pebble_sparsity(sg.graph)
    report["n"] = sg.graph.n
    report["m"] = sg.graph.m
    report["sparsity"] = _sparsity_json(sparsity)
    if sg.action is not None:
        fixed = count_fixed(sg)
        verdict = check_c3_isostatic(sg)
        report["fixed_counts"] = {"j": fixed.j, "b": fixed.b}
        report["c3_verdict"] = _verdict_json(verdict)
        isostatic = verdict.isostatic
    else:
        isostatic = sparsity.is_tight
    _emit(report, args.json, f"isostatic: {isostatic}")
    return 0 if isostatic else 1


def cmd_certify(args) -> int:
    data = Path(args.file).read_bytes()
    sg = parse_graph(data.decode("utf-8"))
    report = _base_report("certify", data)
    verdict = check_c3_isostatic(sg)
    report["c3_verdict"] = _verdict_json(verdict)
    if not verdict.isostatic:
        _emit(report, args.json, f"not isostatic: {', '.join(verdict.reasons)}")
        return 1
    seq = extract_sequence(sg)
    replayed = replay_sequence(seq)
    round_trip = relabel_symgraph(replayed, seq.relabeling) == sg
    partition = relabel_partition(build_tree_partition(seq), seq.relabeling)
    checks = verify_tree_partition(sg, partition)
    report["sequence"] = seq.as_json_dict()
    report["partition"] = partition.as_json_dict()
    report["partition_checks"] = checks.as_json_dict()
    report["round_trip"] = round_trip
    _emit(
        report,
        args.json,
        f"certified: {len(seq.moves)} moves, partition ok: {checks.ok}",
    )
    if not (round_trip and checks.ok):
        return 2
    return 0


def _realize(sg: SymGraph, method: str, seed: int) -> tuple[Placement, dict]:
    extra: dict = {}
    if method == "generic":
        placement = symmetric_generic_positions(sg, seed)
    else:
        seq = extract_sequence(sg)
        partition = relabel_partition(build_tree_partition(seq), seq.relabeling)
        frame = frame_from_partition(sg, partition)
        frame, rounds = pull_apart_fully(sg, partition, frame)
        placement = framework_from_frame(sg, frame)
        extra["pull_apart_rounds"] = rounds
    return placement, extra


def cmd_realize(args) -> int:
    data = Path(args.file).read_bytes()
    sg = parse_graph(data.decode("utf-8"))
    report = _base_report("realize", data)
    placement, extra = _realize(sg, args.method, args.seed)
    rank = numeric_isostatic_check(sg, placement)
    report["method"] = args.method
    report["seed"] = args.seed
    report["placement"] = _placement_json(sg, placement)
    report["rank_verdict"] = rank.as_json_dict()
    report.update(extra)
    _emit(report, args.json, f"rank {rank.rank}/{rank.target}, isostatic: {rank.isostatic}")
    return 0 if rank.isostatic else 1


def cmd_oracle(args) -> int:
    data = Path(args.file).read_bytes()
    sg = parse_graph(data.decode("utf-8"))
    report = _base_report("oracle", data)
    brute = brute_force_laman(sg.graph)
    pebble = laman_check(sg.graph)
    report["brute_force"] = brute
    report["pebble"] = pebble
    report["agree"] = brute == pebble
    _emit(report, args.json, f"brute={brute} pebble={pebble} agree={brute == pebble}")
    return 0 if brute == pebble else 2


def cmd_render(args) -> int:
    data = Path(args.file).read_bytes()
    sg = parse_graph(data.decode("utf-8"))
    report = _base_report("render", data)
    seq = extract_sequence(sg)
    placement, _ = _realize(sg, "generic", args.seed)
    partition = relabel_partition(build_tree_partition(seq), seq.relabeling)
    svg = render_svg(sg, placement, partition)
    Path(args.out).write_text(svg, encoding="utf-8")
    report["out"] = args.out
    report["seed"] = args.seed
    report["joints"] = sg.graph.n
    report["bars"] = sg.graph.m
    _emit(report, args.json, f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c3rig",
        description="Decide and certify 3-fold-symmetric generic isostaticity.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="graph document (JSON)")
        p.add_argument(
            "--json",
            action=argparse.BooleanOptionalAction,
            default=True,
            help="emit a JSON report (default) or a one-line summary",
        )

    p = sub.add_parser("check", help="count conditions and fixed-vertex test")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certify", help="construction sequence and tree partition")
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("realize", help="exact symmetric placement with rank check")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=("generic", "frame"), default="generic")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("oracle", help="brute-force count check against the pebble game")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="draw the realized framework as SVG")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotIsostatic as exc:
        print(_dump({"command": args.command, "error": type(exc).__name__, "message": str(exc)}))
        return 1
    except (C3RigError, OSError, ZeroDivisionError) as exc:
        print(_dump({"command": args.command, "error": type(exc).__name__, "message": str(exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main(argv=None))
