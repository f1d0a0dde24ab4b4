"""``selsub`` command line."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .blocks import decompose_blocks
from .corpus import run_corpus
from .errors import SelsubError
from .exact import DEFAULT_BUDGET, enumerate_oracle, exact_mss
from .generators import TOPOLOGIES, random_chords, random_colored_graph, random_udg
from .greedy import greedy_mss
from .instance import dump_instance, load_instance
from .ptas import PtasConfig, ptas_mss
from .reductions import reduce_circle, reduce_ds_general, reduce_ds_udg
from .validator import is_selective_subset


def _read(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return load_instance(text)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _parse_set(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from exc


def cmd_solve(args) -> int:
    inst = _read(args.instance)
    g = inst.graph
    trace = None
    if args.method == "exact":
        res = exact_mss(g, args.budget)
    elif args.method == "oracle":
        res = enumerate_oracle(g)
    elif args.method == "greedy":
        res = greedy_mss(g)
    else:
        cfg = PtasConfig(Fraction(args.epsilon), mode=args.mode, budget=args.budget, host=args.host)
        res, trace = ptas_mss(g, cfg)
    if args.trace:
        if trace is None:
            print("--trace only applies to --method ptas", file=sys.stderr)
            return 2
        Path(args.trace).write_text(json.dumps(trace.to_dict(), indent=1) + "\n", encoding="utf-8")
    if args.json:
        print(json.dumps(res.to_dict(), sort_keys=True))
        return 0
    print(f"method: {res.method}")
    print(f"size: {res.size}")
    print("set: " + ",".join(map(str, res.chosen)))
    print("block  chosen")
    for bid, part in sorted(res.per_block.items()):
        print(f"{bid:<6} {','.join(map(str, part))}")
    return 0


def cmd_validate(args) -> int:
    inst = _read(args.instance)
    verdict = is_selective_subset(inst.graph, args.set)
    if verdict.valid:
        print("valid")
        return 0
    print("invalid: " + verdict.witness.explain())
    return 1


def cmd_blocks(args) -> int:
    inst = _read(args.instance)
    print("id  color  size  b1  b2")
    for b in decompose_blocks(inst.graph):
        print(f"{b.id:<3} {b.color:<6} {len(b.vertices):<5} {len(b.b1):<3} {len(b.b2)}")
    return 0


def cmd_gen(args) -> int:
    if args.kind == "udg":
        inst = random_udg(args.n, args.side, args.seed, args.colors)
    elif args.kind == "chords":
        inst = random_chords(args.n, args.seed, args.colors)
    else:
        inst = random_colored_graph(args.n, args.seed, args.colors, args.topology, args.p)
    _write(dump_instance(inst), args.output)
    return 0


def cmd_reduce(args) -> int:
    inst = _read(args.input)
    if args.kind == "ds2mss":
        out = reduce_ds_general(inst, args.extra_apexes)
    elif args.kind == "udg2mss":
        out = reduce_ds_udg(inst, args.m)
    else:
        out = reduce_circle(inst)
    _write(dump_instance(out), args.output)
    return 0


def cmd_corpus(args) -> int:
    path = Path(args.spec)
    spec = json.loads(path.read_text(encoding="utf-8"))
    report = run_corpus(spec, threads=args.threads, base=path.parent)
    print(report.table())
    if args.results:
        Path(args.results).write_text(report.results_lines(), encoding="utf-8")
    for msg in report.failures:
        print("FAIL " + msg, file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="selsub", description="Minimum selective subsets on colored graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log warnings and progress")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve an instance")
    s.add_argument("instance")
    s.add_argument("--method", choices=("exact", "ptas", "greedy", "oracle"), default="exact")
    s.add_argument("--epsilon", default="0.2", help="approximation slack for ptas")
    s.add_argument("--mode", choices=("udg", "general"), default="udg")
    s.add_argument("--host", choices=("block", "active"), default="block",
                   help="graph the ptas grows balls in")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="branch-and-bound node budget")
    s.add_argument("--trace", help="write the ptas expansion trace as JSON")
    s.add_argument("--json", action="store_true", help="print the result as JSON")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("validate", help="check a candidate selective subset")
    s.add_argument("instance")
    s.add_argument("--set", type=_parse_set, required=True, help="comma separated vertices")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("blocks", help="list monochromatic blocks")
    s.add_argument("instance")
    s.set_defaults(func=cmd_blocks)

    s = sub.add_parser("gen", help="generate a random instance")
    s.add_argument("kind", choices=("udg", "chords", "graph"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--side", type=float, default=4.0)
    s.add_argument("--colors", type=int, default=2)
    s.add_argument("--topology", choices=TOPOLOGIES, default="gnp")
    s.add_argument("--p", type=float, default=0.3)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("reduce", help="build a selective-subset instance from a dominating-set one")
    s.add_argument("kind", choices=("ds2mss", "udg2mss", "circle2mss"))
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.add_argument("--m", type=int, default=1, help="copies per disk for udg2mss")
    s.add_argument("--extra-apexes", type=int, default=0, help="extra apexes for ds2mss")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("corpus", help="run and audit a corpus description")
    s.add_argument("spec")
    s.add_argument("--results", help="write line-delimited JSON results here")
    s.add_argument("--threads", type=int, default=1, help="worker processes")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (SelsubError, OSError, ValueError) as exc:
        print(f"selsub: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
