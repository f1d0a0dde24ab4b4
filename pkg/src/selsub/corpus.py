"""Batch runs over generated instance corpora with invariant auditing.

A corpus description is a JSON object::

    {
      "methods": ["exact", "ptas", "greedy"],
      "epsilons": [0.2, 0.5],
      "budget": 100000000,
      "instances": [
        {"generator": "udg", "n": [8, 10], "seeds": 5, "side": 4.0, "colors": 2},
        {"generator": "chords", "n": [6], "seeds": [0, 1, 2]},
        {"generator": "graph", "topology": "gnp", "n": [9], "seeds": 3, "colors": 3, "p": 0.3},
        {"file": "some/instance.json"}
      ]
    }

``seeds`` is either a list or a count ``k`` meaning ``0..k-1``.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .audit import check_solution, check_trace, harmonic
from .blocks import decompose_blocks
from .errors import SelsubError
from .exact import DEFAULT_BUDGET, exact_mss
from .generators import random_chords, random_colored_graph, random_udg
from .geometry import PointSet
from .greedy import greedy_mss
from .instance import Instance, dump_instance, load_instance
from .ptas import PtasConfig, ptas_mss

METHODS = ("exact", "ptas", "greedy")
COLUMNS = ("instance", "n", "blocks", "epsilon", "exact", "ptas", "greedy", "ratio", "r_bar_max", "elapsed")


class CorpusError(SelsubError):
    pass


@dataclass
class CorpusReport:
    rows: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[str]:
        return [f"{r['instance']}: {msg}" for r in self.rows for msg in r["failures"]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def results_lines(self) -> str:
        """Line-delimited JSON records; timings are left out so reruns compare equal."""
        lines = []
        for row in self.rows:
            rec = {k: v for k, v in row.items() if k != "elapsed"}
            lines.append(json.dumps(rec, sort_keys=True))
        return "\n".join(lines) + ("\n" if lines else "")

    def table(self) -> str:
        cells = [[_fmt(r.get(c)) for c in COLUMNS] + ["ok" if not r["failures"] else "FAIL"] for r in self.rows]
        header = list(COLUMNS) + ["checks"]
        widths = [max(len(h), *(len(row[i]) for row in cells)) if cells else len(h) for i, h in enumerate(header)]
        out = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
        out += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
        return "\n".join(out)


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


def _seeds(spec) -> list[int]:
    return list(range(spec)) if isinstance(spec, int) else [int(s) for s in spec]


def expand_instances(spec: dict, base: Path | None = None) -> list[Instance]:
    """Materialize every instance named by a corpus description."""
    out = []
    for gi, group in enumerate(spec.get("instances", [])):
        label = group.get("label", f"g{gi}")
        if "file" in group:
            path = Path(group["file"])
            if base is not None and not path.is_absolute():
                path = base / path
            inst = load_instance(path.read_text())
            out.append(Instance(inst.graph, inst.geometry, f"{label}/{inst.name or path.stem}", inst.provenance))
            continue
        kind = group.get("generator")
        sizes = group["n"] if isinstance(group["n"], list) else [group["n"]]
        for n in sizes:
            for seed in _seeds(group.get("seeds", 1)):
                if kind == "udg":
                    inst = random_udg(n, group.get("side", 4.0), seed, group.get("colors", 2))
                elif kind == "chords":
                    inst = random_chords(n, seed, group.get("colors", 2))
                elif kind == "graph":
                    inst = random_colored_graph(n, seed, group.get("colors", 3),
                                                group.get("topology", "gnp"), group.get("p", 0.3))
                else:
                    raise CorpusError(f"unknown generator {kind!r} in group {label}")
                out.append(Instance(inst.graph, inst.geometry, f"{label}/{inst.name}", inst.provenance))
    names = [i.name for i in out]
    if len(set(names)) != len(names):
        raise CorpusError("corpus produces duplicate instance names; give groups distinct labels")
    return out


def run_instance(inst: Instance, methods, epsilons, budget: int) -> list[dict]:
    g = inst.graph
    try:
        t0 = time.perf_counter()
        blocks = decompose_blocks(g)
        common = []
        exact = exact_mss(g, budget, blocks) if "exact" in methods else None
        greedy = greedy_mss(g) if "greedy" in methods else None
        for res in (exact, greedy):
            if res is not None:
                common += check_solution(g, blocks, res)
        if exact is not None and greedy is not None:
            if greedy.size < exact.size:
                common.append("greedy beat the exact optimum")
            # an instance without boundary vertices has no candidates and H(0) = 0
            bound = max(harmonic(greedy.stats["max_candidate"]), 1) * exact.size
            if greedy.size > bound:
                common.append(f"greedy {greedy.size} above harmonic bound {float(bound):.3f}")
        base_elapsed = time.perf_counter() - t0
        rows = []
        eps_list = epsilons if "ptas" in methods else [None]
        for eps in eps_list:
            t1 = time.perf_counter()
            failures = list(common)
            ptas = trace = None
            if eps is not None:
                cfg = PtasConfig(Fraction(str(eps)), budget=budget)
                ptas, trace = ptas_mss(g, cfg)
                failures += check_solution(g, blocks, ptas)
                failures += check_trace(g, blocks, trace, cfg.delta, exact.size if exact else None,
                                        with_points=isinstance(inst.geometry, PointSet))
                if exact is not None and ptas.size > cfg.delta * exact.size:
                    failures.append(f"ptas {ptas.size} > (1+eps) * {exact.size}")
            rows.append({
                "instance": inst.name,
                "provenance": inst.provenance,
                "n": g.n,
                "blocks": len(blocks),
                "epsilon": None if eps is None else str(eps),
                "exact": exact.size if exact else None,
                "ptas": ptas.size if ptas else None,
                "greedy": greedy.size if greedy else None,
                "ratio": (f"{ptas.size / exact.size:.4f}" if ptas and exact and exact.size else None),
                "r_bar_max": max((r.r_bar for r in trace.records), default=0) if trace else None,
                "lower_bound": sum(len(r.d_solution) for r in trace.records) if trace else None,
                "elapsed": base_elapsed + time.perf_counter() - t1,
                "failures": failures,
            })
        return rows
    except SelsubError as exc:
        raise CorpusError(f"{inst.name} [{inst.provenance}]: {exc}") from exc


def _run_text(text: str, name: str, methods, epsilons, budget):
    inst = load_instance(text)
    inst = Instance(inst.graph, inst.geometry, name, inst.provenance)
    return run_instance(inst, methods, epsilons, budget)


def run_corpus(spec: dict, threads: int = 1, base: Path | None = None) -> CorpusReport:
    methods = tuple(spec.get("methods", METHODS))
    unknown = set(methods) - set(METHODS)
    if unknown:
        raise CorpusError(f"unknown methods {sorted(unknown)}")
    epsilons = spec.get("epsilons", [0.2])
    budget = int(spec.get("budget", DEFAULT_BUDGET))
    instances = expand_instances(spec, base)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_run_text, dump_instance(i), i.name, methods, epsilons, budget)
                       for i in instances]
            batches = [f.result() for f in futures]
    else:
        batches = [run_instance(i, methods, epsilons, budget) for i in instances]
    rows = [row for batch in batches for row in batch]
    rows.sort(key=lambda r: (r["instance"], r["epsilon"] or ""))
    return CorpusReport(rows)
