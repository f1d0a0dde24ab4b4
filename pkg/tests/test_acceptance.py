"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed inline (``-s``) and in
the terminal summary, then asserts.
"""

import itertools
import time
from fractions import Fraction

import pytest

from selsub.audit import check_solution, check_trace, harmonic
from selsub.blocks import decompose_blocks
from selsub.corpus import run_corpus
from selsub.exact import enumerate_oracle, exact_dominating_set, exact_mss
from selsub.generators import random_chords, random_colored_graph, random_udg
from selsub.geometry import max_independent_in_ball
from selsub.graph import connected_components
from selsub.greedy import greedy_mss
from selsub.ptas import PtasConfig, d_bound, ptas_mss
from selsub.reductions import reduce_circle, reduce_ds_general, reduce_ds_udg
from selsub.validator import covers_boundary, is_selective_subset

from conftest import brute_domination

EPSILONS = (Fraction(1, 5), Fraction(1, 2))
TOPOLOGIES = ("gnp", "tree", "path", "cycle", "udg")


def mixed_graph(i):
    return random_colored_graph(4 + i % 9, seed=i, colors=1 + i % 4,
                                topology=TOPOLOGIES[i % 5], p=0.2 + 0.1 * (i % 3))


def udg_instance(i):
    return random_udg(6 + i % 9, 3.0 + (i % 5) * 0.75, seed=i, colors=2 + i % 2)


class Run:
    def __init__(self, inst, mode):
        self.inst = inst
        self.graph = inst.graph
        self.blocks = decompose_blocks(self.graph)
        self.exact = exact_mss(self.graph, blocks=self.blocks)
        self.ptas = {eps: ptas_mss(self.graph, PtasConfig(eps, mode=mode)) for eps in EPSILONS}


@pytest.fixture(scope="module")
def udg_runs():
    return [Run(udg_instance(i), "udg") for i in range(200)]


@pytest.fixture(scope="module")
def mixed_runs():
    return [Run(mixed_graph(i), "general") for i in range(200)]


def _all_runs(udg_runs, mixed_runs):
    return list(udg_runs) + list(mixed_runs)


def test_criterion_01_oracle_equivalence(mixed_runs, record_criterion):
    t0 = time.perf_counter()
    mismatches = [r.inst.name for r in mixed_runs if r.exact.size != enumerate_oracle(r.graph).size]

    checked, subsets, disagreements, i = 0, 0, 0, 0
    while checked < 30:
        g = random_colored_graph(10 + i % 5, seed=10_000 + i, colors=2 + i % 3,
                                 topology=("gnp", "udg", "cycle")[i % 3]).graph
        i += 1
        blocks = decompose_blocks(g)
        pool = sorted(set().union(*(b.b3 for b in blocks)))
        mono = any(len({g.colors[x] for x in c}) == 1 for c in connected_components(g))
        if mono or not 8 <= len(pool) <= 14:
            continue
        checked += 1
        for k in range(len(pool) + 1):
            for combo in itertools.combinations(pool, k):
                subsets += 1
                if covers_boundary(g, blocks, combo) != is_selective_subset(g, combo).valid:
                    disagreements += 1
    elapsed = time.perf_counter() - t0
    ok = not mismatches and disagreements == 0 and elapsed < 300
    record_criterion(
        "1 oracle equivalence", ok,
        f"{len(mixed_runs) - len(mismatches)}/{len(mixed_runs)} exact=oracle; "
        f"{subsets} subsets on {checked} instances, {disagreements} disagreements; {elapsed:.1f}s")
    assert ok


def test_criterion_02_boundary_invariants(udg_runs, mixed_runs, record_criterion):
    violations, solutions = [], 0
    for r in _all_runs(udg_runs, mixed_runs):
        for res in [r.exact] + [p for p, _ in r.ptas.values()]:
            solutions += 1
            violations += [f"{r.inst.name}: {m}" for m in check_solution(r.graph, r.blocks, res)]
    record_criterion("2 boundary invariants", not violations,
                     f"{solutions} solutions, {len(violations)} violations")
    assert not violations, violations[:5]


def test_criterion_03_ptas_ratio(udg_runs, record_criterion):
    bad_ratio, bad_record, records, worst = [], 0, 0, Fraction(1)
    for r in udg_runs:
        for eps, (res, trace) in r.ptas.items():
            if res.size > (1 + eps) * r.exact.size:
                bad_ratio.append((r.inst.name, str(eps), res.size, r.exact.size))
            worst = max(worst, Fraction(res.size, r.exact.size))
            for rec in trace.records:
                records += 1
                if len(rec.local_solution) > (1 + eps) * len(rec.d_solution):
                    bad_record += 1
    ok = not bad_ratio and bad_record == 0
    record_criterion("3 ptas ratio", ok,
                     f"{len(udg_runs) * len(EPSILONS)} runs, {len(bad_ratio)} over (1+eps); "
                     f"worst ratio {float(worst):.3f}; {records} records, {bad_record} over delta")
    assert ok, bad_ratio[:5]


def test_criterion_04_lower_bound(udg_runs, mixed_runs, record_criterion):
    bad = []
    for r in _all_runs(udg_runs, mixed_runs):
        mono = sum(1 for b in r.blocks if not b.b1)
        for eps, (_, trace) in r.ptas.items():
            lower = sum(len(rec.d_solution) for rec in trace.records) + mono
            if lower > r.exact.size:
                bad.append((r.inst.name, str(eps), lower, r.exact.size))
    record_criterion("4 lower bound", not bad, f"{len(bad)} violations over {2 * 400} traces")
    assert not bad, bad[:5]


def test_criterion_05_two_distance_and_partition(udg_runs, mixed_runs, record_criterion):
    bad = []
    for r in _all_runs(udg_runs, mixed_runs):
        for eps, (res, trace) in r.ptas.items():
            msgs = check_trace(r.graph, r.blocks, trace, 1 + eps, None)
            if not is_selective_subset(r.graph, res.chosen).valid:
                msgs.append("invalid output")
            bad += [f"{r.inst.name} eps={eps}: {m}" for m in msgs]
    record_criterion("5 two-distance and partition", not bad, f"{len(bad)} violations over 800 traces")
    assert not bad, bad[:5]


def _connected(make, start, count):
    out, seed = [], start
    while len(out) < count:
        inst = make(seed)
        seed += 1
        if len(connected_components(inst.graph)) == 1:
            out.append(inst)
    return out


def test_criterion_06_reduction_identities(record_criterion):
    misses = []
    graphs = _connected(lambda s: random_colored_graph(3 + s % 8, s, colors=1,
                                                       topology=("gnp", "tree", "cycle")[s % 3], p=0.35),
                        20_000, 50)
    for inst in graphs:
        gamma = len(exact_dominating_set(inst.graph))
        assert gamma == brute_domination(inst.graph)
        for a in (0, 1, 2):
            got = exact_mss(reduce_ds_general(inst, a).graph).size
            if got != gamma + 1 + a:
                misses.append(("ds2mss", inst.name, a, got, gamma))

    udgs = _connected(lambda s: random_udg(2 + s % 7, 1.0 + (2 + s % 7) * 0.3, s, colors=1), 30_000, 30)
    for inst in udgs:
        n = inst.graph.n
        gamma = len(exact_dominating_set(inst.graph))
        for m in (1, 2):
            out = reduce_ds_udg(inst, m).graph
            if out.n != n * m + n or out.c != n * m + 1 or exact_mss(out).size != n * m + gamma:
                misses.append(("udg2mss", inst.name, m))

    for s in range(30):
        inst = random_chords(1 + s % 10, 40_000 + s)
        n = inst.graph.n
        out = reduce_circle(inst).graph
        degree_ok = all(len(out.adjacency[n + i]) == 1 for i in range(n))
        gamma = len(exact_dominating_set(inst.graph))
        if not degree_ok or out.n != 2 * n or exact_mss(out).size != n + gamma:
            misses.append(("circle2mss", inst.name))
    record_criterion("6 reduction identities", not misses,
                     f"150 ds2mss + 60 udg2mss + 30 circle2mss checks, {len(misses)} misses")
    assert not misses, misses[:5]


def test_criterion_07_packing_bound(udg_runs, record_criterion):
    over, balls = [], 0
    for i in range(50):
        g = random_udg(14, 3.0 + (i % 4), seed=50_000 + i, colors=2).graph
        for v in range(g.n):
            for r in range(4):
                balls += 1
                size = max_independent_in_ball(g, range(g.n), v, r)
                if size > (2 * r + 1) ** 2:
                    over.append((i, v, r, size))
    traced = 0
    for run in udg_runs:
        for _, trace in run.ptas.values():
            for rec in trace.records:
                traced += 1
                if len(rec.local_solution) > (2 * (rec.r_bar + 2) + 1) ** 2:
                    over.append((run.inst.name, rec.seed))
    record_criterion("7 packing bound", not over,
                     f"{balls} balls and {traced} trace records, {len(over)} over the bound")
    assert not over, over[:5]


def test_criterion_08_radius_bound(udg_runs, record_criterion):
    bound = d_bound(Fraction(3, 2))
    observed = max(rec.r_bar for r in udg_runs for rec in r.ptas[Fraction(1, 2)][1].records)
    ladder = [d_bound(x) for x in (Fraction(11, 10), Fraction(3, 2), Fraction(2), Fraction(4))]
    ok = observed <= bound and ladder == sorted(ladder, reverse=True) and len(set(ladder)) == 4
    record_criterion("8 radius bound", ok,
                     f"max r_bar {observed} <= d_bound(1.5)={bound}; d_bound over 1.1,1.5,2,4 = {ladder}")
    assert ok


def test_criterion_09_greedy(udg_runs, mixed_runs, record_criterion):
    bad, worst = [], Fraction(0)
    for r in _all_runs(udg_runs, mixed_runs):
        res = greedy_mss(r.graph)
        if check_solution(r.graph, r.blocks, res):
            bad.append((r.inst.name, "invalid"))
        ratio = Fraction(res.size, r.exact.size)
        worst = max(worst, ratio / harmonic(res.stats["max_candidate"] + 1))
        if ratio > harmonic(res.stats["max_candidate"] + 1):
            bad.append((r.inst.name, res.size, r.exact.size))
    record_criterion("9 greedy sanity", not bad,
                     f"400 instances, {len(bad)} failures; max ratio/H(delta+1) {float(worst):.3f}")
    assert not bad, bad[:5]


def test_criterion_10_determinism(tmp_path, record_criterion):
    spec = {
        "methods": ["exact", "ptas", "greedy"],
        "epsilons": [0.2, 0.5],
        "instances": [
            {"generator": "udg", "n": [8, 11, 14], "seeds": 10, "colors": 2, "side": 3.5},
            {"generator": "udg", "n": [10, 13], "seeds": 10, "colors": 3, "side": 4.5, "label": "c3"},
            {"generator": "chords", "n": [6, 9], "seeds": 5},
            {"generator": "graph", "n": [10, 12], "seeds": 5, "topology": "gnp", "colors": 4},
        ],
    }
    first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    report = run_corpus(spec)
    first.write_bytes(report.results_lines().encode())
    second.write_bytes(run_corpus(spec).results_lines().encode())
    same = first.read_bytes() == second.read_bytes()
    ok = same and report.ok
    record_criterion("10 determinism", ok,
                     f"{len(report.rows)} rows, byte-identical={same}, audit failures={len(report.failures)}")
    assert ok, report.failures[:5]
