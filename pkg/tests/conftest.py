import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from selsub.graph import ColoredGraph

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")


@pytest.fixture
def record_criterion():
    def record(key: str, ok: bool, detail: str) -> None:
        ACCEPTANCE[key] = (ok, detail)
        print(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
    return record


def to_nx(graph: ColoredGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges())
    return g


def brute_valid(graph: ColoredGraph, chosen) -> bool:
    """Selective-subset test straight from the definition, on networkx distances."""
    chosen = set(chosen)
    dist = dict(nx.all_pairs_shortest_path_length(to_nx(graph)))
    for v in range(graph.n):
        color = graph.colors[v]
        pool = [u for u in range(graph.n) if u in chosen or graph.colors[u] != color]
        reach = [dist[v][u] for u in pool if u in dist[v]]
        if not reach:
            return False
        best = min(reach)
        if not any(graph.colors[u] == color for u in pool if dist[v].get(u) == best):
            return False
    return True


def brute_mss_size(graph: ColoredGraph) -> int:
    for k in range(graph.n + 1):
        for combo in itertools.combinations(range(graph.n), k):
            if brute_valid(graph, combo):
                return k
    raise AssertionError


def brute_domination(graph: ColoredGraph) -> int:
    closed = [set(graph.adjacency[v]) | {v} for v in range(graph.n)]
    for k in range(graph.n + 1):
        for combo in itertools.combinations(range(graph.n), k):
            hit = set().union(*(closed[v] for v in combo)) if combo else set()
            if len(hit) == graph.n:
                return k
    raise AssertionError


@st.composite
def colored_graphs(draw, min_n=1, max_n=10, max_colors=3):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())] if pairs else []
    raw = draw(st.lists(st.integers(0, max_colors - 1), min_size=n, max_size=n))
    relabel: dict[int, int] = {}
    colors = [relabel.setdefault(x, len(relabel)) for x in raw]
    return ColoredGraph.from_edges(n, edges, colors)


# Worked example: 22 vertices, colors blue=0, green=1, red=2, orange=3.
# label v_k is vertex k-1 here.
SAMPLE_COLORS = [0] + [1] * 8 + [2] * 6 + [3] * 7
SAMPLE_EDGES = [
    (2, 5), (5, 6), (6, 3), (6, 4), (4, 7),          # green block v2..v7
    (10, 12), (12, 13), (13, 11), (13, 14), (14, 15),  # red block v10..v15
    (16, 17), (16, 18), (17, 19), (18, 20), (20, 21), (21, 22),  # orange v16..v22
    (1, 2), (3, 10), (6, 17), (7, 11), (13, 8), (15, 17), (9, 16),  # cross-color
]


def sample_graph() -> ColoredGraph:
    return ColoredGraph.from_edges(22, [(u - 1, v - 1) for u, v in SAMPLE_EDGES], SAMPLE_COLORS)


def v(*labels: int) -> set[int]:
    """Labels v_k to vertex ids."""
    return {k - 1 for k in labels}
