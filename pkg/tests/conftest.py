import random
from functools import lru_cache

import pytest
from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("repeatable", deadline=None, derandomize=True)
settings.load_profile("repeatable")

from homology_lab.complexes import CliqueComplex
from homology_lab.graph import WeightedGraph, make_graph

# -- shared complex cache ------------------------------------------------------


@lru_cache(maxsize=256)
def built(graph: WeightedGraph, max_dim: int) -> CliqueComplex:
    return CliqueComplex(graph, max_dim)


@pytest.fixture
def build():
    return built


# -- random graph generation ---------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float = 0.5, wmax: int = 0) -> WeightedGraph:
    vs = [f"v{i}" for i in range(n)]
    edges = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :] if rng.random() < p]
    return make_graph({v: rng.randint(0, wmax) for v in vs}, edges)


def seeded_graphs(count: int, n_max: int, p: float = 0.5, wmax: int = 0, seed: int = 1234):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(2, n_max), p, wmax) for _ in range(count)]


@st.composite
def graphs(draw, max_vertices: int = 8, weighted: bool = False):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    vs = [f"v{i}" for i in range(n)]
    pairs = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    if weighted:
        ws = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    else:
        ws = [0] * n
    return make_graph(dict(zip(vs, ws)), edges)


# -- acceptance summary reporting ----------------------------------------------

ACCEPTANCE_RESULTS: list[tuple[str, str, str]] = []


def record_acceptance(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS.append((criterion, "PASS" if ok else "FAIL", detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, status, detail in sorted(ACCEPTANCE_RESULTS):
        line = f"{criterion}: {status}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
