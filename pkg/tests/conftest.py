import random

import pytest

from indepsys import ExplicitOracle, FullListOracle, ProblemInstance
from indepsys.families import kn_matching_system, power_system, random_antichain
from indepsys.instances import Digraph, chain_partition_system, coloring_system
from indepsys.instances.graphs import Graph, cycle_graph, path_graph

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_e1():
    return ProblemInstance(3, (1, 2, 3), ExplicitOracle(3, [[0, 1], [2]]), label="E1")


@pytest.fixture
def e1():
    return make_e1()


def random_systems(count=200, max_n=10, seed=20240):
    """Seeded random downward-closed systems with 2 <= n <= max_n.

    Every fourth one uses the literal full-list oracle so both
    representations of Q get exercised.
    """
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = 2 + i % (max_n - 1)
        maximal = random_antichain(n, rng, count=rng.randint(1, 2 * n))
        weights = tuple(rng.randint(1, 9) for _ in range(n))
        oracle = FullListOracle.from_maximal(n, maximal) if i % 4 == 3 else ExplicitOracle(n, maximal)
        out.append(ProblemInstance(n, weights, oracle, label=f"random#{i}"))
    return out


def bundled_systems():
    """Named small instances from every shipped family (all n <= 12)."""
    triangle = cycle_graph(3)
    return [
        make_e1(),
        power_system(2),
        power_system(3),
        power_system(5),
        coloring_system(triangle, 2),
        coloring_system(path_graph(3), 2),
        coloring_system(Graph(1), 3),
        coloring_system(cycle_graph(4), 2),
        coloring_system(cycle_graph(4), 3),
        kn_matching_system(4),
        chain_partition_system(Digraph(3, ((0, 1), (1, 2)))),
        chain_partition_system(Digraph(3, ((0, 1), (0, 2)))),
        chain_partition_system(Digraph(4, ((0, 1), (1, 2), (0, 3), (3, 2)))),
    ]


@pytest.fixture(scope="session")
def suite_systems():
    return random_systems() + bundled_systems()
