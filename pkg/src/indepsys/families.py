"""Named instance generators used by ``profile`` and the test suites."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Dict, List

from .core import ProblemInstance
from .errors import InputError
from .instances.coloring import coloring_system
from .instances.graphs import complete_graph, cycle_graph, path_graph
from .oracles import ExplicitOracle, MembershipOracle


def power_system(n: int) -> ProblemInstance:
    """Every subset feasible: a single support, the whole work set."""
    return ProblemInstance(n, (1,) * n, ExplicitOracle(n, [range(n)]), label=f"power({n})")


class MatchingOracle(MembershipOracle):
    """Elements are edges; a set is feasible iff no two edges share a vertex."""

    def __init__(self, edges):
        super().__init__(len(edges))
        self.edges = tuple(edges)

    def _feasible(self, pi):
        ends = [x for e in pi for x in self.edges[e]]
        return len(ends) == len(set(ends))

    def _extends(self, pi, r):
        a, b = self.edges[r]
        return all(a not in self.edges[e] and b not in self.edges[e] for e in pi)


def kn_matching_system(vertices: int) -> ProblemInstance:
    edges = complete_graph(vertices).edges
    return ProblemInstance(
        len(edges), (1,) * len(edges), MatchingOracle(edges),
        label=f"matchings(K{vertices})",
        element_labels=tuple(f"{u}-{v}" for u, v in edges),
    )


def random_antichain(n: int, rng: random.Random, count: int = None, density: float = None) -> List[List[int]]:
    """Draw random subsets of range(n) and keep the inclusion-maximal ones."""
    count = count if count is not None else rng.randint(1, max(1, n))
    density = density if density is not None else rng.uniform(0.2, 0.8)
    drawn = set()
    for _ in range(count):
        s = frozenset(e for e in range(n) if rng.random() < density)
        if s:
            drawn.add(s)
    if not drawn:
        drawn.add(frozenset({rng.randrange(n)}))
    maximal = [s for s in drawn if not any(s < t for t in drawn)]
    return sorted(sorted(s) for s in maximal)


def random_antichain_system(n: int, seed: int = 0) -> ProblemInstance:
    rng = random.Random(f"antichain/{n}/{seed}")
    weights = tuple(rng.randint(0, 9) + 1 for _ in range(n))
    oracle = ExplicitOracle(n, random_antichain(n, rng))
    return ProblemInstance(n, weights, oracle, label=f"random-antichain(n={n}, seed={seed})")


def family(name: str, seed: int = 0, colors: int = 2) -> Callable[[int], ProblemInstance]:
    """Size -> instance generator for one of the ``FAMILIES`` names.

    Sizes mean vertices for the graph families and elements otherwise.
    """
    if name == "power":
        return power_system
    if name == "coloring-path":
        return lambda v: coloring_system(path_graph(v), colors, label=f"{colors}-coloring(P{v})")
    if name == "coloring-cycle":
        return lambda v: coloring_system(cycle_graph(v), colors, label=f"{colors}-coloring(C{v})")
    if name == "kn-matching":
        return kn_matching_system
    if name == "random-antichain":
        return lambda n: random_antichain_system(n, seed)
    raise InputError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


FAMILIES = ("power", "coloring-path", "coloring-cycle", "kn-matching", "random-antichain")
