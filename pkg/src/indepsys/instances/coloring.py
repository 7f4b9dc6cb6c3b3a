from __future__ import annotations

from typing import Tuple

from ..core import ProblemInstance
from ..errors import InputError
from ..oracles import MembershipOracle
from .graphs import Graph


class ColoringOracle(MembershipOracle):
    """Elements are (vertex, color) pairs encoded as ``vertex * k + color``.

    A set is feasible when each vertex carries at most one color and no
    edge has both endpoints in the same color.  The extension predicate
    only looks at the new vertex and its neighbours.
    """

    def __init__(self, graph: Graph, k: int):
        super().__init__(graph.vertex_count * k)
        self.graph = graph
        self.k = k
        self._adj = graph.adjacency()

    def __eq__(self, other):
        return isinstance(other, ColoringOracle) and (self.graph, self.k) == (other.graph, other.k)

    def __hash__(self):
        return hash((self.graph, self.k))

    def decode(self, e: int) -> Tuple[int, int]:
        return divmod(e, self.k)

    def _feasible(self, pi):
        color = {}
        for e in pi:
            v, c = divmod(e, self.k)
            if v in color:
                return False
            color[v] = c
        return all(color.get(u) is None or color.get(u) != color.get(v) for u, v in self.graph.edges)

    def _extends(self, pi, r):
        v, c = divmod(r, self.k)
        nbrs = self._adj[v]
        for e in pi:
            w, d = divmod(e, self.k)
            if w == v or (d == c and w in nbrs):
                return False
        return True


def coloring_system(graph: Graph, k: int, label: str = "") -> ProblemInstance:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InputError(f"color count must be a positive integer, got {k!r}")
    oracle = ColoringOracle(graph, k)
    return ProblemInstance(
        n=oracle.n,
        weights=(1,) * oracle.n,
        oracle=oracle,
        label=label or f"{k}-coloring({graph.vertex_count} vertices, {len(graph.edges)} edges)",
        element_labels=tuple(f"v{v}:c{c}" for v in range(graph.vertex_count) for c in range(k)),
    )
