"""Hamiltonian cycles via minimum partitions into cycles and edges.

A partition here covers every vertex with vertex-disjoint parts, each
either a simple cycle of at least three vertices or a single edge.  A
graph is Hamiltonian exactly when such a partition can use one part that
is a cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Tuple

from ..errors import SizeGuardError
from .graphs import Graph

HAMILTONIAN_LIMIT = 8


@dataclass(frozen=True)
class CyclesEdgesPartition:
    parts: Tuple[Tuple[int, ...], ...]

    @property
    def part_count(self) -> int:
        return len(self.parts)

    @staticmethod
    def kind(part) -> str:
        return "edge" if len(part) == 2 else "cycle"

    @property
    def hamiltonian_cycle(self) -> Optional[Tuple[int, ...]]:
        if len(self.parts) == 1 and len(self.parts[0]) >= 3:
            return self.parts[0]
        return None


def _guard(graph, what):
    if graph.vertex_count > HAMILTONIAN_LIMIT:
        raise SizeGuardError(
            f"{what} refused: {graph.vertex_count} vertices exceeds {HAMILTONIAN_LIMIT}"
        )


def _cycles_through(v, free, adj):
    """Simple cycles through ``v`` inside ``free``, each listed once.

    A cycle starts at ``v`` and is kept only in the direction where its
    second vertex is smaller than its last.
    """
    path = [v]
    on = {v}

    def rec():
        u = path[-1]
        for w in sorted(adj[u]):
            if w == v and len(path) >= 3 and path[1] < path[-1]:
                yield tuple(path)
            elif w in free and w not in on:
                path.append(w)
                on.add(w)
                yield from rec()
                on.discard(w)
                path.pop()

    yield from rec()


def hamiltonian_partition_bruteforce(graph: Graph) -> Optional[CyclesEdgesPartition]:
    """A minimum cycles-and-edges partition, or None when none exists.

    Exhaustive branch and bound on the smallest uncovered vertex, trying
    longer cycles before shorter ones and edges last.  None is returned
    for graphs with an isolated vertex and for any other graph whose
    vertices cannot be covered this way (e.g. P3, stars).
    """
    _guard(graph, "cycles/edges partition search")
    n = graph.vertex_count
    if n == 0:
        return CyclesEdgesPartition(())
    adj = graph.adjacency()
    best: List = [None]

    def rec(free, parts):
        if not free:
            if best[0] is None or len(parts) < len(best[0]):
                best[0] = list(parts)
            return
        if best[0] is not None and len(parts) + 1 >= len(best[0]):
            return
        v = min(free)
        free = free - {v}
        options = sorted(_cycles_through(v, free, adj), key=lambda c: (-len(c), c))
        options += [(v, w) for w in sorted(adj[v]) if w in free]
        for part in options:
            parts.append(part)
            rec(free - set(part), parts)
            parts.pop()

    rec(frozenset(range(n)), [])
    if best[0] is None:
        return None
    return CyclesEdgesPartition(tuple(sorted(best[0])))


def is_hamiltonian(graph: Graph) -> bool:
    part = hamiltonian_partition_bruteforce(graph)
    return part is not None and part.hamiltonian_cycle is not None


def hamiltonian_cycle_by_permutation(graph: Graph) -> Optional[Tuple[int, ...]]:
    """Direct search: fix vertex 0 and try every ordering of the others."""
    _guard(graph, "permutation search")
    n = graph.vertex_count
    if n < 3:
        return None
    adj = graph.adjacency()
    for rest in permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        cycle = (0,) + rest
        if all(cycle[i + 1] in adj[cycle[i]] for i in range(n - 1)) and 0 in adj[cycle[-1]]:
            return cycle
    return None
