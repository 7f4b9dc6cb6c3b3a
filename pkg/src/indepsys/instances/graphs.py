from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..errors import CyclicDigraphError, InputError

Arc = Tuple[int, int]


def _check_pairs(count, pairs, what, directed):
    if isinstance(count, bool) or not isinstance(count, int) or count < 0:
        raise InputError(f"vertex count must be a nonnegative integer, got {count!r}")
    seen = set()
    out = []
    for i, pair in enumerate(pairs):
        if len(pair) != 2:
            raise InputError(f"{what} #{i} must have exactly two endpoints")
        u, v = pair
        for x in (u, v):
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < count:
                raise InputError(f"{what} #{i} {list(pair)}: vertex {x!r} outside [0, {count})")
        if u == v:
            raise InputError(f"{what} #{i} {list(pair)} is a self-loop")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"{what} #{i} {list(pair)} is a duplicate")
        seen.add(key)
        out.append(key)
    return tuple(sorted(out))


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    arcs: Tuple[Arc, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arcs", _check_pairs(self.vertex_count, self.arcs, "arc", True))

    def successors(self) -> List[List[int]]:
        out = [[] for _ in range(self.vertex_count)]
        for u, v in self.arcs:
            out[u].append(v)
        return out

    def has_arc(self, u, v) -> bool:
        return (u, v) in self._arcset

    @property
    def _arcset(self):
        cache = self.__dict__.get("_arcset_cache")
        if cache is None:
            cache = frozenset(self.arcs)
            object.__setattr__(self, "_arcset_cache", cache)
        return cache


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are stored as ``(min, max)`` pairs."""

    vertex_count: int
    edges: Tuple[Arc, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", _check_pairs(self.vertex_count, self.edges, "edge", False))

    def adjacency(self) -> List[set]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def find_cycle(d: Digraph):
    """Some directed cycle of ``d`` as a vertex list, or None."""
    succ = d.successors()
    color = [0] * d.vertex_count
    parent: Dict[int, int] = {}
    for root in range(d.vertex_count):
        if color[root]:
            continue
        stack = [(root, iter(succ[root]))]
        color[root] = 1
        while stack:
            u, it = stack[-1]
            v = next(it, None)
            if v is None:
                color[u] = 2
                stack.pop()
            elif color[v] == 0:
                color[v] = 1
                parent[v] = u
                stack.append((v, iter(succ[v])))
            elif color[v] == 1:
                cycle = [u]
                while cycle[-1] != v:
                    cycle.append(parent[cycle[-1]])
                return cycle[::-1]
    return None


def topological_order(d: Digraph) -> List[int]:
    """Kahn's order with smallest-id-first ties; raises on a cycle."""
    indeg = [0] * d.vertex_count
    succ = d.successors()
    for _, v in d.arcs:
        indeg[v] += 1
    ready = [v for v in range(d.vertex_count) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    if len(order) != d.vertex_count:
        raise CyclicDigraphError(find_cycle(d))
    return order


def transitive_closure(d: Digraph) -> Digraph:
    """Arc (u, v) for every v reachable from u by a nonempty path."""
    order = topological_order(d)
    succ = d.successors()
    reach = [0] * d.vertex_count
    for u in reversed(order):
        bits = 0
        for v in succ[u]:
            bits |= (1 << v) | reach[v]
        reach[u] = bits
    arcs = [(u, v) for u in range(d.vertex_count) for v in range(d.vertex_count) if reach[u] >> v & 1]
    return Digraph(d.vertex_count, tuple(arcs))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))
