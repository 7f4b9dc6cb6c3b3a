"""Maximum-cardinality bipartite matching (Hopcroft-Karp) and exhaustive
enumeration of all maximum matchings."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, List, Tuple

from ..errors import InputError

Pair = Tuple[int, int]
INF = float("inf")


def _adjacency(left, right, edges):
    adj = [[] for _ in range(left)]
    seen = set()
    for u, v in edges:
        if not (0 <= u < left and 0 <= v < right):
            raise InputError(f"edge ({u}, {v}) outside {left} x {right}")
        if (u, v) not in seen:
            seen.add((u, v))
            adj[u].append(v)
    for row in adj:
        row.sort()
    return adj


def max_bipartite_matching(left: int, right: int, edges: Iterable[Pair]) -> Tuple[Pair, ...]:
    """A maximum matching as sorted ``(left, right)`` pairs.

    Phases of BFS layering followed by DFS along shortest augmenting
    paths.  Neighbour lists are sorted, so the result is deterministic.
    """
    adj = _adjacency(left, right, edges)
    match_l = [-1] * left
    match_r = [-1] * right
    dist = [INF] * left

    def bfs():
        q = deque()
        for u in range(left):
            if match_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(u):
        for v in adj[u]:
            w = match_r[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in range(left):
            if match_l[u] == -1:
                dfs(u)
    return tuple((u, match_l[u]) for u in range(left) if match_l[u] != -1)


def iter_maximum_matchings(left: int, right: int, edges: Iterable[Pair]) -> Iterator[Tuple[Pair, ...]]:
    """Every maximum matching, in lexicographic order of the pair tuples.

    Backtracks over left vertices in id order, each matched to a free
    right vertex or left unmatched, pruning branches that can no longer
    reach the maximum size.
    """
    adj = _adjacency(left, right, edges)
    target = len(max_bipartite_matching(left, right, edges))
    used = [False] * right
    chosen: List[Pair] = []
    # suffix count of left vertices that have any edge at all
    live = [0] * (left + 1)
    for u in range(left - 1, -1, -1):
        live[u] = live[u + 1] + (1 if adj[u] else 0)

    def rec(u):
        if len(chosen) + live[u] < target:
            return
        if u == left:
            yield tuple(chosen)
            return
        for v in adj[u]:
            if not used[v]:
                used[v] = True
                chosen.append((u, v))
                yield from rec(u + 1)
                chosen.pop()
                used[v] = False
        yield from rec(u + 1)

    yield from rec(0)
