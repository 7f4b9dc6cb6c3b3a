"""Minimum chain partitions of a DAG and moves between them.

Chains are read off a matching of the split graph: an out-copy of ``u``
is joined to an in-copy of ``v`` whenever ``v`` is reachable from ``u``.
A matching of size ``m`` leaves ``|V| - m`` chains, so a maximum matching
gives a minimum chain partition.  Moving from one maximum matching to
another exchanges arcs along alternating chains and cycles of their
symmetric difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..core import ProblemInstance
from ..errors import DomainError, InputError, SizeGuardError
from ..oracles import MembershipOracle
from .graphs import Arc, Digraph, transitive_closure
from .matching import iter_maximum_matchings, max_bipartite_matching

#: alternating-transformation search enumerates maximum matchings exhaustively
TRANSFORM_LIMIT = 12

CRITERIA = ("consecutive", "all-pairs")


@dataclass(frozen=True)
class ChainPartition:
    chains: Tuple[Tuple[int, ...], ...]
    matching: Tuple[Arc, ...]

    @property
    def chain_count(self) -> int:
        return len(self.chains)

    @classmethod
    def from_matching(cls, vertex_count: int, matching) -> "ChainPartition":
        nxt: Dict[int, int] = {}
        has_pred = set()
        for u, v in matching:
            if u in nxt or v in has_pred:
                raise InputError(f"arcs {sorted(matching)} are not a matching")
            nxt[u] = v
            has_pred.add(v)
        chains = []
        for s in range(vertex_count):
            if s in has_pred:
                continue
            chain = [s]
            while chain[-1] in nxt:
                chain.append(nxt[chain[-1]])
            chains.append(tuple(chain))
        if sum(len(c) for c in chains) != vertex_count:
            raise InputError("matching closes a cycle; it does not describe chains")
        return cls(tuple(sorted(chains)), tuple(sorted(matching)))

    @classmethod
    def from_chains(cls, vertex_count: int, chains: Sequence[Sequence[int]]) -> "ChainPartition":
        seen = []
        for c in chains:
            if not c:
                raise InputError("empty chain")
            seen.extend(c)
        if sorted(seen) != list(range(vertex_count)):
            raise InputError(f"chains {[list(c) for c in chains]} do not partition vertices 0..{vertex_count - 1}")
        matching = [(c[i], c[i + 1]) for c in chains for i in range(len(c) - 1)]
        return cls(tuple(sorted(tuple(c) for c in chains)), tuple(sorted(matching)))


def validate_chain_partition(d: Digraph, cp: ChainPartition, closure: Optional[Digraph] = None) -> None:
    """Raise InputError unless ``cp`` partitions V into closure-ordered chains."""
    closure = closure or transitive_closure(d)
    rebuilt = ChainPartition.from_chains(d.vertex_count, cp.chains)
    if rebuilt.matching != tuple(sorted(cp.matching)):
        raise InputError("chain partition's matching does not match its chains")
    for u, v in rebuilt.matching:
        if not closure.has_arc(u, v):
            raise InputError(f"consecutive chain vertices {u}, {v} are not comparable")


def min_chain_partition(d: Digraph) -> ChainPartition:
    closure = transitive_closure(d)
    n = d.vertex_count
    matching = max_bipartite_matching(n, n, closure.arcs)
    return ChainPartition.from_matching(n, matching)


def satisfies(d: Digraph, cp: ChainPartition, criterion: str = "consecutive") -> bool:
    """Whether ``cp`` avoids independent nodes of the original digraph.

    ``"consecutive"``: every consecutive chain pair is an original arc.
    ``"all-pairs"``: every ordered pair inside a chain is an original arc,
    i.e. no chain holds two vertices joined only through the closure.
    """
    if criterion == "consecutive":
        return all(d.has_arc(u, v) for u, v in cp.matching)
    if criterion == "all-pairs":
        return all(
            d.has_arc(c[i], c[j]) for c in cp.chains for i in range(len(c)) for j in range(i + 1, len(c))
        )
    raise InputError(f"criterion must be one of {CRITERIA}, got {criterion!r}")


@dataclass(frozen=True)
class AlternatingComponent:
    """One chain or cycle of the symmetric difference of two matchings.

    ``arcs`` lists the component in walk order, alternating between arcs
    leaving the old matching (``removed``) and arcs joining the new one.
    """

    kind: str
    arcs: Tuple[Tuple[str, Arc], ...]

    @property
    def removed(self):
        return tuple(sorted(a for tag, a in self.arcs if tag == "removed"))

    @property
    def added(self):
        return tuple(sorted(a for tag, a in self.arcs if tag == "added"))

    @property
    def vertices(self):
        return tuple(sorted({x for _, a in self.arcs for x in a}))


def alternating_components(old, new) -> Tuple[AlternatingComponent, ...]:
    old, new = set(old), set(new)
    tagged = [("removed", a) for a in sorted(old - new)] + [("added", a) for a in sorted(new - old)]
    incident: Dict[Tuple[str, int], List[int]] = {}
    for i, (_, (u, v)) in enumerate(tagged):
        incident.setdefault(("out", u), []).append(i)
        incident.setdefault(("in", v), []).append(i)
    used = [False] * len(tagged)

    def walk(i, node):
        seq = []
        while i is not None and not used[i]:
            used[i] = True
            seq.append(tagged[i])
            u, v = tagged[i][1]
            node = ("in", v) if node == ("out", u) else ("out", u)
            i = next((j for j in incident[node] if not used[j]), None)
        return seq

    comps = []
    # chains start at split-graph nodes touched by only one exchanged arc
    ends = sorted(node for node, arcs in incident.items() if len(arcs) == 1)
    for node in ends:
        i = incident[node][0]
        if not used[i]:
            comps.append(AlternatingComponent("chain", tuple(walk(i, node))))
    for i in range(len(tagged)):
        if not used[i]:
            u, _ = tagged[i][1]
            comps.append(AlternatingComponent("cycle", tuple(walk(i, ("out", u)))))
    return tuple(comps)


@dataclass(frozen=True)
class TransformSearch:
    result: Optional[ChainPartition]
    start: ChainPartition
    criterion: str
    visited: int
    accepted: int
    components: Tuple[AlternatingComponent, ...] = ()

    @property
    def found(self) -> bool:
        return self.result is not None


def alternating_transform_search(
    d: Digraph, start: ChainPartition, criterion: str = "consecutive"
) -> TransformSearch:
    """Look for an MCP free of independent nodes, reachable from ``start``.

    Every maximum matching of the closure split graph is enumerated; among
    those satisfying ``criterion`` the one closest to ``start`` (fewest
    exchanged arcs, then lexicographic) is returned together with the
    alternating chains and cycles that carry ``start`` into it.  ``start``
    need not be minimum: exchanging along alternating chains also repairs
    a non-maximum matching.  ``visited`` is the number of maximum
    matchings examined.  Exhaustive by design, limited to 12 vertices.
    """
    if criterion not in CRITERIA:
        raise InputError(f"criterion must be one of {CRITERIA}, got {criterion!r}")
    if d.vertex_count > TRANSFORM_LIMIT:
        raise SizeGuardError(
            f"alternating search refused: {d.vertex_count} vertices exceeds {TRANSFORM_LIMIT}"
        )
    closure = transitive_closure(d)
    validate_chain_partition(d, start, closure)
    n = d.vertex_count
    base = set(start.matching)
    best = None
    visited = accepted = 0
    for m in iter_maximum_matchings(n, n, closure.arcs):
        visited += 1
        cp = ChainPartition.from_matching(n, m)
        if not satisfies(d, cp, criterion):
            continue
        accepted += 1
        key = (len(base.symmetric_difference(m)), m)
        if best is None or key < best[0]:
            best = (key, cp)
    if best is None:
        return TransformSearch(None, start, criterion, visited, 0)
    result = best[1]
    return TransformSearch(
        result, start, criterion, visited, accepted,
        alternating_components(start.matching, result.matching),
    )


class ChainArcOracle(MembershipOracle):
    """Arcs of the closure; feasible iff no two chosen arcs share a tail or a head."""

    def __init__(self, arcs: Sequence[Arc]):
        super().__init__(len(arcs))
        self.arcs = tuple(arcs)

    def _feasible(self, pi):
        tails = [self.arcs[e][0] for e in pi]
        heads = [self.arcs[e][1] for e in pi]
        return len(set(tails)) == len(tails) and len(set(heads)) == len(heads)

    def _extends(self, pi, r):
        u, v = self.arcs[r]
        return all(self.arcs[e][0] != u and self.arcs[e][1] != v for e in pi)


def chain_partition_system(d: Digraph, label: str = "") -> ProblemInstance:
    """The chain-partition problem as an independence system.

    Elements are closure arcs in sorted order; a feasible set is a partial
    matching of the split graph; supports are its maximal matchings.
    """
    closure = transitive_closure(d)
    arcs = closure.arcs
    if len(arcs) < 2:
        raise DomainError(
            f"degenerate chain-partition system: closure has {len(arcs)} arcs, need at least 2"
        )
    return ProblemInstance(
        n=len(arcs),
        weights=(1,) * len(arcs),
        oracle=ChainArcOracle(arcs),
        label=label or f"chain-partition({d.vertex_count} vertices)",
        element_labels=tuple(f"{u}->{v}" for u, v in arcs),
    )
