"""Concrete problem families: coloring, chain partitions, Hamiltonian cycles."""

import json
from importlib import resources

from .chains import (
    AlternatingComponent,
    ChainArcOracle,
    ChainPartition,
    TransformSearch,
    alternating_components,
    alternating_transform_search,
    chain_partition_system,
    min_chain_partition,
    satisfies,
    validate_chain_partition,
)
from .coloring import ColoringOracle, coloring_system
from .graphs import (
    Digraph,
    Graph,
    complete_graph,
    cycle_graph,
    find_cycle,
    path_graph,
    star_graph,
    topological_order,
    transitive_closure,
)
from .hamiltonian import (
    CyclesEdgesPartition,
    hamiltonian_cycle_by_permutation,
    hamiltonian_partition_bruteforce,
    is_hamiltonian,
)
from .matching import iter_maximum_matchings, max_bipartite_matching


def _data(name):
    return json.loads(resources.files("indepsys").joinpath("data", name).read_text(encoding="utf-8"))


def chain_example_digraph() -> Digraph:
    """The 10-node digraph of the worked chain-partition example (x1..x10 as 0..9)."""
    doc = _data("chain_example_digraph.json")
    return Digraph(doc["vertices"], tuple(tuple(a) for a in doc["arcs"]))


def chain_example_transform() -> dict:
    """Reference partitions drawn alongside the digraph, before and after the
    alternating cycle, as :class:`ChainPartition` objects plus raw metadata."""
    doc = _data("chain_example_transform.json")
    n = len(doc["vertex_names"])
    doc["start_partition"] = ChainPartition.from_chains(n, doc["start_partition"])
    doc["transformed_partition"] = ChainPartition.from_chains(n, doc["transformed_partition"])
    return doc
