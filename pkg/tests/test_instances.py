import random

import pytest

from indepsys import CyclicDigraphError, DomainError, InputError, SizeGuardError, enumerate_support, frontier_run
from indepsys.instances import (
    ChainPartition,
    Digraph,
    Graph,
    alternating_components,
    alternating_transform_search,
    chain_partition_system,
    coloring_system,
    complete_graph,
    cycle_graph,
    chain_example_digraph,
    chain_example_transform,
    hamiltonian_cycle_by_permutation,
    hamiltonian_partition_bruteforce,
    is_hamiltonian,
    iter_maximum_matchings,
    max_bipartite_matching,
    min_chain_partition,
    path_graph,
    satisfies,
    star_graph,
    transitive_closure,
    validate_chain_partition,
)

from bruteforce import (
    all_maximum_matchings,
    max_matching_size,
    maximal_feasible,
    min_cycles_edges_parts,
    proper_colorings,
    reachability,
)

CHAIN3 = Digraph(3, ((0, 1), (1, 2)))
VEE = Digraph(3, ((0, 1), (0, 2)))
DIAMOND = Digraph(4, ((0, 1), (1, 2), (0, 3), (3, 2)))


def random_dag(rng, n, p):
    order = list(range(n))
    rng.shuffle(order)
    arcs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Digraph(n, tuple(arcs))


def random_graph(rng, n, p):
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p))


# -- closure and matching ---------------------------------------------------

def test_closure_examples():
    assert transitive_closure(CHAIN3).arcs == ((0, 1), (0, 2), (1, 2))
    assert transitive_closure(Digraph(4)).arcs == ()
    assert transitive_closure(VEE).arcs == VEE.arcs


def test_closure_rejects_cycle():
    with pytest.raises(CyclicDigraphError) as info:
        transitive_closure(Digraph(3, ((0, 1), (1, 2), (2, 0))))
    assert sorted(info.value.cycle) == [0, 1, 2]


def test_closure_matches_floyd_warshall():
    rng = random.Random(3)
    for _ in range(60):
        d = random_dag(rng, rng.randint(1, 9), rng.random())
        reach = reachability(d.vertex_count, d.arcs)
        expect = tuple((u, v) for u in range(d.vertex_count) for v in range(d.vertex_count) if reach[u][v])
        assert transitive_closure(d).arcs == expect


def test_digraph_validation():
    with pytest.raises(InputError):
        Digraph(2, ((0, 1), (0, 1)))
    with pytest.raises(InputError):
        Digraph(2, ((0, 0),))
    with pytest.raises(InputError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(InputError):
        Graph(2, ((0, 5),))


def test_matching_examples():
    assert len(max_bipartite_matching(1, 2, [(0, 0), (0, 1)])) == 1
    assert len(max_bipartite_matching(3, 3, [(0, 1), (0, 2), (1, 2)])) == 2
    assert max_bipartite_matching(2, 2, []) == ()


def test_matching_is_maximum_against_bruteforce():
    rng = random.Random(5)
    for _ in range(200):
        left, right = rng.randint(1, 6), rng.randint(1, 6)
        edges = [(u, v) for u in range(left) for v in range(right) if rng.random() < 0.4]
        m = max_bipartite_matching(left, right, edges)
        assert len({u for u, _ in m}) == len(m) == len({v for _, v in m})
        assert set(m) <= set(edges)
        assert len(m) == max_matching_size(left, edges)


def test_maximum_matching_enumeration_complete():
    rng = random.Random(6)
    for _ in range(60):
        n = rng.randint(1, 5)
        edges = [(u, v) for u in range(n) for v in range(n) if rng.random() < 0.5]
        got = list(iter_maximum_matchings(n, n, edges))
        assert got == sorted(got)
        assert got == sorted(all_maximum_matchings(n, edges))


# -- chain partitions -------------------------------------------------------

def test_mcp_examples():
    assert min_chain_partition(CHAIN3).chains == ((0, 1, 2),)
    vee = min_chain_partition(VEE)
    assert vee.chain_count == 2 and vee.chains == ((0, 1), (2,))
    assert min_chain_partition(Digraph(4)).chains == ((0,), (1,), (2,), (3,))


def test_mcp_rejects_cycle():
    with pytest.raises(CyclicDigraphError):
        min_chain_partition(Digraph(2, ((0, 1), (1, 0))))


def test_chain_partition_from_chains_validates():
    with pytest.raises(InputError):
        ChainPartition.from_chains(3, [[0, 1]])
    with pytest.raises(InputError):
        validate_chain_partition(VEE, ChainPartition.from_chains(3, [[1, 2], [0]]))


def test_transform_search_examples():
    start = min_chain_partition(CHAIN3)
    r = alternating_transform_search(CHAIN3, start)
    assert r.result == start and r.components == ()
    single = Digraph(3, ((0, 2),))
    start = ChainPartition.from_chains(3, [[0, 2], [1]])
    assert alternating_transform_search(single, start).result == start
    start = ChainPartition.from_chains(4, [[0, 2], [1], [3]])
    r = alternating_transform_search(DIAMOND, start)
    assert r.result.chains in (((0, 1, 2), (3,)), ((0, 3, 2), (1,)))
    # {0-1, 3-2} is a fourth maximum matching on original arcs
    assert r.visited == 4 and r.accepted == 4
    assert r.result.chains == ((0, 1, 2), (3,))


def test_transform_search_matches_bruteforce_choice():
    rng = random.Random(17)
    for _ in range(40):
        d = random_dag(rng, rng.randint(2, 7), 0.45)
        start = min_chain_partition(d)
        closure = transitive_closure(d)
        ok = [m for m in all_maximum_matchings(d.vertex_count, closure.arcs)
              if all(d.has_arc(u, v) for u, v in m)]
        r = alternating_transform_search(d, start)
        assert r.found == bool(ok)
        if ok:
            best = min(ok, key=lambda m: (len(set(m) ^ set(start.matching)), m))
            assert r.result.matching == best


def test_transform_search_none_when_closure_arc_forced():
    # the only MCP is [0, 1, 2], and 0 reaches 2 only through the closure
    d = Digraph(3, ((0, 1), (1, 2)))
    r = alternating_transform_search(d, min_chain_partition(d), "all-pairs")
    assert not r.found and r.visited == 1


def test_transform_search_guards():
    big = Digraph(13)
    with pytest.raises(SizeGuardError):
        alternating_transform_search(big, min_chain_partition(big))
    with pytest.raises(InputError):
        alternating_transform_search(CHAIN3, ChainPartition.from_chains(3, [[0, 2], [1]]), "nearest")


def test_components_cover_symmetric_difference():
    transform = chain_example_transform()
    old, new = transform["start_partition"].matching, transform["transformed_partition"].matching
    comps = alternating_components(old, new)
    assert len(comps) == 1 and comps[0].kind == "cycle"
    tags = [t for t, _ in comps[0].arcs]
    assert all(a != b for a, b in zip(tags, tags[1:]))
    assert set(comps[0].removed) == set(old) - set(new)
    assert set(comps[0].added) == set(new) - set(old)
    chain = alternating_components([(0, 2)], [(0, 1), (1, 2)])
    assert [c.kind for c in chain] == ["chain"] and len(chain[0].arcs) == 3


def test_chain_example_structure():
    d = chain_example_digraph()
    transform = chain_example_transform()
    assert d.vertex_count == 10
    transitive_closure(d)  # acyclic
    assert min_chain_partition(d).chain_count == 3
    start = transform["start_partition"]
    validate_chain_partition(d, start)
    assert start.chain_count == 3
    # the first chain holds x1, x8 and x4, x8 without a direct arc
    missing = {(u, v) for c in start.chains for i, u in enumerate(c) for v in c[i + 1:] if not d.has_arc(u, v)}
    assert missing == {tuple(p) for p in transform["independent_pairs_in_start"]}
    assert satisfies(d, start, "consecutive") and not satisfies(d, start, "all-pairs")
    assert satisfies(d, transform["transformed_partition"], "all-pairs")


def test_chain_system_examples():
    inst = chain_partition_system(CHAIN3)
    assert inst.n == 3
    arcs = inst.oracle.arcs
    supports = {tuple(arcs[e] for e in s) for s in enumerate_support(inst)}
    assert supports == {((0, 1), (1, 2)), ((0, 2),)}
    with pytest.raises(DomainError):
        chain_partition_system(Digraph(4))
    vee = chain_partition_system(VEE)
    assert vee.n == 2 and enumerate_support(vee).solutions == ((0,), (1,))


def test_chain_system_supports_are_maximal_matchings():
    rng = random.Random(23)
    for _ in range(25):
        d = random_dag(rng, rng.randint(3, 6), 0.5)
        if len(transitive_closure(d).arcs) < 2 or len(transitive_closure(d).arcs) > 16:
            continue
        inst = chain_partition_system(d)
        arcs = inst.oracle.arcs
        # maximal matchings of the split graph, straight from the arc list
        by_raw = {tuple(arcs[e] for e in s) for s in maximal_feasible(inst)}
        got = {tuple(arcs[e] for e in s) for s in enumerate_support(inst)}
        assert got == by_raw
        for m in got:
            assert len({u for u, _ in m}) == len(m) == len({v for _, v in m})
            free = [a for a in arcs if a not in m]
            assert all(any(a[0] == b[0] or a[1] == b[1] for b in m) for a in free)


# -- coloring ---------------------------------------------------------------

def test_coloring_examples():
    tri = coloring_system(cycle_graph(3), 2)
    assert tri.n == 6
    assert all(len(s) < 3 for s in enumerate_support(tri))
    one = coloring_system(Graph(1), 3)
    assert enumerate_support(one).solutions == ((0,), (1,), (2,))
    p3 = coloring_system(path_graph(3), 2)
    assert sum(1 for s in enumerate_support(p3) if len(s) == 3) == 2
    with pytest.raises(InputError):
        coloring_system(path_graph(2), 0)


def test_coloring_full_supports_count_proper_colorings():
    rng = random.Random(29)
    graphs = [path_graph(4), cycle_graph(5), complete_graph(4), star_graph(3)]
    graphs += [random_graph(rng, rng.randint(2, 5), 0.5) for _ in range(6)]
    for g in graphs:
        for k in (1, 2, 3):
            if g.vertex_count * k < 2:
                continue
            st = frontier_run(coloring_system(g, k))
            full = st.support_sizes().get(g.vertex_count, 0)
            assert full == proper_colorings(g.vertex_count, g.edges, k)


# -- Hamiltonian ------------------------------------------------------------

def test_partition_examples():
    assert hamiltonian_partition_bruteforce(cycle_graph(4)).part_count == 1
    p4 = hamiltonian_partition_bruteforce(path_graph(4))
    assert p4.parts == ((0, 1), (2, 3))
    assert hamiltonian_partition_bruteforce(complete_graph(4)).part_count == 1
    assert hamiltonian_partition_bruteforce(Graph(3, ((0, 1),))) is None


def test_is_hamiltonian_examples():
    assert is_hamiltonian(cycle_graph(5))
    assert not is_hamiltonian(path_graph(3))
    assert is_hamiltonian(Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3))))
    assert not is_hamiltonian(Graph(2, ((0, 1),)))
    assert not is_hamiltonian(star_graph(4))


def test_partition_minimum_against_set_partitions():
    rng = random.Random(31)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 6), rng.uniform(0.2, 0.9))
        part = hamiltonian_partition_bruteforce(g)
        expect = min_cycles_edges_parts(g.vertex_count, g.edges)
        assert (part.part_count if part else None) == expect
        if part:
            assert sorted(v for p in part.parts for v in p) == list(range(g.vertex_count))


def test_hamiltonian_guard():
    with pytest.raises(SizeGuardError):
        hamiltonian_partition_bruteforce(complete_graph(9))
    with pytest.raises(SizeGuardError):
        hamiltonian_cycle_by_permutation(complete_graph(9))
