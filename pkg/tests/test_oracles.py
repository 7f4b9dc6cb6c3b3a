import random
import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indepsys import (
    CallStats,
    ExplicitOracle,
    FullListOracle,
    InputError,
    InstrumentedOracle,
    adjoint_set,
    call_stats,
    extension_feasible,
    is_feasible,
    reset_stats,
)
from indepsys.families import random_antichain
from indepsys.instances import coloring_system
from indepsys.instances.graphs import cycle_graph


def test_is_feasible_examples(e1):
    assert is_feasible(e1.oracle, ())
    assert is_feasible(e1.oracle, (0, 1))
    assert not is_feasible(e1.oracle, (0, 2))
    tri = coloring_system(cycle_graph(3), 2)
    # (v0, c0) and (v1, c0) are elements 0 and 2
    assert not is_feasible(tri.oracle, (0, 2))
    assert is_feasible(tri.oracle, (0, 3))


def test_out_of_range_rejected(e1):
    with pytest.raises(InputError):
        is_feasible(e1.oracle, (5,))
    with pytest.raises(InputError):
        extension_feasible(e1.oracle, (), 3)


def test_extension_examples(e1):
    assert extension_feasible(e1.oracle, (0,), 1)
    assert not extension_feasible(e1.oracle, (0,), 2)
    for r in range(3):
        assert extension_feasible(e1.oracle, (), r)
    with pytest.raises(InputError):
        extension_feasible(e1.oracle, (0,), 0)


def test_antichain_enforced():
    with pytest.raises(InputError, match="antichain"):
        ExplicitOracle(2, [[0, 1], [0]])


def test_empty_maximal_list_means_only_empty_set():
    o = ExplicitOracle(3, [])
    assert o.is_feasible(()) and not o.is_feasible((0,))


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 10), st.integers(0, 2**32 - 1))
def test_explicit_matches_full_list(n, seed):
    rng = random.Random(seed)
    maximal = random_antichain(n, rng)
    a = ExplicitOracle(n, maximal)
    b = FullListOracle.from_maximal(n, maximal)
    for mask in range(1 << n):
        s = tuple(i for i in range(n) if mask >> i & 1)
        assert a.is_feasible(s) == b.is_feasible(s)


def test_stats_lifecycle(e1):
    inst, spy = e1.instrumented()
    assert call_stats(spy).counts == (0, 0)
    adjoint_set(inst, (0,))
    assert call_stats(spy).counts == (0, 2)
    reset_stats(spy)
    assert call_stats(spy).counts == (0, 0)
    assert isinstance(call_stats(spy), CallStats)


def test_instrumentation_is_transparent():
    rng = random.Random(11)
    n = 9
    inner = ExplicitOracle(n, random_antichain(n, rng, count=6))
    spy = InstrumentedOracle(inner)
    for _ in range(1000):
        pi = tuple(sorted(rng.sample(range(n), rng.randint(0, n - 1))))
        if rng.random() < 0.5:
            assert spy.is_feasible(pi) == inner.is_feasible(pi)
        else:
            r = rng.choice([e for e in range(n) if e not in pi])
            assert spy.extension_feasible(pi, r) == inner.extension_feasible(pi, r)
    full, ext = spy.stats().counts
    assert full + ext == 1000
    assert spy.base is inner


def test_repeated_queries_deterministic(e1):
    spy = InstrumentedOracle(e1.oracle)
    answers = {spy.extension_feasible((0,), 2) for _ in range(50)}
    assert answers == {False}


def test_concurrent_counting_loses_nothing(e1):
    spy = InstrumentedOracle(e1.oracle)

    def work():
        for _ in range(2000):
            spy.extension_feasible((0,), 1)
            spy.is_feasible((2,))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert spy.stats().counts == (16000, 16000)
