"""Membership oracles deciding ``pi in Q``.

Every oracle answers two questions: full membership (:meth:`is_feasible`)
and the single-extension predicate ``pi + {r} in Q``
(:meth:`extension_feasible`).  The second is the resource counted when
deciding whether an adjoint set is determined effectively, so concrete
oracles are free to answer it with a cheap local check.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, List, Sequence

from .core import Solution, canonical, from_mask, to_mask
from .errors import InputError


class MembershipOracle:
    """Base class.  Subclasses implement :meth:`_feasible` and may override
    :meth:`_extends` with something faster than a full membership query."""

    def __init__(self, n: int):
        if n < 0:
            raise InputError("oracle size must be nonnegative")
        self.n = n

    @property
    def base(self) -> "MembershipOracle":
        """The oracle with any instrumentation stripped."""
        return self

    def is_feasible(self, pi: Iterable[int]) -> bool:
        return self._feasible(canonical(pi, self.n))

    def extension_feasible(self, pi: Iterable[int], r: int) -> bool:
        sol = canonical(pi, self.n)
        canonical((r,), self.n)
        if r in sol:
            raise InputError(f"element {r} is already in the solution")
        return self._extends(sol, r)

    def _feasible(self, pi: Solution) -> bool:
        raise NotImplementedError

    def _extends(self, pi: Solution, r: int) -> bool:
        return self._feasible(tuple(sorted(pi + (r,))))


def _antichain_violation(masks: Sequence[int]):
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a:
                return i, j
    return None


class ExplicitOracle(MembershipOracle):
    """Q given by its maximal sets: ``pi`` is feasible iff it lies inside one.

    The maximal sets must form an antichain; this is checked on construction.
    An empty list of maximal sets is read as Q = {{}}.
    """

    def __init__(self, n: int, maximal_sets: Iterable[Iterable[int]]):
        super().__init__(n)
        sets = [canonical(m, n) for m in maximal_sets]
        masks = [to_mask(m) for m in sets]
        bad = _antichain_violation(masks)
        if bad is not None:
            i, j = bad
            raise InputError(
                f"maximal sets are not an antichain: {list(sets[i])} is contained in {list(sets[j])}"
            )
        self.maximal_sets = tuple(sorted(sets))
        self._masks = tuple(to_mask(m) for m in self.maximal_sets) or (0,)

    def _feasible(self, pi):
        mask = to_mask(pi)
        return any(mask & ~m == 0 for m in self._masks)

    def _extends(self, pi, r):
        return self._feasible(pi + (r,))

    def __eq__(self, other):
        return isinstance(other, ExplicitOracle) and (self.n, self.maximal_sets) == (other.n, other.maximal_sets)

    def __hash__(self):
        return hash((self.n, self.maximal_sets))

    def __repr__(self):
        return f"ExplicitOracle(n={self.n}, maximal_sets={[list(m) for m in self.maximal_sets]})"


class FullListOracle(MembershipOracle):
    """Q given literally as the list of all its members.

    Nothing forces the list to be downward closed, which makes this the
    oracle for constructing deliberate violations and for cross-checking
    :class:`ExplicitOracle`.
    """

    def __init__(self, n: int, feasible_sets: Iterable[Iterable[int]]):
        super().__init__(n)
        self._members = frozenset(canonical(s, n) for s in feasible_sets)

    @classmethod
    def from_maximal(cls, n, maximal_sets):
        members = set()
        for m in maximal_sets:
            m = canonical(m, n)
            for k in range(len(m) + 1):
                members.update(combinations(m, k))
        members.add(())
        return cls(n, members)

    def _feasible(self, pi):
        return pi in self._members

    def __len__(self):
        return len(self._members)


class PredicateOracle(MembershipOracle):
    """Wrap plain callables; ``extends(pi, r)`` is optional."""

    def __init__(self, n: int, feasible: Callable[[Solution], bool], extends=None):
        super().__init__(n)
        self._pred = feasible
        self._ext = extends

    def _feasible(self, pi):
        return bool(self._pred(pi))

    def _extends(self, pi, r):
        if self._ext is None:
            return super()._extends(pi, r)
        return bool(self._ext(pi, r))


class SupersetScanOracle(MembershipOracle):
    """Answers the extension predicate by brute force: ``pi + {r}`` is
    declared extendable only after scanning supersets of it for one in Q.

    The answers are identical to the wrapped oracle's, and each query is
    still one extension call, but the internal work is exponential in
    ``n - |pi|``.  ``work_units`` counts the inner membership queries so a
    profiler can see what a call counter alone cannot.
    """

    def __init__(self, inner: MembershipOracle):
        super().__init__(inner.n)
        self.inner = inner
        self.work_units = 0
        self._lock = threading.Lock()

    def _feasible(self, pi):
        return self.inner.is_feasible(pi)

    def _extends(self, pi, r):
        start = to_mask(pi) | (1 << r)
        rest = [e for e in range(self.n) if not start >> e & 1]
        found = False
        work = 0
        # every superset is scanned; stopping early would hide the cost
        for k in range(len(rest) + 1):
            for extra in combinations(rest, k):
                work += 1
                if self.inner.is_feasible(from_mask(start | to_mask(extra))):
                    found = True
        with self._lock:
            self.work_units += work
        return found


@dataclass(frozen=True)
class CallStats:
    full_membership_calls: int = 0
    extension_predicate_calls: int = 0
    wall_time: float = 0.0

    @property
    def counts(self):
        return self.full_membership_calls, self.extension_predicate_calls


class InstrumentedOracle(MembershipOracle):
    """Transparent wrapper that counts queries of each kind.

    Counters are updated under a lock, so concurrent callers never lose
    increments.  Answers always come from the wrapped oracle unchanged.
    """

    def __init__(self, inner: MembershipOracle):
        super().__init__(inner.n)
        self.inner = inner
        self._lock = threading.Lock()
        self._full = 0
        self._ext = 0
        self._time = 0.0

    @property
    def base(self):
        return self.inner.base

    def is_feasible(self, pi):
        t0 = time.perf_counter()
        answer = self.inner.is_feasible(pi)
        dt = time.perf_counter() - t0
        with self._lock:
            self._full += 1
            self._time += dt
        return answer

    def extension_feasible(self, pi, r):
        t0 = time.perf_counter()
        answer = self.inner.extension_feasible(pi, r)
        dt = time.perf_counter() - t0
        with self._lock:
            self._ext += 1
            self._time += dt
        return answer

    def _feasible(self, pi):  # pragma: no cover - public methods delegate directly
        return self.inner._feasible(pi)

    def stats(self) -> CallStats:
        with self._lock:
            return CallStats(self._full, self._ext, self._time)

    def reset(self) -> None:
        with self._lock:
            self._full = 0
            self._ext = 0
            self._time = 0.0


def call_stats(oracle: InstrumentedOracle) -> CallStats:
    return oracle.stats()


def reset_stats(oracle: InstrumentedOracle) -> None:
    oracle.reset()


def is_feasible(oracle: MembershipOracle, pi: Iterable[int]) -> bool:
    return oracle.is_feasible(pi)


def extension_feasible(oracle: MembershipOracle, pi: Iterable[int], r: int) -> bool:
    return oracle.extension_feasible(pi, r)


def feasible_sets(oracle: MembershipOracle) -> List[Solution]:
    """All members of Q by a plain 2**n scan of the base oracle (small n only)."""
    base = oracle.base
    return [from_mask(m) for m in range(1 << base.n) if base.is_feasible(from_mask(m))]
