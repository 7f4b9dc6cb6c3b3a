"""Constructing and enumerating support solutions, plus the two profilers."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .auxiliary import adjoint_set, residual_set
from .core import (
    ProblemInstance,
    Solution,
    check_exhaustive,
    objective,
)
from .errors import FrontierOverflowError, InputError

FRONTIER_LAYER_LIMIT = 1 << 22
LOOKAHEAD_LIMIT = 16

SENSES = ("max", "min")
TIEBREAKS = ("lowest-id", "highest-id")


@dataclass(frozen=True)
class GreedyStep:
    element: int
    residual_size: int
    predicate_calls: int


@dataclass(frozen=True)
class GreedyTrace:
    steps: Tuple[GreedyStep, ...]
    result: Solution
    final_calls: int

    @property
    def total_calls(self) -> int:
        return sum(s.predicate_calls for s in self.steps) + self.final_calls


def _pick(instance, residual, sense, tiebreak):
    w = instance.weights
    sign = 1 if sense == "max" else -1
    if tiebreak == "lowest-id":
        return max(residual, key=lambda r: (sign * w[r], -r))
    return max(residual, key=lambda r: (sign * w[r], r))


def greedy_construct(
    instance: ProblemInstance, sense: str = "max", tiebreak: str = "lowest-id"
) -> Tuple[Solution, GreedyTrace]:
    """Grow a support solution from the empty set.

    Each round computes the residual set and adjoins its heaviest
    (``sense="max"``) or lightest element, ties broken by ``tiebreak``.
    The loop ends when the residual set is empty, so the result is always
    maximal, though not necessarily optimal.
    """
    if sense not in SENSES:
        raise InputError(f"sense must be one of {SENSES}, got {sense!r}")
    if tiebreak not in TIEBREAKS:
        raise InputError(f"tiebreak must be one of {TIEBREAKS}, got {tiebreak!r}")
    pi: Solution = ()
    steps = []
    while True:
        calls = instance.n - len(pi)
        residual = residual_set(instance, pi)
        if not residual:
            return pi, GreedyTrace(tuple(steps), pi, calls)
        r = _pick(instance, residual, sense, tiebreak)
        steps.append(GreedyStep(r, len(residual), calls))
        pi = tuple(sorted(pi + (r,)))


@dataclass(frozen=True)
class SupportSet:
    solutions: Tuple[Solution, ...]
    truncated: bool = False

    @property
    def cardinality(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self):
        return len(self.solutions)

    def __contains__(self, item):
        return tuple(sorted(item)) in self.solutions


def enumerate_support(instance: ProblemInstance, limit: Optional[int] = None) -> SupportSet:
    """All maximal feasible solutions by canonical depth-first extension.

    A node ``pi`` is only extended by ids above ``max(pi)``, so every
    feasible set is reached exactly once.  Maximality still tests every
    element outside ``pi``.  With ``limit`` the search stops at the
    ``limit``-th support; ``truncated`` then means unexplored branches
    remained, not that another support is known to exist.
    """
    if limit is None:
        check_exhaustive(instance.n, what="support enumeration")
    elif limit < 1:
        raise InputError("limit must be positive")
    n = instance.n
    ext = instance.oracle.extension_feasible
    found: List[Solution] = []
    truncated = False
    # explicit stack; children pushed in reverse so ids are visited ascending
    stack: List[Solution] = [()]
    while stack:
        pi = stack.pop()
        members = set(pi)
        ok = [r for r in range(n) if r not in members and ext(pi, r)]
        if not ok:
            found.append(pi)
            if limit is not None and len(found) >= limit:
                truncated = bool(stack)
                break
            continue
        top = pi[-1] if pi else -1
        for r in reversed(ok):
            if r > top:
                stack.append(pi + (r,))
    return SupportSet(tuple(sorted(found)), truncated)


@dataclass(frozen=True)
class FrontierStats:
    layers: Tuple[Tuple[int, int], ...]
    support_count: int
    max_layer_width: int
    max_support_size: int
    supports: Optional[SupportSet] = None

    def widths(self) -> Tuple[int, ...]:
        return tuple(c for _, c in self.layers)

    def width(self, depth: int) -> int:
        """Layer width at any depth; 0 past the last nonempty layer."""
        for d, c in self.layers:
            if d == depth:
                return c
        return 0

    def support_sizes(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for s in self.supports or ():
            counts[len(s)] = counts.get(len(s), 0) + 1
        return counts


def frontier_run(
    instance: ProblemInstance,
    stats_only: bool = False,
    max_layer: int = FRONTIER_LAYER_LIMIT,
) -> FrontierStats:
    """Extend all feasible solutions simultaneously, one element per layer.

    Layer ``k`` holds every feasible solution of size ``k``; it is fully
    built and deduplicated before layer ``k + 1`` starts.  A solution with
    no feasible extension is harvested as a support.  Only nonempty layers
    are reported.  A layer growing past ``max_layer`` stored solutions
    aborts the run with :class:`~indepsys.errors.FrontierOverflowError`.
    """
    check_exhaustive(instance.n, what="frontier enumeration")
    n = instance.n
    ext = instance.oracle.extension_feasible
    layer = [()]
    depth = 0
    layers = []
    harvested: List[Solution] = []
    support_count = 0
    max_support = 0
    while layer:
        layers.append((depth, len(layer)))
        nxt = set()
        for pi in layer:
            members = set(pi)
            grown = False
            for r in range(n):
                if r not in members and ext(pi, r):
                    grown = True
                    nxt.add(tuple(sorted(pi + (r,))))
                    if len(nxt) > max_layer:
                        raise FrontierOverflowError(depth + 1, len(nxt), max_layer)
            if not grown:
                support_count += 1
                max_support = max(max_support, len(pi))
                if not stats_only:
                    harvested.append(pi)
        layer = sorted(nxt)
        depth += 1
    return FrontierStats(
        layers=tuple(layers),
        support_count=support_count,
        max_layer_width=max(c for _, c in layers),
        max_support_size=max_support,
        supports=None if stats_only else SupportSet(tuple(sorted(harvested))),
    )


def find_support_with_value(instance: ProblemInstance, target: int) -> Optional[Solution]:
    """The lexicographically smallest support with objective ``target``, or None."""
    for s in enumerate_support(instance):
        if objective(instance, s) == target:
            return s
    return None


def extremal_support(instance: ProblemInstance, sense: str = "max") -> Tuple[Solution, int]:
    """Best support by exhaustive scan; ties go to the lexicographically smallest."""
    if sense not in SENSES:
        raise InputError(f"sense must be one of {SENSES}, got {sense!r}")
    best = None
    for s in enumerate_support(instance):
        v = objective(instance, s)
        if best is None or (v > best[1] if sense == "max" else v < best[1]):
            best = (s, v)
    return best


@dataclass(frozen=True)
class ProfileRow:
    size: int
    n: int
    support_count: int
    max_support_size: int
    growth: Optional[Fraction]


def nontriviality_profile(
    family: Callable[[int], ProblemInstance], sizes: Iterable[int]
) -> List[ProfileRow]:
    """Exact Card(B) for each family member, with successive growth ratios.

    Ratios are an informal indicator only: one finite table cannot show a
    count is exponential in n.
    """
    rows: List[ProfileRow] = []
    prev = None
    for size in sizes:
        inst = family(size)
        check_exhaustive(inst.n, what=f"profile at size {size}")
        stats = frontier_run(inst, stats_only=True)
        count = stats.support_count
        growth = Fraction(count, prev) if prev else None
        rows.append(ProfileRow(size, inst.n, count, stats.max_support_size, growth))
        prev = count
    return rows


@dataclass
class SizeCalls:
    solutions: int = 0
    budget: int = 0
    min_calls: Optional[int] = None
    max_calls: int = 0
    full_calls: int = 0
    work_units: Optional[int] = None
    seconds: float = 0.0


@dataclass
class LookaheadProfile:
    per_size: Dict[int, SizeCalls]
    classification: str
    solutions_profiled: int
    sampled: bool
    wall_time: float
    notes: List[str] = field(default_factory=list)

    @property
    def per_solution_calls(self) -> Dict[int, int]:
        return {k: v.max_calls for k, v in sorted(self.per_size.items())}


NO_LOOKAHEAD = "no-lookahead (operational)"
OVER_BUDGET = "exceeds budget"


def _sample_feasible(instance, samples, seed):
    """Random walks from the empty set, stopping at a uniformly drawn depth."""
    base = instance.oracle.base
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        pi: Solution = ()
        stop = rng.randint(0, instance.n)
        while len(pi) < stop:
            options = [r for r in range(instance.n) if r not in pi and base.extension_feasible(pi, r)]
            if not options:
                break
            pi = tuple(sorted(pi + (rng.choice(options),)))
        out.append(pi)
    return out


def _all_feasible(instance):
    base = instance.oracle.base
    layer = [()]
    out = []
    while layer:
        out.extend(layer)
        nxt = set()
        for pi in layer:
            for r in range(instance.n):
                if r not in pi and base.extension_feasible(pi, r):
                    nxt.add(tuple(sorted(pi + (r,))))
        layer = sorted(nxt)
    return out


def lookahead_profile(
    instance: ProblemInstance,
    samples: Optional[int] = None,
    seed: int = 0,
    work_bound: Optional[int] = None,
) -> LookaheadProfile:
    """Compute S(pi) for every feasible pi against an instrumented oracle.

    The instance is classified ``"no-lookahead (operational)"`` iff every
    adjoint set took exactly ``n - |pi|`` extension calls and no full
    membership calls.  This is evidence about one instance, not a proof
    of polynomial-time behaviour.  If the oracle exposes ``work_units``
    (see :class:`~indepsys.oracles.SupersetScanOracle`), its internal work
    per call goes into the report, and a note is added when it exceeds
    ``work_bound`` (default ``n**2``).
    """
    if samples is None:
        check_exhaustive(instance.n, LOOKAHEAD_LIMIT, what="lookahead profile")
        sols = _all_feasible(instance)
    else:
        if samples < 1:
            raise InputError("samples must be positive")
        sols = _sample_feasible(instance, samples, seed)
    n = instance.n
    bound = n * n if work_bound is None else work_bound
    probe, spy = instance.instrumented()
    meter = spy.base if hasattr(spy.base, "work_units") else None
    per_size: Dict[int, SizeCalls] = {}
    ok = True
    t_start = time.perf_counter()
    for pi in sols:
        spy.reset()
        work0 = meter.work_units if meter is not None else 0
        t0 = time.perf_counter()
        adjoint_set(probe, pi)
        dt = time.perf_counter() - t0
        full, calls = spy.stats().counts
        row = per_size.setdefault(len(pi), SizeCalls(budget=n - len(pi)))
        row.solutions += 1
        row.min_calls = calls if row.min_calls is None else min(row.min_calls, calls)
        row.max_calls = max(row.max_calls, calls)
        row.full_calls += full
        row.seconds += dt
        if meter is not None:
            work = meter.work_units - work0
            row.work_units = max(row.work_units or 0, work)
        if calls != n - len(pi) or full:
            ok = False
    wall = time.perf_counter() - t_start
    per_size = dict(sorted(per_size.items()))
    notes = []
    if ok:
        notes.append(f"every adjoint set met the exact budget of n - |pi| extension calls ({len(sols)} solutions)")
    else:
        bad = [k for k, v in per_size.items() if v.max_calls != v.budget or v.min_calls != v.budget or v.full_calls]
        notes.append(f"call budget missed at solution sizes {bad}")
    if meter is not None:
        worst = max(per_size.items(), key=lambda kv: (kv[1].work_units or 0) / max(kv[1].budget, 1))
        size, row = worst
        per_call = (row.work_units or 0) // max(row.budget, 1)
        if per_call > bound:
            notes.append(
                f"call budget met, but the oracle did ~{per_call} internal membership checks per "
                f"extension call at |pi| = {size} (bound {bound}); the predicate itself looks ahead"
            )
    return LookaheadProfile(
        per_size=per_size,
        classification=NO_LOOKAHEAD if ok else OVER_BUDGET,
        solutions_profiled=len(sols),
        sampled=samples is not None,
        wall_time=wall,
        notes=notes,
    )
