"""The problem tuple Z = (R, Q, M, f) and the support-solution predicates.

The work set R is always ``range(n)``.  A solution is a strictly increasing
tuple of element ids, so set equality is tuple equality.  The feasibility
region Q is never materialised; it is represented by a membership oracle
(see :mod:`indepsys.oracles`).
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Iterable, Optional, Sequence, Tuple

from .errors import InfeasibleSolutionError, InputError, SizeGuardError

if TYPE_CHECKING:
    from .oracles import InstrumentedOracle, MembershipOracle

Solution = Tuple[int, ...]

#: exhaustive subset scans stop here (2**20 subsets)
EXHAUSTIVE_LIMIT = 20


def canonical(elements: Iterable[int], n: int) -> Solution:
    """Return ``elements`` as a sorted tuple, rejecting duplicates and ids outside [0, n)."""
    items = tuple(sorted(elements))
    for e in items:
        if isinstance(e, bool) or not isinstance(e, int):
            raise InputError(f"element id {e!r} is not an integer")
        if e < 0 or e >= n:
            raise InputError(f"element id {e} outside [0, {n})")
    if len(set(items)) != len(items):
        raise InputError(f"duplicate element ids in {list(items)}")
    return items


def to_mask(solution: Iterable[int]) -> int:
    mask = 0
    for e in solution:
        mask |= 1 << e
    return mask


def from_mask(mask: int) -> Solution:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def check_exhaustive(n: int, limit: int = EXHAUSTIVE_LIMIT, what: str = "exhaustive scan") -> None:
    if n > limit:
        raise SizeGuardError(f"{what} refused: n = {n} exceeds the guard n <= {limit}")


@dataclass(frozen=True)
class ProblemInstance:
    """A weighted independence system.

    ``weights[i]`` is the weight of element ``i``; ``oracle`` decides
    membership in Q.  Zero weights are accepted with a warning.
    ``element_labels`` is optional display metadata (e.g. ``"(v2,c1)"``).
    """

    n: int
    weights: Tuple[int, ...]
    oracle: "MembershipOracle"
    label: str = ""
    element_labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n <= 1:
            raise InputError(f"work set must have n > 1 elements, got {self.n!r}")
        weights = tuple(self.weights)
        if len(weights) != self.n:
            raise InputError(f"expected {self.n} weights, got {len(weights)}")
        for w in weights:
            if isinstance(w, bool) or not isinstance(w, int) or w < 0:
                raise InputError(f"weights must be nonnegative integers, got {w!r}")
        object.__setattr__(self, "weights", weights)
        if any(w == 0 for w in weights):
            warnings.warn(f"instance {self.label!r} has zero-weight elements", stacklevel=3)
        if self.oracle.n != self.n:
            raise InputError(f"oracle is over {self.oracle.n} elements, instance has {self.n}")
        if self.element_labels is not None and len(self.element_labels) != self.n:
            raise InputError("element_labels must have one entry per element")
        # Q nonempty plus downward closure forces the empty set into Q.
        if not self.oracle.base.is_feasible(()):
            raise InputError("feasibility region is empty (the empty solution is infeasible)")

    def solution(self, elements: Iterable[int]) -> Solution:
        return canonical(elements, self.n)

    def instrumented(self) -> Tuple["ProblemInstance", "InstrumentedOracle"]:
        """Return a copy wired to a fresh call-counting oracle, and that oracle."""
        from .oracles import InstrumentedOracle

        spy = InstrumentedOracle(self.oracle.base)
        return replace(self, oracle=spy), spy

    def element_name(self, e: int) -> str:
        if self.element_labels is None:
            return str(e)
        return self.element_labels[e]


def require_feasible(instance: ProblemInstance, pi: Iterable[int]) -> Solution:
    """Canonicalise ``pi`` and raise if it is not in Q.

    The check goes to the unwrapped oracle: validating a precondition is
    not part of the work an instrumented run is meant to measure.
    """
    sol = instance.solution(pi)
    if not instance.oracle.base.is_feasible(sol):
        raise InfeasibleSolutionError(sol)
    return sol


def objective(instance: ProblemInstance, pi: Iterable[int]) -> int:
    """f(pi): the total weight of the elements of ``pi``."""
    sol = instance.solution(pi)
    return sum(instance.weights[e] for e in sol)


@dataclass(frozen=True)
class ClosureReport:
    passed: bool
    checked: int
    exhaustive: bool
    counterexample: Optional[Tuple[Solution, Solution]] = None

    def __bool__(self):
        return self.passed


def validate_downward_closure(
    instance: ProblemInstance, samples: Optional[int] = None, seed: int = 0
) -> ClosureReport:
    """Check that every subset of a feasible solution is feasible.

    With ``samples=None`` all 2**n subsets are scanned (n <= 20).  Otherwise
    ``samples`` random subsets are drawn and each feasible one is checked.
    Testing one-element removals suffices: if every feasible set stays
    feasible after dropping any single element, induction covers all
    subsets.  The counterexample is ``(pi, pi1)`` with ``pi1`` the
    lexicographically first infeasible one-element removal.
    """
    oracle = instance.oracle.base
    n = instance.n

    def violation(mask):
        sol = from_mask(mask)
        # dropping the largest element first yields lexicographically smallest subset
        for e in reversed(sol):
            sub = from_mask(mask & ~(1 << e))
            if not oracle.is_feasible(sub):
                return sol, sub
        return None

    if samples is None:
        check_exhaustive(n, what="downward-closure validation")
        candidates = range(1 << n)
    else:
        if samples <= 0:
            raise InputError("samples must be positive")
        rng = random.Random(seed)
        candidates = (rng.getrandbits(n) for _ in range(samples))

    checked = 0
    for mask in candidates:
        checked += 1
        if mask and oracle.is_feasible(from_mask(mask)):
            bad = violation(mask)
            if bad is not None:
                return ClosureReport(False, checked, samples is None, bad)
    return ClosureReport(True, checked, samples is None)


def is_support(instance: ProblemInstance, pi: Sequence[int]) -> bool:
    """True iff ``pi`` is a support (maximal feasible) solution.

    Decided by residual-set emptiness.  Raises
    :class:`~indepsys.errors.InfeasibleSolutionError` for ``pi`` outside Q,
    so "infeasible" is distinguishable from "feasible but extendable".
    """
    from .auxiliary import residual_set

    return not residual_set(instance, pi)
