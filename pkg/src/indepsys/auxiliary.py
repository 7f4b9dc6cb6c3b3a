"""W(pi), the adjoint set S(pi) and the residual set R(pi).

For a feasible ``pi``:

* ``W(pi)`` is the union of all feasible supersets of ``pi``;
* ``S(pi) = R - W(pi)`` holds the elements no feasible completion can use;
* ``R(pi) = W(pi) - pi`` holds the elements that can each be adjoined now.

Downward closure makes ``W(pi) = pi + {r : pi + {r} in Q}``, so the fast
route spends exactly one extension query per element outside ``pi``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .core import (
    ProblemInstance,
    Solution,
    check_exhaustive,
    from_mask,
    require_feasible,
    to_mask,
)
from .errors import InputError
from .oracles import feasible_sets

#: theorem checks enumerate all feasible solutions and pairs of them
THEOREM_LIMIT = 12


@dataclass(frozen=True)
class AuxiliaryTriple:
    for_solution: Solution
    w_set: Solution
    adjoint: Solution
    residual: Solution


def closure_union_bruteforce(instance: ProblemInstance, pi) -> Solution:
    """W(pi) by scanning every superset of ``pi`` with full membership queries."""
    sol = require_feasible(instance, pi)
    check_exhaustive(instance.n, what="superset scan")
    base = to_mask(sol)
    free = [e for e in range(instance.n) if not base >> e & 1]
    union = 0
    for bits in range(1 << len(free)):
        mask = base
        for i, e in enumerate(free):
            if bits >> i & 1:
                mask |= 1 << e
        if mask & ~union and instance.oracle.is_feasible(from_mask(mask)):
            union |= mask
    return from_mask(union | base)


def _extendable(instance: ProblemInstance, sol: Solution) -> List[int]:
    present = set(sol)
    ext = instance.oracle.extension_feasible
    return [r for r in range(instance.n) if r not in present and ext(sol, r)]


def closure_union_fast(instance: ProblemInstance, pi) -> Solution:
    """W(pi) from |R - pi| single-extension queries."""
    sol = require_feasible(instance, pi)
    return tuple(sorted(sol + tuple(_extendable(instance, sol))))


def adjoint_set(instance: ProblemInstance, pi) -> Solution:
    w = set(closure_union_fast(instance, pi))
    return tuple(e for e in range(instance.n) if e not in w)


def residual_set(instance: ProblemInstance, pi) -> Solution:
    sol = require_feasible(instance, pi)
    return tuple(_extendable(instance, sol))


def auxiliary_triple(instance: ProblemInstance, pi) -> AuxiliaryTriple:
    """All three sets from one round of extension queries."""
    sol = require_feasible(instance, pi)
    residual = tuple(_extendable(instance, sol))
    w = tuple(sorted(sol + residual))
    ws = set(w)
    adjoint = tuple(e for e in range(instance.n) if e not in ws)
    return AuxiliaryTriple(sol, w, adjoint, residual)


@dataclass
class TheoremReport:
    theorem: int
    passed: bool
    checked: int
    counterexample: Optional[Dict] = None
    details: Dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = ""
        if self.counterexample:
            extra = f" counterexample={self.counterexample}"
        return f"theorem {self.theorem}: {status} ({self.checked} cases){extra}"


def _subsets_of(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def check_theorem(instance: ProblemInstance, which: int) -> TheoremReport:
    """Exhaustively check one of the three auxiliary-set theorems (n <= 12).

    1. ``pi1 <= pi2`` feasible implies ``S(pi1) <= S(pi2)`` (non-strict
       inclusion; the strict form fails on e.g. power-set systems).  The
       report counts how often strict ``pi1 < pi2`` gave strictly larger S.
    2. every ``r`` in ``R(pi)`` gives a feasible ``pi + {r}``.
    3. maximal ``pi`` has ``R(pi)`` empty and ``pi + S(pi) = R``; conversely an
       empty residual set means ``pi`` is maximal.

    All feasible solutions are listed by a raw 2**n scan, and maximality is
    judged against that list, so the check does not lean on the code it
    is checking.
    """
    if which not in (1, 2, 3):
        raise InputError(f"unknown theorem {which!r}; expected 1, 2 or 3")
    check_exhaustive(instance.n, THEOREM_LIMIT, what=f"theorem {which} check")
    n = instance.n
    full = (1 << n) - 1
    members = feasible_sets(instance.oracle)
    masks = {to_mask(s) for s in members}
    triples = {to_mask(s): auxiliary_triple(instance, s) for s in members}

    if which == 1:
        adj = {m: to_mask(t.adjoint) for m, t in triples.items()}
        checked = strict = equal = 0
        for big in sorted(masks):
            for small in _subsets_of(big):
                # feasible by downward closure, but verify rather than assume
                if small not in masks:
                    continue
                checked += 1
                if adj[small] & ~adj[big]:
                    return TheoremReport(1, False, checked, {
                        "pi1": list(from_mask(small)), "pi2": list(from_mask(big)),
                        "S(pi1)": list(from_mask(adj[small])), "S(pi2)": list(from_mask(adj[big])),
                    })
                if small != big:
                    if adj[small] == adj[big]:
                        equal += 1
                    else:
                        strict += 1
        return TheoremReport(1, True, checked, details={
            "strict_pairs_with_strict_growth": strict,
            "strict_pairs_with_equal_adjoint": equal,
        })

    if which == 2:
        checked = 0
        for m in sorted(masks):
            for r in triples[m].residual:
                checked += 1
                if m | (1 << r) not in masks:
                    return TheoremReport(2, False, checked, {
                        "pi": list(from_mask(m)), "r": r,
                    })
        return TheoremReport(2, True, checked)

    supports = []
    checked = 0
    for m in sorted(masks, key=lambda x: from_mask(x)):
        t = triples[m]
        maximal = not any(x != m and x & m == m for x in masks)
        checked += 1
        if maximal:
            supports.append(list(t.for_solution))
            if t.residual or (m | to_mask(t.adjoint)) != full:
                return TheoremReport(3, False, checked, {
                    "pi": list(t.for_solution), "R(pi)": list(t.residual),
                    "S(pi)": list(t.adjoint), "direction": "support => empty residual",
                })
        elif not t.residual:
            return TheoremReport(3, False, checked, {
                "pi": list(t.for_solution), "direction": "empty residual => support",
            })
    return TheoremReport(3, True, checked, details={"supports": supports})


def check_theorems(instance: ProblemInstance, which=(1, 2, 3)) -> Tuple[TheoremReport, ...]:
    return tuple(check_theorem(instance, w) for w in which)
