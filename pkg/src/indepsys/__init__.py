"""Weighted independence systems: support solutions, adjoint and residual
sets, and oracle-call instrumentation, with coloring, chain-partition and
Hamiltonian-cycle problem families."""

from .auxiliary import (
    AuxiliaryTriple,
    TheoremReport,
    adjoint_set,
    auxiliary_triple,
    check_theorem,
    closure_union_bruteforce,
    closure_union_fast,
    residual_set,
)
from .core import (
    ClosureReport,
    ProblemInstance,
    Solution,
    is_support,
    objective,
    validate_downward_closure,
)
from .errors import (
    CyclicDigraphError,
    DomainError,
    FrontierOverflowError,
    IndepSysError,
    InfeasibleSolutionError,
    InputError,
    SizeGuardError,
)
from .oracles import (
    CallStats,
    ExplicitOracle,
    FullListOracle,
    InstrumentedOracle,
    MembershipOracle,
    PredicateOracle,
    SupersetScanOracle,
    call_stats,
    extension_feasible,
    is_feasible,
    reset_stats,
)
from .solvers import (
    FrontierStats,
    GreedyTrace,
    LookaheadProfile,
    SupportSet,
    enumerate_support,
    extremal_support,
    find_support_with_value,
    frontier_run,
    greedy_construct,
    lookahead_profile,
    nontriviality_profile,
)

__version__ = "0.1.0"
