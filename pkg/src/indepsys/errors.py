"""Exception hierarchy shared by every module of the package."""


class IndepSysError(Exception):
    """Base class for all errors raised by indepsys."""


class InputError(IndepSysError, ValueError):
    """Malformed argument: out-of-range ids, duplicates, bad sizes."""


class DomainError(IndepSysError, ValueError):
    """Well-formed argument outside the domain of the operation."""


class InfeasibleSolutionError(DomainError):
    """The solution handed to an operation is not a member of Q."""

    def __init__(self, solution):
        self.solution = tuple(solution)
        super().__init__(f"solution {set(self.solution) or '{}'} is not feasible")


class CyclicDigraphError(DomainError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        path = " -> ".join(str(v) for v in self.cycle + self.cycle[:1])
        super().__init__(f"digraph is not acyclic: {path}")


class SizeGuardError(IndepSysError):
    """An exhaustive routine was asked to run above its size ceiling."""


class FrontierOverflowError(SizeGuardError):
    def __init__(self, layer, width, limit):
        self.layer = layer
        self.width = width
        self.limit = limit
        super().__init__(
            f"frontier layer {layer} exceeded {limit} stored solutions (reached {width})"
        )
