"""Exception hierarchy shared by every evencycles module."""


class EvenCyclesError(Exception):
    """Base class for all errors raised by evencycles."""


class GraphParseError(EvenCyclesError, ValueError):
    """An edge-list line could not be parsed."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class SelfLoopError(GraphParseError):
    """An edge joins a vertex to itself."""

    def __init__(self, vertex, line_number=None):
        super().__init__(f"self-loop ({vertex}, {vertex}) rejected", line_number)
        self.edge = (vertex, vertex)


class InvalidInput(EvenCyclesError, ValueError):
    """The caller passed ids, sides or parameters the operation cannot accept."""


class ContractViolation(EvenCyclesError, AssertionError):
    """A documented pre- or post-condition does not hold."""


class ProofCaseExhausted(ContractViolation):
    """The intra-level case analysis ran out of branches."""

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state or {}

    def __str__(self):
        lines = [super().__str__()]
        for key in sorted(self.state):
            lines.append(f"  {key}: {self.state[key]}")
        return "\n".join(lines)


class NotHypothesis(EvenCyclesError):
    """No biclique was found and the counting hypothesis does not hold."""


class BelowThreshold(EvenCyclesError):
    """The density hypothesis is unmet and the search came back empty."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class BipartitionCase(EvenCyclesError):
    """The vertex split properly 2-colours the theta graph."""


class InfeasibleTrim(EvenCyclesError):
    """An even path could not be trimmed to the requested length."""


class Exhausted(EvenCyclesError):
    """Ball refinement deleted every vertex."""


class InsufficientS(EvenCyclesError, ValueError):
    """A biclique is too small to carve the requested cycles from."""


class GreedyStuck(EvenCyclesError):
    """A greedy construction could not place its next piece."""

    def __init__(self, message, index=None, partial=None):
        super().__init__(message)
        self.index = index
        self.partial = partial


class ClassificationFailed(EvenCyclesError):
    """An anchor pair supports neither a length-3 nor a length-4 segment."""


class BudgetExceeded(EvenCyclesError):
    """A search spent its node budget before reaching a verdict."""

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes


class UnsatisfiableDensity(EvenCyclesError):
    """The random generator could not reach the requested average degree."""
