"""Exception hierarchy shared by every module.

The CLI maps these to exit codes: ``DomainError`` subclasses to 2 and
``NoConvergence`` to 3.
"""


class DegenerateError(Exception):
    """Base class for library errors."""


class DomainError(DegenerateError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class NonTerminatingExact(DomainError):
    """Exact evaluation was requested for a series that does not terminate."""


class NonTerminating(DomainError):
    """A generating function needs infinitely many terms to build."""


class NonRationalPower(DomainError):
    """A closed form needs ``(1 + lambda) ** (n / lambda)`` with ``n / lambda`` not in N0."""


class UnsupportedM(DomainError):
    pass


class LowerParamPole(DomainError):
    """A lower rising factorial vanishes before the series terminates."""


class EndpointSingularity(DomainError):
    pass


class PoleOnPath(DomainError):
    pass


class NonzeroInnerConstant(DomainError):
    """Composition with an inner series whose constant term is not zero."""


class OrderExceeded(DomainError, IndexError):
    pass


class NoConvergence(DegenerateError, ArithmeticError):
    """A numeric series failed to settle within the term budget."""
