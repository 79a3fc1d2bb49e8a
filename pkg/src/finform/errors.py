"""Exception types raised by the engine."""

from __future__ import annotations


class GroupError(Exception):
    """Base class for all engine errors."""


class NotAGroup(GroupError):
    """A multiplication table violates a group axiom.

    ``witness`` carries the offending triple/pair/element so the failure
    can be replayed.
    """

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class NotNormal(GroupError):
    """A subgroup required to be normal is moved by conjugation.

    ``witness`` is a pair (g, x) with x in the subgroup and g^-1*x*g not.
    """

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class NotCentralized(GroupError):
    """An element required to centralize a section moves one of its cosets."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class OrderCapExceeded(GroupError):
    """A construction would produce a group larger than the configured cap."""


class SearchBudgetExceeded(GroupError):
    """A backtracking search exhausted its node budget."""


class LatticeBudgetExceeded(GroupError):
    """Subgroup-lattice enumeration was requested beyond its order budget."""


class FormationLawViolated(GroupError):
    """A residual quotient failed membership; the predicate is not a formation."""


class HypercentreNotHypercentral(GroupError):
    """The join of hypercentral normal subgroups failed its own re-check."""


class UnknownFormation(GroupError):
    """A formation selector string was not recognized."""


class GroupFileError(GroupError):
    """A group input file could not be parsed; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
