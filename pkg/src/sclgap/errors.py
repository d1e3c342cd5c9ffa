"""Exception types shared across the package."""


class SclGapError(Exception):
    """Base class for all package errors."""


class NotAlternating(SclGapError):
    """A word was required to alternate between a-letters and b-letters."""


class OddLength(SclGapError):
    """An even-length alternating word was required."""


class BadShape(SclGapError):
    """Power-splitting input is not of the required alternating shape."""


class NoStabilization(SclGapError):
    """First differences did not become constant within the horizon."""


class TrivialInput(SclGapError):
    """The trivial conjugacy class cannot be stabilized."""


class PowerIncompatible(SclGapError):
    """A checked letter map failed the power-compatibility requirement."""


class OracleInconsistency(SclGapError):
    """A factor oracle returned answers contradicting the group axioms."""


class DegreeOverflow(SclGapError):
    """No nonzero low-degree term found below the hard degree cap."""


class NotFullSubgraph(SclGapError):
    """The given vertex set does not induce a full subgraph."""


class UnknownVertex(SclGapError):
    """A word mentions a vertex absent from the graph."""
