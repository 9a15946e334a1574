"""Exception types shared by all alphabound modules.

Class names double as the error names printed by the CLI.
"""


class AlphaBoundError(Exception):
    """Base class for every error raised by this package."""


# graph construction
class OutOfRange(AlphaBoundError):
    """A vertex id falls outside [0, order)."""


class SelfLoop(AlphaBoundError):
    """An edge joins a vertex to itself."""


class UnknownFamily(AlphaBoundError):
    """Unrecognised graph family name."""


class BadParams(AlphaBoundError):
    """Family or operation parameters are invalid."""


class EmptyGraph(AlphaBoundError):
    """Operation undefined on a graph with no vertices."""


# spectral
class NoEdges(AlphaBoundError):
    """Operation undefined on a graph with no edges (lambda_max = 0)."""


class NoConvergence(AlphaBoundError):
    """Eigensolver exhausted its sweep budget; indicates a bug."""


class LengthMismatch(AlphaBoundError):
    """A vertex function has the wrong length."""


# finite geometry
class NotPrime(AlphaBoundError):
    """Field characteristic is not prime (or order not a prime power)."""


class TooLarge(AlphaBoundError):
    """Field order exceeds the configured limit."""


class Overflow(AlphaBoundError):
    """Projective point count exceeds the configured limit."""


class BadDimension(AlphaBoundError):
    """Dimension out of range for the requested construction."""


# bounds
class BadInputs(AlphaBoundError):
    """Bound inputs violate n >= 1, delta <= Delta < lambda."""


class NotIndependent(AlphaBoundError):
    """A vertex subset required to be independent is not."""


class Infeasible(AlphaBoundError):
    """Strongly regular parameters fail the feasibility identity."""
