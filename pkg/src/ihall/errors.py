"""Exception types raised across the package.

Validation failures name the violated invariant; "bug signal" errors mark
conditions that cannot occur for valid Dynkin input unless the code is wrong.
"""


class IHallError(Exception):
    """Base class for all package errors."""


# --- quiver validation ---

class NotDynkin(IHallError):
    """Underlying graph is not a disjoint union of ADE diagrams."""


class Cyclic(IHallError):
    """Quiver has an oriented cycle."""


class NotInvolution(IHallError):
    """The given vertex map is not an involutive quiver automorphism."""


class AdjacentOrbit(IHallError):
    """Some orbit {i, rho(i)} with rho(i) != i is adjacent in the graph."""


class NotASink(IHallError):
    """Reflection requested at a vertex that is not a sink."""


# --- modules over F_q ---

class ShapeMismatch(IHallError):
    """Representations live over different quivers or primes."""


class DimMismatch(IHallError):
    """Dimension vectors do not add up."""


class BudgetExceeded(IHallError):
    """Enumeration exceeded the configured candidate budget."""

    def __init__(self, message, budget=None, spent=None):
        super().__init__(message)
        self.budget = budget
        self.spent = spent


class InconsistentFingerprint(IHallError):
    """Hom fingerprint is not realized by any module class (bug signal)."""


# --- generic polynomials ---

class StabilizationFailed(IHallError):
    """Interpolation did not stabilize within the configured prime list."""


class NonIntegralCoefficient(IHallError):
    """A structure constant left Z[v^(1/2), v^(-1/2)] (bug signal)."""


# --- algebra layers ---

class KindUnavailable(IHallError):
    """Generator kind not defined for this iquiver."""


class RankDeficient(IHallError):
    """Generator monomials failed to span a graded piece (bug signal)."""


class NonSolvableResidual(IHallError):
    """Bar residual has a nonzero symmetric part (bug signal)."""


class NonRationalCoefficient(IHallError):
    """A Fourier coefficient failed the rationality check (bug signal)."""


# --- persistence ---

class CacheError(IHallError):
    """Cache file is corrupt, stale or fails a spot check."""


class FormatError(IHallError):
    """A serialized quiver/element/report file violates its schema."""
