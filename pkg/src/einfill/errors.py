"""Named error types raised at the library boundary.

Everything derives from EinfillError so callers can catch domain failures
without swallowing programming errors; most also subclass ValueError since
they signal bad input values.
"""

from __future__ import annotations


class EinfillError(Exception):
    """Base class for all domain errors raised by this package."""


class InvariantError(EinfillError, ValueError):
    """A type invariant was violated at construction time."""


class NotTransverseError(EinfillError, ValueError):
    """Two planes share a nonzero rational direction where transversality is required."""


class NonPrimitivePlaneError(EinfillError, ValueError):
    """A plane basis does not span a saturated sublattice.

    The point solver counts embedded intersection points; an unsaturated basis
    parametrizes its subtorus with multiplicity and would silently undercount.
    """


class NoCoverFoundError(EinfillError, LookupError):
    """Exhaustive covector search finished without a valid cover."""


class DisconnectedPreimageError(EinfillError, ValueError):
    """A curve's preimage under the requested cover is disconnected."""

    def __init__(self, curve_id: str, components: int):
        self.curve_id = curve_id
        self.components = components
        super().__init__(
            f"curve {curve_id!r} lifts to {components} components; cover requires 1"
        )


class UnknownPointError(EinfillError, KeyError):
    """Blow-up requested at a point that is not in the incidence list."""


class NonEllipticDivisorError(EinfillError, ValueError):
    """An operation requiring genus-1 divisor curves met a different genus."""


class NonNegativeSelfIntersectionError(EinfillError, ValueError):
    """Divisor removal requires every curve to have negative self-intersection."""


class CurvesNotDisjointError(EinfillError, ValueError):
    """Divisor removal requires the curves to be pairwise disjoint."""


class BadIndexError(EinfillError, IndexError):
    """A cusp index selection is out of range or repeats an index."""


class NonPositiveCuspError(EinfillError, ValueError):
    """Cusp cross-section Euler numbers must be positive."""


class InconsistentVerdictError(EinfillError, ValueError):
    """A verdict passed alongside a manifold does not match recomputation."""


class VerificationError(EinfillError, RuntimeError):
    """An internal cross-check failed; the computed object contradicts itself."""
