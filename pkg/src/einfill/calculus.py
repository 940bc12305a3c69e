"""Surface surgery bookkeeping at the level of characteristic numbers.

A BlownPair is a compact complex surface carrying a configuration of curves:
blow-ups separate the curves while tracking (chi, tau, c1^2) and
self-intersections; removing a disjoint elliptic divisor produces the cusped
open manifold; filling cusps is pure (chi, tau) bookkeeping. All effects are
the exact classical formulas, nothing is estimated.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

from .core import CharNumbers, CuspedManifold, Verdict
from .errors import (
    BadIndexError,
    CurvesNotDisjointError,
    InvariantError,
    NonEllipticDivisorError,
    NonNegativeSelfIntersectionError,
    UnknownPointError,
)
from .lattice import TorusPoint

if TYPE_CHECKING:  # pragma: no cover
    from .families import AbelianConfig


@dataclass(frozen=True)
class DivisorCurve:
    id: str
    genus: int
    self_int: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise InvariantError("genus must be a non-negative integer")
        if not isinstance(self.self_int, int):
            raise InvariantError("self-intersection must be an integer")


@dataclass(frozen=True)
class PairIncidence:
    """A multi-point of the configuration, named so blow-ups can address it."""

    point_id: str
    coords: TorusPoint
    curves: tuple[str, ...]


@dataclass(frozen=True)
class BlownPair:
    """Compact surface plus curve configuration, tracked through blow-ups."""

    chars: CharNumbers
    curves: tuple[DivisorCurve, ...]
    incidences: tuple[PairIncidence, ...]
    blowup_count: int = 0

    def __post_init__(self):
        ids = [c.id for c in self.curves]
        if len(set(ids)) != len(ids):
            raise InvariantError("curve ids must be unique")
        known = set(ids)
        for inc in self.incidences:
            missing = [cid for cid in inc.curves if cid not in known]
            if missing:
                raise InvariantError(f"incidence {inc.point_id} references unknown curves {missing}")

    @classmethod
    def from_config(cls, config: "AbelianConfig") -> BlownPair:
        """Start from an abelian configuration: subtori are elliptic with square 0."""
        curves = tuple(DivisorCurve(cid, 1, 0) for cid, _ in config.curves)
        incidences = tuple(
            PairIncidence(f"p{i}", inc.point, inc.curves)
            for i, inc in enumerate(config.incidences)
        )
        return cls(chars=config.chars, curves=curves, incidences=incidences)

    def curve(self, cid: str) -> DivisorCurve:
        for c in self.curves:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def to_json(self) -> dict:
        return {
            "chars": self.chars.to_json(),
            "curves": [
                {"id": c.id, "genus": c.genus, "self_int": c.self_int} for c in self.curves
            ],
            "incidences": [
                {"point_id": i.point_id, "point": i.coords.to_json(), "curves": list(i.curves)}
                for i in self.incidences
            ],
            "blowup_count": self.blowup_count,
        }


def blow_up(pair: BlownPair, point_id: str) -> BlownPair:
    """Blow up one incidence point: chi + 1, c1^2 - 1, tau - 1.

    Every curve through the point is a smooth branch with distinct tangent, so
    each proper transform drops its self-intersection by one and the point
    disappears from the incidence list. The exceptional curve is counted via
    blowup_count, not added to the divisor.
    """
    target = next((i for i in pair.incidences if i.point_id == point_id), None)
    if target is None:
        raise UnknownPointError(point_id)
    ch = pair.chars
    if ch.c1sq is None:
        raise InvariantError("blow-up needs c1^2 to be tracked")
    new_chars = CharNumbers(chi=ch.chi + 1, tau=ch.tau - 1, c1sq=ch.c1sq - 1)
    hit = set(target.curves)
    new_curves = tuple(
        replace(c, self_int=c.self_int - 1) if c.id in hit else c for c in pair.curves
    )
    new_inc = tuple(i for i in pair.incidences if i.point_id != point_id)
    return BlownPair(new_chars, new_curves, new_inc, pair.blowup_count + 1)


def blow_up_all(pair: BlownPair) -> BlownPair:
    """Blow up every incidence point, in point-id order."""
    for pid in sorted(i.point_id for i in pair.incidences):
        pair = blow_up(pair, pid)
    return pair


def _require_disjoint_elliptic(pair: BlownPair) -> None:
    if pair.incidences:
        raise CurvesNotDisjointError(
            f"{len(pair.incidences)} incidence points remain; blow up first"
        )
    bad = [c.id for c in pair.curves if c.genus != 1]
    if bad:
        raise NonEllipticDivisorError(f"curves {bad} are not genus 1")


def log_canonical_sq(pair: BlownPair) -> int:
    """(K + D)^2 for the disjoint elliptic divisor D: equals c1^2 - sum of D_j^2.

    Adjunction gives K.D_j = -D_j^2 for an elliptic curve, and disjointness
    kills the cross terms.
    """
    _require_disjoint_elliptic(pair)
    if pair.chars.c1sq is None:
        raise InvariantError("(K + D)^2 needs c1^2 to be tracked")
    return pair.chars.c1sq - sum(c.self_int for c in pair.curves)


def log_bmy(pair: BlownPair) -> Verdict:
    """Logarithmic Bogomolov-Miyaoka-Yau test: -sum D_j^2 <= 3*chi - c1^2.

    Margin is (3*chi - c1^2) - (-sum D_j^2), so violation is negative.
    """
    _require_disjoint_elliptic(pair)
    if pair.chars.c1sq is None:
        raise InvariantError("log-BMY needs c1^2 to be tracked")
    margin = 3 * pair.chars.chi - pair.chars.c1sq + sum(c.self_int for c in pair.curves)
    return Verdict.from_margin(
        margin,
        strict="strict inequality: no equality structure forced on the complement",
        equality="the divisor complement admits a complete complex-hyperbolic metric (Tian-Yau)",
        violated="no complete complex-hyperbolic structure: logarithmic BMY fails",
    )


def remove_divisor(pair: BlownPair) -> CuspedManifold:
    """Remove the disjoint elliptic divisor, opening one cusp per curve.

    Cusp cross-sections have Euler number -D_j^2 (hence the requirement
    D_j^2 < 0); chi is unchanged since the curves have chi = 0, and the
    signature gains +1 per removed curve.
    """
    _require_disjoint_elliptic(pair)
    nonneg = [c.id for c in pair.curves if c.self_int >= 0]
    if nonneg:
        raise NonNegativeSelfIntersectionError(
            f"curves {nonneg} have self-intersection >= 0"
        )
    cusps = tuple(-c.self_int for c in pair.curves)
    return CuspedManifold(
        chi=pair.chars.chi,
        tau=pair.chars.tau + len(pair.curves),
        cusps=cusps,
    )


def fill_cusps(m: CuspedManifold, indices) -> CuspedManifold:
    """Fill the selected cusps: each filling drops the signature by one.

    chi is unchanged. Indices must be distinct and in range.
    """
    chosen = list(indices)
    seen = set()
    for i in chosen:
        if not isinstance(i, int) or i < 0 or i >= len(m.cusps):
            raise BadIndexError(f"cusp index {i!r} out of range for {len(m.cusps)} cusps")
        if i in seen:
            raise BadIndexError(f"cusp index {i} repeated")
        seen.add(i)
    remaining = tuple(c for k, c in enumerate(m.cusps) if k not in seen)
    return CuspedManifold(chi=m.chi, tau=m.tau - len(seen), cusps=remaining)
