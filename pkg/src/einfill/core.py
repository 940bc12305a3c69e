"""Shared domain types: characteristic numbers, verdicts, cusped manifolds.

All values are exact: integers for characteristic numbers, Fraction for
anything that can be non-integral. JSON helpers serialize rationals as
{"num": n, "den": d} with den > 0 and the fraction fully reduced, which
Fraction guarantees by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantError, NonPositiveCuspError

STRICT = "STRICT"
EQUALITY = "EQUALITY"
VIOLATED = "VIOLATED"


def rational_to_json(q: Fraction | int) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(obj["num"], obj["den"])


@dataclass(frozen=True)
class CharNumbers:
    """Characteristic numbers (chi, tau) with optional c1^2 for compact complex surfaces.

    When c1sq is present the signature relation tau = (c1sq - 2*chi) / 3 must
    hold exactly; construction rejects anything else.
    """

    chi: int
    tau: int
    c1sq: int | None = None

    def __post_init__(self):
        for name in ("chi", "tau"):
            if not isinstance(getattr(self, name), int):
                raise InvariantError(f"{name} must be an integer")
        if self.c1sq is not None:
            if not isinstance(self.c1sq, int):
                raise InvariantError("c1sq must be an integer or None")
            if 3 * self.tau != self.c1sq - 2 * self.chi:
                raise InvariantError(
                    f"signature relation violated: tau={self.tau} but "
                    f"(c1sq - 2*chi)/3 = {Fraction(self.c1sq - 2 * self.chi, 3)}"
                )

    @property
    def c2(self) -> int:
        # second Chern number of a compact complex surface equals its Euler number
        return self.chi

    def to_json(self) -> dict:
        return {"chi": self.chi, "tau": self.tau, "c1sq": self.c1sq}

    @classmethod
    def from_json(cls, obj: dict) -> CharNumbers:
        return cls(chi=obj["chi"], tau=obj["tau"], c1sq=obj.get("c1sq"))


@dataclass(frozen=True)
class Verdict:
    """Outcome of one inequality test.

    margin is oriented so that the inequality is satisfied exactly when
    margin >= 0: EQUALITY iff margin == 0, VIOLATED iff margin < 0.
    """

    status: str
    margin: Fraction
    note: str

    def __post_init__(self):
        if self.status not in (STRICT, EQUALITY, VIOLATED):
            raise InvariantError(f"unknown verdict status {self.status!r}")
        if not isinstance(self.margin, Fraction):
            object.__setattr__(self, "margin", Fraction(self.margin))
        expected = VIOLATED if self.margin < 0 else (EQUALITY if self.margin == 0 else STRICT)
        if self.status != expected:
            raise InvariantError(
                f"status {self.status} inconsistent with margin {self.margin}"
            )

    @classmethod
    def from_margin(cls, margin: Fraction | int, *, strict: str, equality: str, violated: str) -> Verdict:
        """Build a verdict from an exact margin, picking the matching note text."""
        margin = Fraction(margin)
        if margin < 0:
            return cls(VIOLATED, margin, violated)
        if margin == 0:
            return cls(EQUALITY, margin, equality)
        return cls(STRICT, margin, strict)

    def to_json(self) -> dict:
        return {"status": self.status, "margin": rational_to_json(self.margin), "note": self.note}

    @classmethod
    def from_json(cls, obj: dict) -> Verdict:
        return cls(obj["status"], rational_from_json(obj["margin"]), obj["note"])


@dataclass(frozen=True)
class CuspedManifold:
    """Open 4-manifold bookkeeping: (chi, tau) plus cusp cross-section Euler numbers."""

    chi: int
    tau: int
    cusps: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.chi, int) or not isinstance(self.tau, int):
            raise InvariantError("chi and tau must be integers")
        object.__setattr__(self, "cusps", tuple(self.cusps))
        for e in self.cusps:
            if not isinstance(e, int) or e <= 0:
                raise NonPositiveCuspError(f"cusp Euler numbers must be positive, got {e!r}")

    def to_json(self) -> dict:
        return {"chi": self.chi, "tau": self.tau, "cusps": list(self.cusps)}

    @classmethod
    def from_json(cls, obj: dict) -> CuspedManifold:
        return cls(obj["chi"], obj["tau"], tuple(obj["cusps"]))
