"""Einstein obstruction tests: Hitchin-Thorpe, its L2 refinement, and the
splitting argument for cusped manifolds.

Margins are exact rationals oriented so that a negative margin means the
inequality fails. The L2 signature correction for a fibered cusp with
cross-section Euler number e > 0 is (e - 3)/3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import EQUALITY, VIOLATED, CuspedManifold, Verdict
from .errors import InconsistentVerdictError, InvariantError, NonPositiveCuspError

_HT_EQUALITY = "either X is flat or the universal cover of X is a K3 surface"
_DW_EQUALITY = "(X, g) is a complete Calabi-Yau manifold"


def hitchin_thorpe(chi: int, tau: int) -> Verdict:
    """Closed-manifold test chi >= (3/2)|tau|; margin chi - (3/2)|tau|."""
    if not isinstance(chi, int) or not isinstance(tau, int):
        raise InvariantError("chi and tau must be integers")
    margin = Fraction(2 * chi - 3 * abs(tau), 2)
    return Verdict.from_margin(
        margin,
        strict="strict inequality: no obstruction from this test",
        equality=_HT_EQUALITY,
        violated="no Einstein metric exists: chi < (3/2)|tau|",
    )


def l2_signature(tau: int, cusps) -> Fraction:
    """L2 signature of a manifold with fibered cusps: tau + sum (e - 3)/3."""
    if not isinstance(tau, int):
        raise InvariantError("tau must be an integer")
    cusps = tuple(cusps)
    for e in cusps:
        if not isinstance(e, int) or e <= 0:
            raise NonPositiveCuspError(f"cusp Euler numbers must be positive, got {e!r}")
    return Fraction(3 * tau + sum(e - 3 for e in cusps), 3)


def dai_wei(m: CuspedManifold) -> Verdict:
    """Cusped refinement chi >= (3/2)|tau_L2|; agrees with Hitchin-Thorpe when closed."""
    s = 3 * m.tau + sum(e - 3 for e in m.cusps)  # 3 * l2_signature
    margin = Fraction(2 * m.chi - abs(s), 2)
    return Verdict.from_margin(
        margin,
        strict="strict inequality: no obstruction from this test",
        equality=_DW_EQUALITY,
        violated="no Einstein metric with fibered cusp structure: chi < (3/2)|tau_L2|",
    )


@dataclass(frozen=True)
class SplittingReport:
    """What the equality/violation cases rule out, with the theorems used."""

    obstruction: bool
    verdict: str
    reasons: tuple[str, ...]
    citations: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "obstruction": self.obstruction,
            "verdict": self.verdict,
            "reasons": list(self.reasons),
            "citations": list(self.citations),
        }


def splitting_report(m: CuspedManifold, dw: Verdict) -> SplittingReport:
    """Interpret a Dai-Wei verdict for m; the verdict must match recomputation.

    Equality forces any Einstein metric with fibered cusps to be Ricci-flat.
    With at least two cusps a Ricci-flat manifold contains a line, so it
    splits off a flat factor and chi must vanish; nonzero chi is therefore a
    full obstruction. With exactly one cusp only the Ricci-flat (zero Einstein
    constant) case is excluded.
    """
    if dw != dai_wei(m):
        raise InconsistentVerdictError("supplied verdict does not match this manifold")
    if dw.status == VIOLATED:
        return SplittingReport(
            obstruction=True,
            verdict="no Einstein metric",
            reasons=(
                f"chi = {m.chi} is smaller than (3/2)|tau_L2| (margin {dw.margin})",
            ),
            citations=("Hitchin-Thorpe",) if not m.cusps else ("Dai-Wei",),
        )
    if dw.status == EQUALITY and len(m.cusps) >= 2 and m.chi != 0:
        return SplittingReport(
            obstruction=True,
            verdict="no complete Einstein metric with fibered cusp structure at infinity",
            reasons=(
                "equality forces any such metric to be Ricci-flat",
                f"a complete Ricci-flat manifold with {len(m.cusps)} >= 2 ends "
                "contains a line, so it splits isometrically and chi = 0, "
                f"contradicting chi = {m.chi}",
            ),
            citations=("Dai-Wei", "Cheeger-Gromoll"),
        )
    if dw.status == EQUALITY and len(m.cusps) == 1:
        return SplittingReport(
            obstruction=False,
            verdict="an Einstein metric asymptotic to a complex-hyperbolic one cannot be Ricci flat",
            reasons=(
                "equality forces any such metric to be Ricci-flat",
                "a single end gives no line, so only the zero Einstein constant is excluded; "
                "a metric with negative Einstein constant is not ruled out",
            ),
            citations=("Dai-Wei",),
        )
    return SplittingReport(
        obstruction=False,
        verdict="no obstruction from this test",
        reasons=(f"margin {dw.margin} leaves the inequality slack or vacuous",),
        citations=(),
    )
