"""Concrete curve configurations on abelian surfaces and the derived families.

The base configuration lives on the square of the hexagonal elliptic curve
C / Z[1, zeta] with zeta = exp(i*pi/6*2) a primitive sixth root of unity
satisfying zeta^2 = zeta - 1. Homology coordinates are taken in the basis
(z:1, z:zeta, w:1, w:zeta), one loop per lattice generator and factor.

Incidence data is always recomputed from the planes and offsets by the exact
congruence solver; the builders then check the recomputed structure against
what the construction demands and refuse to hand out anything inconsistent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .calculus import BlownPair, blow_up_all, remove_divisor
from .core import CharNumbers, CuspedManifold
from .covers import CoverHom, apply_cover, component_count, find_cyclic_cover
from .errors import (
    InvariantError,
    NotTransverseError,
    VerificationError,
)
from .lattice import (
    Plane,
    TorusPoint,
    TranslatedSubtorus,
    intersection_points,
    transverse_index,
)


@dataclass(frozen=True)
class Incidence:
    point: TorusPoint
    curves: tuple[str, ...]


@dataclass(frozen=True)
class AbelianConfig:
    """Curve configuration on T^4 with recomputed incidence data.

    curves is an ordered tuple of (id, translated subtorus); incidences list
    every point lying on at least two curves, with the full set of curves
    through it. Construct via assemble, which derives the incidences.
    """

    basis: tuple[str, str, str, str]
    curves: tuple[tuple[str, TranslatedSubtorus], ...]
    chars: CharNumbers
    incidences: tuple[Incidence, ...]

    @classmethod
    def assemble(cls, basis, curves, chars) -> AbelianConfig:
        basis = tuple(str(b) for b in basis)
        if len(basis) != 4:
            raise InvariantError("ambient basis needs four labels")
        curves = tuple((str(cid), torus) for cid, torus in curves)
        ids = [cid for cid, _ in curves]
        if len(set(ids)) != len(ids):
            raise InvariantError("curve ids must be unique")
        return cls(basis, curves, chars, _compute_incidences(curves))

    def curve(self, cid: str) -> TranslatedSubtorus:
        for k, torus in self.curves:
            if k == cid:
                return torus
        raise KeyError(cid)

    def to_json(self) -> dict:
        return {
            "basis": list(self.basis),
            "chars": self.chars.to_json(),
            "curves": [
                {"id": cid, **torus.to_json()} for cid, torus in self.curves
            ],
            "incidences": [
                {"point": inc.point.to_json(), "curves": list(inc.curves)}
                for inc in self.incidences
            ],
        }


def _compute_incidences(curves) -> tuple[Incidence, ...]:
    points: set[TorusPoint] = set()
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            a_id, a = curves[i]
            b_id, b = curves[j]
            if a.plane.saturation() == b.plane.saturation():
                # parallel subtori: coincident is a degenerate configuration
                if a.contains(TorusPoint(b.offset)):
                    raise InvariantError(f"curves {a_id!r} and {b_id!r} coincide")
                continue
            try:
                pts = intersection_points(a, b)
            except NotTransverseError:
                raise NotTransverseError(
                    f"curves {a_id!r} and {b_id!r} overlap in a line direction; "
                    "only transverse or parallel pairs are supported"
                )
            points.update(pts)
    out = []
    for pt in sorted(points):
        through = tuple(cid for cid, torus in curves if torus.contains(pt))
        if len(through) < 2:
            raise VerificationError(
                f"solver point {pt.coords} lies on {len(through)} curves"
            )
        out.append(Incidence(pt, through))
    return tuple(out)


_E1 = (1, 0, 0, 0)
_E2 = (0, 1, 0, 0)
_E3 = (0, 0, 1, 0)
_E4 = (0, 0, 0, 1)


def hirzebruch_base() -> AbelianConfig:
    """Four elliptic curves through the origin of the self-product torus.

    In the basis (z:1, z:zeta, w:1, w:zeta): the horizontal w = 0, the
    vertical z = 0, the diagonal w = z, and the twisted diagonal w = zeta*z
    whose plane picks up zeta^2 = zeta - 1. All six pairs meet transversally
    with index 1, at the origin only, making one quadruple point.
    """
    curves = (
        ("w=0", TranslatedSubtorus.at(Plane.span(_E1, _E2))),
        ("z=0", TranslatedSubtorus.at(Plane.span(_E3, _E4))),
        ("w=z", TranslatedSubtorus.at(Plane.span((1, 0, 1, 0), (0, 1, 0, 1)))),
        ("w=zeta*z", TranslatedSubtorus.at(Plane.span((1, 0, 0, 1), (0, 1, -1, 1)))),
    )
    config = AbelianConfig.assemble(
        basis=("z:1", "z:zeta", "w:1", "w:zeta"),
        curves=curves,
        chars=CharNumbers(chi=0, tau=0, c1sq=0),
    )
    for i in range(4):
        for j in range(i + 1, 4):
            idx = transverse_index(curves[i][1].plane, curves[j][1].plane)
            if idx != 1:
                raise VerificationError(
                    f"pair ({curves[i][0]}, {curves[j][0]}) has index {idx}, expected 1"
                )
    origin = TorusPoint.of(0, 0, 0, 0)
    if len(config.incidences) != 1 or config.incidences[0].point != origin:
        raise VerificationError("expected exactly the origin as a quadruple point")
    if len(config.incidences[0].curves) != 4:
        raise VerificationError("origin is not a quadruple point")
    return config


@dataclass(frozen=True)
class FamilyBuild:
    """Everything a family construction produced, for reports and certificates."""

    name: str
    e: int
    cover: CoverHom | None
    config: AbelianConfig
    pair: BlownPair
    cusped: CuspedManifold


def _check_quadruple_points(config: AbelianConfig, e: int) -> None:
    if len(config.incidences) != e:
        raise VerificationError(
            f"expected {e} incidence points, solver found {len(config.incidences)}"
        )
    for inc in config.incidences:
        if len(inc.curves) != 4:
            raise VerificationError(
                f"point {inc.point.coords} lies on {len(inc.curves)} curves, expected 4"
            )


def build_xe_detail(e: int) -> FamilyBuild:
    """Degree-e connected cyclic cover of the base configuration, blown up and opened.

    e = 1 skips the cover. The cover covector is found by exhaustive search;
    all four curves lift connectedly, the e quadruple points are recomputed and
    blown up, and removing the divisor opens four cusps of Euler number e.
    """
    if not isinstance(e, int) or e < 1:
        raise InvariantError("family parameter e must be a positive integer")
    base = hirzebruch_base()
    if e == 1:
        cover = None
        config = base
    else:
        cover = find_cyclic_cover(e, [t.plane for _, t in base.curves])
        config = apply_cover(base, cover)
    _check_quadruple_points(config, e)
    pair = blow_up_all(BlownPair.from_config(config))
    expected = CharNumbers(chi=e, tau=-e, c1sq=-e)
    if pair.chars != expected:
        raise VerificationError(f"blow-up bookkeeping produced {pair.chars}, expected {expected}")
    wrong = [c.id for c in pair.curves if c.self_int != -e or c.genus != 1]
    if wrong:
        raise VerificationError(f"curves {wrong} did not land on self-intersection {-e}")
    cusped = remove_divisor(pair)
    if cusped.cusps != (e, e, e, e) or cusped.tau != -e + 4:
        raise VerificationError("divisor removal disagrees with the construction")
    return FamilyBuild("xe", e, cover, config, pair, cusped)


def build_xe(e: int) -> tuple[BlownPair, CuspedManifold]:
    built = build_xe_detail(e)
    return built.pair, built.cusped


def build_ye_detail(e: int) -> FamilyBuild:
    """Configuration with a disconnected vertical: three diagonals plus e verticals.

    The z-factor carries the lattice Z[e, zeta], so the verticals z = k for
    k = 0..e-1 are distinct; in homology coordinates (z:e, z:zeta, w:1, w:zeta)
    the diagonal planes pick up a factor e in the w-columns. The solver must
    find exactly e quadruple points, each on the three diagonals and exactly
    one vertical; blowing up leaves the diagonals at -e and the verticals at
    -1, and removal opens cusps (e, e, e, 1 x e).
    """
    if not isinstance(e, int) or e < 1:
        raise InvariantError("family parameter e must be a positive integer")
    diagonals = (
        ("w=0", TranslatedSubtorus.at(Plane.span(_E1, _E2))),
        ("w=z", TranslatedSubtorus.at(Plane.span((1, 0, e, 0), (0, 1, 0, 1)))),
        ("w=zeta*z", TranslatedSubtorus.at(Plane.span((1, 0, 0, e), (0, 1, -1, 1)))),
    )
    verticals = tuple(
        (
            f"z={k}",
            TranslatedSubtorus.at(Plane.span(_E3, _E4), (Fraction(k, e), 0, 0, 0)),
        )
        for k in range(e)
    )
    config = AbelianConfig.assemble(
        basis=(f"z:{e}", "z:zeta", "w:1", "w:zeta"),
        curves=diagonals + verticals,
        chars=CharNumbers(chi=0, tau=0, c1sq=0),
    )
    _check_quadruple_points(config, e)
    diag_ids = {cid for cid, _ in diagonals}
    seen_verticals = []
    for inc in config.incidences:
        through = set(inc.curves)
        if not diag_ids <= through:
            raise VerificationError(
                f"point {inc.point.coords} misses a diagonal: {sorted(through)}"
            )
        vs = sorted(through - diag_ids)
        if len(vs) != 1:
            raise VerificationError(
                f"point {inc.point.coords} lies on {len(vs)} verticals, expected 1"
            )
        seen_verticals.append(vs[0])
    if sorted(seen_verticals) != sorted(cid for cid, _ in verticals):
        raise VerificationError("verticals and quadruple points do not pair up")
    pair = blow_up_all(BlownPair.from_config(config))
    expected = CharNumbers(chi=e, tau=-e, c1sq=-e)
    if pair.chars != expected:
        raise VerificationError(f"blow-up bookkeeping produced {pair.chars}, expected {expected}")
    for c in pair.curves:
        want = -e if c.id in diag_ids else -1
        if c.self_int != want:
            raise VerificationError(f"curve {c.id} ended at {c.self_int}, expected {want}")
    cusped = remove_divisor(pair)
    if cusped.cusps != (e, e, e) + (1,) * e or cusped.tau != 3:
        raise VerificationError("divisor removal disagrees with the construction")
    return FamilyBuild("ye", e, None, config, pair, cusped)


def build_ye(e: int) -> tuple[BlownPair, CuspedManifold]:
    built = build_ye_detail(e)
    return built.pair, built.cusped


@dataclass(frozen=True)
class CoverViewpoint:
    """Component counts of the base curves under the z-direction degree-e cover."""

    e: int
    cover: CoverHom
    components: tuple[tuple[str, int], ...]
    disconnected: str

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "cover": self.cover.to_json(),
            "components": {cid: n for cid, n in self.components},
            "disconnected": self.disconnected,
        }


def verify_cover_viewpoint(e: int) -> CoverViewpoint:
    """Check that the direct construction is the z-projection cover of the base.

    The covector (1, 0, 0, 0) mod e kills the vertical plane, so z = 0 lifts
    to e components (the verticals of the direct construction) while the three
    diagonal curves lift connectedly.
    """
    if not isinstance(e, int) or e < 2:
        raise InvariantError("cover degree must be an integer >= 2")
    base = hirzebruch_base()
    cover = CoverHom(e, (1, 0, 0, 0))
    counts = tuple(
        (cid, component_count(cover, torus.plane)) for cid, torus in base.curves
    )
    by_id = dict(counts)
    if by_id["z=0"] != e:
        raise VerificationError(f"vertical lifted to {by_id['z=0']} components, expected {e}")
    connected = [cid for cid in ("w=0", "w=z", "w=zeta*z") if by_id[cid] != 1]
    if connected:
        raise VerificationError(f"curves {connected} should lift connectedly")
    ye = build_ye_detail(e)
    n_vert = sum(1 for cid, _ in ye.config.curves if cid.startswith("z="))
    if n_vert != by_id["z=0"]:
        raise VerificationError(
            f"direct construction has {n_vert} verticals, cover predicts {by_id['z=0']}"
        )
    return CoverViewpoint(e=e, cover=cover, components=counts, disconnected="z=0")
