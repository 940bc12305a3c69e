"""Report construction: one pure function per endpoint/subcommand.

Each handler runs the library, then re-validates the to_json output through
the pydantic report models, so the service and the CLI cannot drift apart.
Domain failures raise EinfillError subclasses; the front ends map them to
HTTP 400/500 or a nonzero exit code.
"""

from __future__ import annotations

from ..calculus import fill_cusps, log_bmy, log_canonical_sq
from ..core import CuspedManifold, rational_to_json
from ..covers import find_cyclic_cover, find_prime_cover, hyperplane_census, is_prime
from ..errors import (
    BadIndexError,
    InvariantError,
    NonPrimitivePlaneError,
    NotTransverseError,
)
from ..families import FamilyBuild, build_xe_detail, build_ye_detail, hirzebruch_base
from ..lattice import Plane, TranslatedSubtorus, intersection_points, transverse_index
from ..obstructions import dai_wei, hitchin_thorpe, l2_signature, splitting_report
from .. import __version__
from .schemas import (
    SCHEMA_VERSION,
    BlownPairOut,
    CensusOut,
    CheckReport,
    CheckRequest,
    ConfigOut,
    CoverHomOut,
    CoverSearchReport,
    CoverSearchRequest,
    CuspedOut,
    FamilyReport,
    FamilyRequest,
    FillReport,
    FillRequest,
    PairPointsOut,
    PointsReport,
    PointsRequest,
    Rational,
    SplittingOut,
    VerdictOut,
)


def version_info() -> dict:
    return {"name": "einfill", "version": __version__, "schema_version": SCHEMA_VERSION}


def _build(name: str, e: int) -> FamilyBuild:
    if name == "hirzebruch":
        if e != 1:
            raise InvariantError(
                "the base configuration is the e = 1 member; drop --e or use xe/ye"
            )
        return build_xe_detail(1)
    if name == "xe":
        return build_xe_detail(e)
    if name == "ye":
        return build_ye_detail(e)
    raise InvariantError(f"unknown family {name!r}")


def family_report(req: FamilyRequest) -> FamilyReport:
    built = _build(req.name, req.e)
    return FamilyReport(
        schema_version=SCHEMA_VERSION,
        version=__version__,
        input=req,
        cover=None if built.cover is None else CoverHomOut.model_validate(built.cover.to_json()),
        config=ConfigOut.model_validate(built.config.to_json()),
        pair=BlownPairOut.model_validate(built.pair.to_json()),
        cusped=CuspedOut.model_validate(built.cusped.to_json()),
        log_canonical_sq=log_canonical_sq(built.pair),
        log_bmy=VerdictOut.model_validate(log_bmy(built.pair).to_json()),
    )


def _parse_selection(selection: str, cusps: tuple[int, ...]) -> list[int]:
    s = selection.strip().lower()
    if s == "all":
        return list(range(len(cusps)))
    if s == "none":
        return []
    if s.startswith("euler="):
        try:
            k = int(s.removeprefix("euler="))
        except ValueError:
            raise InvariantError(f"bad Euler number in selection {selection!r}") from None
        picked = [i for i, c in enumerate(cusps) if c == k]
        if not picked:
            raise BadIndexError(f"no cusp has Euler number {k}")
        return picked
    try:
        picked = [int(part) for part in s.split(",") if part.strip()]
    except ValueError:
        raise InvariantError(
            f"selection {selection!r} is not 'all', 'none', 'euler=K', "
            "or comma-separated indices"
        ) from None
    if not picked:
        raise InvariantError("empty index selection; use 'none' to fill nothing")
    return picked


def fill_report(req: FillRequest) -> FillReport:
    built = _build(req.name, req.e)
    before = built.cusped
    indices = sorted(_parse_selection(req.selection, before.cusps))
    after = fill_cusps(before, indices)
    dw = dai_wei(after)
    if after.cusps:
        kind, verdict = "dai_wei", dw
    else:
        kind, verdict = "hitchin_thorpe", hitchin_thorpe(after.chi, after.tau)
    return FillReport(
        schema_version=SCHEMA_VERSION,
        version=__version__,
        input=req,
        before=CuspedOut.model_validate(before.to_json()),
        filled_indices=indices,
        after=CuspedOut.model_validate(after.to_json()),
        verdict_kind=kind,
        verdict=VerdictOut.model_validate(verdict.to_json()),
        l2_signature=Rational.model_validate(
            rational_to_json(l2_signature(after.tau, after.cusps))
        ),
        splitting=SplittingOut.model_validate(splitting_report(after, dw).to_json()),
    )


def check_report(req: CheckRequest) -> CheckReport:
    m = CuspedManifold(chi=req.chi, tau=req.tau, cusps=tuple(req.cusps))
    dw = dai_wei(m)
    ht = None if m.cusps else hitchin_thorpe(m.chi, m.tau)
    return CheckReport(
        schema_version=SCHEMA_VERSION,
        version=__version__,
        input=req,
        manifold=CuspedOut.model_validate(m.to_json()),
        hitchin_thorpe=None if ht is None else VerdictOut.model_validate(ht.to_json()),
        dai_wei=VerdictOut.model_validate(dw.to_json()),
        l2_signature=Rational.model_validate(
            rational_to_json(l2_signature(m.tau, m.cusps))
        ),
        splitting=SplittingOut.model_validate(splitting_report(m, dw).to_json()),
    )


def _planes_from(vectors) -> list[Plane]:
    if vectors is None:
        return [torus.plane for _, torus in hirzebruch_base().curves]
    if len(vectors) < 2 or len(vectors) % 2:
        raise InvariantError(
            "plane input must hold an even number of integer 4-vectors, two per plane"
        )
    return [Plane.span(vectors[k], vectors[k + 1]) for k in range(0, len(vectors), 2)]


def cover_search_report(req: CoverSearchRequest) -> CoverSearchReport:
    planes = _planes_from(req.planes)
    cover = census = bound = bound_holds = None
    if req.mode == "cyclic":
        cover = find_cyclic_cover(req.n, planes)
    else:
        if not is_prime(req.n):
            raise InvariantError(f"mode {req.mode!r} needs a prime modulus, got {req.n}")
        bound = (req.n**2 - 3) * (req.n + 1)
        if req.mode == "prime":
            cover = find_prime_cover(req.n, planes)
            try:
                census = hyperplane_census(req.n, planes)
            except NotTransverseError:
                census = None  # census decomposition needs pairwise transversality
        else:
            census = hyperplane_census(req.n, planes)
        if census is not None:
            bound_holds = bool(census.good >= bound > 0)
    return CoverSearchReport(
        schema_version=SCHEMA_VERSION,
        version=__version__,
        input=req,
        planes=[p.to_json() for p in planes],
        cover=None if cover is None else CoverHomOut.model_validate(cover.to_json()),
        census=None if census is None else CensusOut.model_validate(census.to_json()),
        bound=bound,
        bound_holds=bound_holds,
    )


def points_report(req: PointsRequest) -> PointsReport:
    planes = _planes_from(req.planes)
    tori = [TranslatedSubtorus.at(p) for p in planes]
    pairs = []
    for i in range(len(planes)):
        for j in range(i + 1, len(planes)):
            try:
                idx = transverse_index(planes[i], planes[j])
            except NotTransverseError:
                pairs.append(
                    PairPointsOut(
                        i=i, j=j, index=None, points=None,
                        note="not transverse: the planes share a rational direction",
                    )
                )
                continue
            try:
                pts = intersection_points(tori[i], tori[j])
            except NonPrimitivePlaneError:
                pairs.append(
                    PairPointsOut(
                        i=i, j=j, index=idx, points=None,
                        note="unsaturated plane: embedded point list not defined",
                    )
                )
                continue
            pairs.append(
                PairPointsOut(
                    i=i, j=j, index=idx,
                    points=[pt.to_json() for pt in pts],
                    note="transverse",
                )
            )
    return PointsReport(
        schema_version=SCHEMA_VERSION,
        version=__version__,
        input=req,
        planes=[p.to_json() for p in planes],
        pairs=pairs,
    )
