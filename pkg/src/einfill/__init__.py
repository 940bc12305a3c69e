"""Exact-arithmetic surgery calculus for complex-hyperbolic surface families.

Builds curve configurations on abelian surfaces, passes to finite covers,
blows up incidence points, removes divisors to open cusps, fills cusps back
in, and evaluates the resulting characteristic numbers against Einstein
obstructions. All arithmetic is exact (int and Fraction); every derived
quantity is recomputed from first principles and cross-checked.
"""

from .calculus import (
    BlownPair,
    DivisorCurve,
    PairIncidence,
    blow_up,
    blow_up_all,
    fill_cusps,
    log_bmy,
    log_canonical_sq,
    remove_divisor,
)
from .core import (
    EQUALITY,
    STRICT,
    VIOLATED,
    CharNumbers,
    CuspedManifold,
    Verdict,
)
from .covers import (
    CoverHom,
    HyperplaneCensus,
    apply_cover,
    component_count,
    find_cyclic_cover,
    find_prime_cover,
    hyperplane_census,
)
from .errors import (
    BadIndexError,
    CurvesNotDisjointError,
    DisconnectedPreimageError,
    EinfillError,
    InconsistentVerdictError,
    InvariantError,
    NoCoverFoundError,
    NonEllipticDivisorError,
    NonNegativeSelfIntersectionError,
    NonPositiveCuspError,
    NonPrimitivePlaneError,
    NotTransverseError,
    UnknownPointError,
    VerificationError,
)
from .families import (
    AbelianConfig,
    CoverViewpoint,
    FamilyBuild,
    Incidence,
    build_xe,
    build_xe_detail,
    build_ye,
    build_ye_detail,
    hirzebruch_base,
    verify_cover_viewpoint,
)
from .lattice import (
    IntMatrix,
    LatticeChart,
    Plane,
    TorusPoint,
    TranslatedSubtorus,
    hnf,
    intersection_points,
    kernel_lattice,
    lattice_intersection,
    snf_diagonal,
    sublattice_index,
    transverse_index,
)
from .obstructions import (
    SplittingReport,
    dai_wei,
    hitchin_thorpe,
    l2_signature,
    splitting_report,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianConfig",
    "BadIndexError",
    "BlownPair",
    "CharNumbers",
    "CoverHom",
    "CoverViewpoint",
    "CurvesNotDisjointError",
    "CuspedManifold",
    "DisconnectedPreimageError",
    "DivisorCurve",
    "EQUALITY",
    "EinfillError",
    "FamilyBuild",
    "HyperplaneCensus",
    "InconsistentVerdictError",
    "Incidence",
    "IntMatrix",
    "InvariantError",
    "LatticeChart",
    "NoCoverFoundError",
    "NonEllipticDivisorError",
    "NonNegativeSelfIntersectionError",
    "NonPositiveCuspError",
    "NonPrimitivePlaneError",
    "NotTransverseError",
    "PairIncidence",
    "Plane",
    "SplittingReport",
    "STRICT",
    "TorusPoint",
    "TranslatedSubtorus",
    "UnknownPointError",
    "Verdict",
    "VerificationError",
    "VIOLATED",
    "apply_cover",
    "blow_up",
    "blow_up_all",
    "build_xe",
    "build_xe_detail",
    "build_ye",
    "build_ye_detail",
    "component_count",
    "dai_wei",
    "fill_cusps",
    "find_cyclic_cover",
    "find_prime_cover",
    "hirzebruch_base",
    "hitchin_thorpe",
    "hnf",
    "hyperplane_census",
    "intersection_points",
    "kernel_lattice",
    "l2_signature",
    "lattice_intersection",
    "log_bmy",
    "log_canonical_sq",
    "remove_divisor",
    "snf_diagonal",
    "splitting_report",
    "sublattice_index",
    "transverse_index",
    "verify_cover_viewpoint",
]
