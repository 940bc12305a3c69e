"""Request and report models for the service and the CLI.

Field shapes mirror the library's to_json output exactly: rationals are
{"num", "den"}, planes are 2x4 integer row lists, torus points are 4-vectors
of rationals. Every report carries the tool version and a schema version so
golden files can pin both.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1

FamilyName = Literal["hirzebruch", "xe", "ye"]
SearchMode = Literal["prime", "cyclic", "census"]


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid")


class Rational(_Model):
    num: int
    den: int = Field(ge=1)


# a torus point: four rationals in [0, 1)
Point = list[Rational]

# a plane: two integer 4-vector rows (reduced row HNF)
PlaneRows = list[list[int]]


class VerdictOut(_Model):
    status: Literal["STRICT", "EQUALITY", "VIOLATED"]
    margin: Rational
    note: str


class CharNumbersOut(_Model):
    chi: int
    tau: int
    c1sq: int | None


class CuspedOut(_Model):
    chi: int
    tau: int
    cusps: list[int]


class CoverHomOut(_Model):
    n: int = Field(ge=1)
    phi: list[int] = Field(min_length=4, max_length=4)


class CensusOut(_Model):
    total: int
    bad: int
    good: int
    per_plane_bad: list[int]


class ConfigCurveOut(_Model):
    id: str
    plane: PlaneRows
    offset: list[Rational]


class ConfigIncidenceOut(_Model):
    point: Point
    curves: list[str]


class ConfigOut(_Model):
    basis: list[str]
    chars: CharNumbersOut
    curves: list[ConfigCurveOut]
    incidences: list[ConfigIncidenceOut]


class PairCurveOut(_Model):
    id: str
    genus: int
    self_int: int


class PairIncidenceOut(_Model):
    point_id: str
    point: Point
    curves: list[str]


class BlownPairOut(_Model):
    chars: CharNumbersOut
    curves: list[PairCurveOut]
    incidences: list[PairIncidenceOut]
    blowup_count: int


class SplittingOut(_Model):
    obstruction: bool
    verdict: str
    reasons: list[str]
    citations: list[str]


class FamilyRequest(_Model):
    name: FamilyName
    e: int = Field(default=1, ge=1)


class FillRequest(_Model):
    name: FamilyName
    e: int = Field(default=1, ge=1)
    selection: str = "all"


class CheckRequest(_Model):
    chi: int
    tau: int
    cusps: list[int] = Field(default_factory=list)


class CoverSearchRequest(_Model):
    mode: SearchMode
    n: int = Field(ge=2)
    # flat list of integer 4-vectors, consecutive pairs spanning one plane each;
    # omitted means the four base-configuration planes
    planes: list[list[int]] | None = None


class PointsRequest(_Model):
    planes: list[list[int]] | None = None


class _Report(_Model):
    schema_version: int
    version: str


class FamilyReport(_Report):
    input: FamilyRequest
    cover: CoverHomOut | None
    config: ConfigOut
    pair: BlownPairOut
    cusped: CuspedOut
    log_canonical_sq: int
    log_bmy: VerdictOut


class FillReport(_Report):
    input: FillRequest
    before: CuspedOut
    filled_indices: list[int]
    after: CuspedOut
    verdict_kind: Literal["hitchin_thorpe", "dai_wei"]
    verdict: VerdictOut
    l2_signature: Rational
    splitting: SplittingOut


class CheckReport(_Report):
    input: CheckRequest
    manifold: CuspedOut
    hitchin_thorpe: VerdictOut | None
    dai_wei: VerdictOut
    l2_signature: Rational
    splitting: SplittingOut


class CoverSearchReport(_Report):
    input: CoverSearchRequest
    planes: list[PlaneRows]
    cover: CoverHomOut | None
    census: CensusOut | None
    bound: int | None
    bound_holds: bool | None


class PairPointsOut(_Model):
    i: int
    j: int
    index: int | None
    points: list[Point] | None
    note: str


class PointsReport(_Report):
    input: PointsRequest
    planes: list[PlaneRows]
    pairs: list[PairPointsOut]
