"""Exact integer lattice engine for rank-2 planes in Z^4 and subtori of T^4.

Everything here is arbitrary-precision integer or Fraction arithmetic: Hermite
and Smith normal forms, integer kernels, congruence kernels, determinant and
adjugate, and the congruence solver that enumerates intersection points of
translated subtori. No floating point anywhere; all canonical forms are unique
so equality of planes and points is syntactic.

Conventions: vectors are rows, lattices are row spans, and the Hermite normal
form is row-style (pivots positive, entries above a pivot reduced into
[0, pivot), zero rows sunk to the bottom).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from .errors import (
    InvariantError,
    NonPrimitivePlaneError,
    NotTransverseError,
    VerificationError,
)

Vec = tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# raw row-matrix helpers (lists of lists of int)


def _hnf_transform(rows) -> tuple[list[list[int]], list[list[int]]]:
    """Row HNF with transform: returns (h, t) with t unimodular and t @ rows = h."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    h = [[int(x) for x in r] for r in rows]
    t = [[int(i == j) for j in range(m)] for i in range(m)]
    row = 0
    for col in range(n):
        if row == m:
            break
        while True:
            nz = [i for i in range(row, m) if h[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(h[i][col]), i))
            if i0 != row:
                h[row], h[i0] = h[i0], h[row]
                t[row], t[i0] = t[i0], t[row]
            if all(h[i][col] == 0 for i in range(row + 1, m)):
                break
            p = h[row][col]
            for i in range(row + 1, m):
                if h[i][col]:
                    q = h[i][col] // p
                    if q:
                        h[i] = [a - q * b for a, b in zip(h[i], h[row])]
                        t[i] = [a - q * b for a, b in zip(t[i], t[row])]
        if row < m and h[row][col] != 0:
            if h[row][col] < 0:
                h[row] = [-a for a in h[row]]
                t[row] = [-a for a in t[row]]
            p = h[row][col]
            for i in range(row):
                q = h[i][col] // p
                if q:
                    h[i] = [a - q * b for a, b in zip(h[i], h[row])]
                    t[i] = [a - q * b for a, b in zip(t[i], t[row])]
            row += 1
    return h, t


def _hnf_rows(rows) -> list[list[int]]:
    return _hnf_transform(rows)[0]


def _left_kernel(rows) -> list[list[int]]:
    """Canonical basis of {x : x @ rows = 0}, as HNF rows."""
    h, t = _hnf_transform(rows)
    kern = [t[i] for i in range(len(h)) if all(a == 0 for a in h[i])]
    if not kern:
        return []
    return [r for r in _hnf_rows(kern) if any(r)]


def _transpose(rows) -> list[list[int]]:
    return [list(col) for col in zip(*rows)]


def _det(rows) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    a = [[int(x) for x in r] for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise InvariantError("determinant requires a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _minor(rows, i, j) -> list[list[int]]:
    return [[rows[r][c] for c in range(len(rows)) if c != j] for r in range(len(rows)) if r != i]


def _adjugate(rows) -> list[list[int]]:
    """Adjugate: rows @ adj = adj @ rows = det * identity."""
    n = len(rows)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = _det(_minor(rows, j, i))
            adj[i][j] = c if (i + j) % 2 == 0 else -c
    return adj


def _pivot_col(row) -> int | None:
    for j, a in enumerate(row):
        if a != 0:
            return j
    return None


def _reduce_against(vec, hnf_nonzero_rows):
    """Reduce vec by integer multiples of HNF rows; exact remainder, works with Fractions."""
    v = list(vec)
    for r in hnf_nonzero_rows:
        piv = _pivot_col(r)
        q = v[piv] // r[piv]
        if q:
            v = [a - q * b for a, b in zip(v, r)]
    return v

def _in_row_span(vec, hnf_nonzero_rows) -> bool:
    """Exact membership of vec in the row lattice spanned by HNF rows."""
    v = list(vec)
    for r in hnf_nonzero_rows:
        piv = _pivot_col(r)
        if v[piv] % r[piv] != 0:
            return False
        q = v[piv] // r[piv]
        v = [a - q * b for a, b in zip(v, r)]
    return not any(v)


def _congruence_kernel(mrows, modulus: int) -> list[list[int]]:
    """Canonical basis of {z in Z^r : z @ mrows = 0 (mod modulus)} for r x c input."""
    r = len(mrows)
    c = len(mrows[0])
    stacked = [list(row) for row in mrows]
    for j in range(c):
        stacked.append([modulus if k == j else 0 for k in range(c)])
    kern = _left_kernel(stacked)
    projected = [row[:r] for row in kern]
    basis = [row for row in _hnf_rows(projected) if any(row)]
    if len(basis) != r:
        raise VerificationError("congruence kernel lost rank")
    return basis


def _snf_diagonal_rows(rows) -> list[int]:
    a = [[int(x) for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    limit = min(m, n)
    res: list[int] = []
    k = 0
    while k < limit:
        best = None
        where = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    where = (i, j)
        if where is None:
            break
        i0, j0 = where
        a[k], a[i0] = a[i0], a[k]
        for r in a:
            r[k], r[j0] = r[j0], r[k]
        while True:
            dirty = False
            for i in range(k + 1, m):
                if a[i][k]:
                    q = a[i][k] // a[k][k]
                    a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        dirty = True
            for j in range(k + 1, n):
                if a[k][j]:
                    q = a[k][j] // a[k][k]
                    for r in a:
                        r[j] -= q * r[k]
                    if a[k][j]:
                        for r in a:
                            r[k], r[j] = r[j], r[k]
                        dirty = True
            if not dirty:
                break
        d = a[k][k]
        offender = None
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if a[i][j] % d != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[k] = [x + y for x, y in zip(a[k], a[offender])]
            continue
        res.append(abs(d))
        k += 1
    while len(res) < limit:
        res.append(0)
    return res


# ---------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; rows and cols positive, entries row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise InvariantError("matrix dimensions must be positive")
        ent = tuple(tuple(int(x) for x in r) for r in self.entries)
        if len(ent) != self.rows or any(len(r) != self.cols for r in ent):
            raise InvariantError("entry shape does not match declared dimensions")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_rows(cls, rows) -> IntMatrix:
        rows = [list(r) for r in rows]
        if not rows:
            raise InvariantError("matrix needs at least one row")
        return cls(len(rows), len(rows[0]), tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def row_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}


@dataclass(frozen=True)
class Plane:
    """Rank-2 sublattice of Z^4 in reduced row HNF, so equality is syntactic.

    The basis may span an unsaturated lattice (lattice_intersection returns
    those); operations that treat the plane as an embedded subtorus require
    primitivity and say so.
    """

    basis: tuple[Vec, Vec]

    def __post_init__(self):
        rows = [list(r) for r in self.basis]
        if len(rows) != 2 or any(len(r) != 4 for r in rows):
            raise InvariantError("a plane is spanned by two integer 4-vectors")
        h = [r for r in _hnf_rows(rows) if any(r)]
        if len(h) != 2:
            raise InvariantError("plane basis vectors must be linearly independent")
        object.__setattr__(self, "basis", (tuple(h[0]), tuple(h[1])))

    @classmethod
    def span(cls, u, v) -> Plane:
        return cls((tuple(int(x) for x in u), tuple(int(x) for x in v)))

    def is_primitive(self) -> bool:
        """True when the basis spans a saturated (direct summand) sublattice."""
        (a, b) = self.basis
        minors = [a[i] * b[j] - a[j] * b[i] for i in range(4) for j in range(i + 1, 4)]
        g = 0
        for m in minors:
            g = gcd(g, m)
        return g == 1

    def saturation(self) -> Plane:
        """The saturated plane with the same rational span."""
        ann = _annihilator(self.basis)
        sat = _left_kernel(_transpose(ann))
        return Plane.span(sat[0], sat[1])

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.basis]


def _annihilator(basis) -> list[list[int]]:
    """HNF basis of {w in Z^4 : <w, u> = 0 for u in basis rows}."""
    return _left_kernel(_transpose([list(r) for r in basis]))


def _frac_mod1(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


@dataclass(frozen=True, order=True)
class TorusPoint:
    """Point of T^4 = R^4 / Z^4 with rational coordinates canonicalized into [0, 1)."""

    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        if len(self.coords) != 4:
            raise InvariantError("a torus point has four coordinates")
        object.__setattr__(
            self, "coords", tuple(_frac_mod1(Fraction(c)) for c in self.coords)
        )

    @classmethod
    def of(cls, *coords) -> TorusPoint:
        return cls(tuple(Fraction(c) for c in coords))

    def to_json(self) -> list[dict]:
        return [{"num": c.numerator, "den": c.denominator} for c in self.coords]


@dataclass(frozen=True)
class TranslatedSubtorus:
    """A plane translated by a rational offset, i.e. a curve on T^4."""

    plane: Plane
    offset: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        if len(self.offset) != 4:
            raise InvariantError("offset must have four coordinates")
        object.__setattr__(
            self, "offset", tuple(_frac_mod1(Fraction(c)) for c in self.offset)
        )

    @classmethod
    def at(cls, plane: Plane, offset=(0, 0, 0, 0)) -> TranslatedSubtorus:
        return cls(plane, tuple(Fraction(c) for c in offset))

    def contains(self, point: TorusPoint) -> bool:
        """Membership of the point in the embedded subtorus (real span + offset)."""
        ann, image = _membership_data(self.plane)
        c = [
            sum((p - o) * w for p, o, w in zip(point.coords, self.offset, wrow))
            for wrow in ann
        ]
        if any(q.denominator != 1 for q in c):
            return False
        return _in_row_span([int(q) for q in c], image)

    def to_json(self) -> dict:
        return {
            "plane": self.plane.to_json(),
            "offset": [{"num": c.numerator, "den": c.denominator} for c in self.offset],
        }


@lru_cache(maxsize=None)
def _membership_data(plane: Plane):
    """(annihilator rows, HNF of the annihilator pairing image of Z^4)."""
    ann = _annihilator(plane.basis)
    image = [r for r in _hnf_rows(_transpose(ann)) if any(r)]
    return tuple(tuple(r) for r in ann), tuple(tuple(r) for r in image)


# ---------------------------------------------------------------------------
# operations


def hnf(m: IntMatrix) -> IntMatrix:
    """Reduced row Hermite normal form; same shape, row span unchanged."""
    return IntMatrix.from_rows(_hnf_rows(m.row_list()))


def snf_diagonal(m: IntMatrix) -> tuple[int, ...]:
    """Smith normal form diagonal d1 | d2 | ...; nonzero entries multiply to |det|."""
    return tuple(_snf_diagonal_rows(m.row_list()))


def transverse_index(p: Plane, q: Plane) -> int:
    """|det| of the stacked bases, the index [Z^4 : P + Q]; errors when not transverse."""
    d = _det([list(r) for r in p.basis + q.basis])
    if d == 0:
        raise NotTransverseError("planes share a nonzero rational direction")
    return abs(d)


def intersection_points(a: TranslatedSubtorus, b: TranslatedSubtorus) -> list[TorusPoint]:
    """All intersection points of two transverse translated subtori, sorted.

    Solves offset_a + s*U = offset_b + t*V (mod Z^4) exactly: one solution per
    coset of Z^4 modulo the row lattice of the stacked basis B, enumerated over
    the coset box of B's HNF. Requires primitive planes so that distinct
    congruence classes are distinct embedded points; the result length then
    equals transverse_index(plane a, plane b).
    """
    for t in (a, b):
        if not t.plane.is_primitive():
            raise NonPrimitivePlaneError(
                "intersection points are defined for embedded subtori; "
                f"plane {t.plane.basis} spans an unsaturated lattice"
            )
    u1, u2 = a.plane.basis
    v1, v2 = b.plane.basis
    brows = [list(u1), list(u2), [-x for x in v1], [-x for x in v2]]
    d = _det(brows)
    if d == 0:
        raise NotTransverseError("planes share a nonzero rational direction")
    adj = _adjugate(brows)
    c = [ob - oa for oa, ob in zip(a.offset, b.offset)]
    h = _hnf_rows(brows)
    diag = [h[i][i] for i in range(4)]
    pts = set()
    for m in product(*(range(k) for k in diag)):
        w = [ci + mi for ci, mi in zip(c, m)]
        s1 = sum(w[t] * adj[t][0] for t in range(4)) / d
        s2 = sum(w[t] * adj[t][1] for t in range(4)) / d
        coords = tuple(
            a.offset[i] + s1 * u1[i] + s2 * u2[i]
            for i in range(4)
        )
        pts.add(TorusPoint(coords))
    if len(pts) != abs(d):
        raise VerificationError(
            f"point solver found {len(pts)} points, determinant predicts {abs(d)}"
        )
    return sorted(pts)


def kernel_lattice(phi, n: int) -> IntMatrix:
    """Canonical basis of {x in Z^4 : <x, phi> = 0 (mod n)}, index n / gcd(phi, n)."""
    if not isinstance(n, int) or n < 1:
        raise InvariantError("modulus must be a positive integer")
    phi = tuple(int(x) % n for x in phi)
    if len(phi) != 4:
        raise InvariantError("phi must have four coordinates")
    basis = _congruence_kernel([[x] for x in phi], n)
    return IntMatrix.from_rows(basis)


def lattice_intersection(k: IntMatrix, p: Plane) -> Plane:
    """Basis of K intersect P for a finite-index sublattice K given by row basis."""
    if k.rows != 4 or k.cols != 4:
        raise InvariantError("sublattice basis must be a 4x4 matrix")
    brows = k.row_list()
    d = _det(brows)
    if d == 0:
        raise InvariantError("sublattice basis must have full rank")
    adj = _adjugate(brows)
    u = [list(r) for r in p.basis]
    m = [[sum(u[i][t] * adj[t][j] for t in range(4)) for j in range(4)] for i in range(2)]
    coeffs = _congruence_kernel(m, abs(d))
    new_rows = [
        [sum(z[i] * u[i][j] for i in range(2)) for j in range(4)] for z in coeffs
    ]
    return Plane.span(new_rows[0], new_rows[1])


@dataclass(frozen=True)
class LatticeChart:
    """Unimodular coordinates on a finite-index sublattice K of Z^4.

    to_sublattice maps an ambient vector lying in K to its K-coordinates;
    from_sublattice maps back. Round trips are the identity. The rational
    variants transport offsets (no membership requirement).
    """

    basis: IntMatrix

    def _det_adj(self):
        rows = self.basis.row_list()
        return _det(rows), _adjugate(rows)

    def to_sublattice(self, v) -> Vec:
        d, adj = self._det_adj()
        w = [sum(int(v[t]) * adj[t][j] for t in range(4)) for j in range(4)]
        if any(x % d for x in w):
            raise InvariantError(f"vector {tuple(v)} is not in the sublattice")
        return tuple(x // d for x in w)

    def from_sublattice(self, c) -> Vec:
        rows = self.basis.entries
        return tuple(sum(int(c[i]) * rows[i][j] for i in range(4)) for j in range(4))

    def to_sublattice_rational(self, v) -> tuple[Fraction, ...]:
        d, adj = self._det_adj()
        return tuple(
            sum(Fraction(v[t]) * adj[t][j] for t in range(4)) / d for j in range(4)
        )

    def from_sublattice_rational(self, c) -> tuple[Fraction, ...]:
        rows = self.basis.entries
        return tuple(
            sum(Fraction(c[i]) * rows[i][j] for i in range(4)) for j in range(4)
        )


def rebase(k: IntMatrix) -> LatticeChart:
    """Coordinate chart for a finite-index sublattice of Z^4 given by a row basis."""
    if k.rows != 4 or k.cols != 4:
        raise InvariantError("sublattice basis must be a 4x4 matrix")
    if _det(k.row_list()) == 0:
        raise InvariantError("sublattice basis must have full rank")
    return LatticeChart(k)


def sublattice_index(k: IntMatrix) -> int:
    """Index of the row lattice of k in Z^4 (|det| of the basis)."""
    d = _det(k.row_list())
    if d == 0:
        raise InvariantError("not a finite-index sublattice")
    return abs(d)
