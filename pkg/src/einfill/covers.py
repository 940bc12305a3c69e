"""Cyclic etale covers of abelian configurations, found by covector search.

A degree-n cover of T^4 is encoded by a surjection phi: Z^4 -> Z/n; the cover
is the subtorus quotient by ker(phi). A curve with plane P lifts connectedly
iff phi(P) = Z/n, so the searches look for covectors that stay nonzero (mod
every prime dividing n) on all four curve planes. Everything is exhaustive and
exact; numpy (bounded int64) only vectorizes the hyperplane census counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .errors import (
    DisconnectedPreimageError,
    InvariantError,
    NoCoverFoundError,
    NotTransverseError,
    VerificationError,
)
from .lattice import (
    IntMatrix,
    Plane,
    TranslatedSubtorus,
    kernel_lattice,
    lattice_intersection,
    rebase,
    sublattice_index,
    transverse_index,
)

if TYPE_CHECKING:  # pragma: no cover
    from .families import AbelianConfig

_CENSUS_PRIME_BOUND = 1000  # keeps the int64 census arithmetic far from overflow


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CoverHom:
    """Surjection Z^4 -> Z/n encoding a connected degree-n cyclic cover.

    n = 1 is the identity cover (phi = 0). For prime n the covector is scaled
    so its first nonzero coordinate is 1, making equality meaningful; composite
    moduli are stored as found.
    """

    n: int
    phi: tuple[int, int, int, int]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvariantError("cover degree must be a positive integer")
        if len(self.phi) != 4:
            raise InvariantError("phi must have four coordinates")
        phi = tuple(int(x) % self.n for x in self.phi)
        g = self.n
        for x in phi:
            g = gcd(g, x)
        if g != 1:
            raise InvariantError(
                f"phi {phi} mod {self.n} is not surjective (gcd {g})"
            )
        if self.n > 1 and is_prime(self.n):
            lead = next((x for x in phi if x != 0), None)
            if lead is not None and lead != 1:
                inv = pow(lead, -1, self.n)
                phi = tuple((x * inv) % self.n for x in phi)
        object.__setattr__(self, "phi", phi)

    def to_json(self) -> dict:
        return {"n": self.n, "phi": list(self.phi)}

    @classmethod
    def from_json(cls, obj: dict) -> CoverHom:
        return cls(obj["n"], tuple(obj["phi"]))


@dataclass(frozen=True)
class HyperplaneCensus:
    """Exhaustive count of hyperplanes of F_p^4 against a list of planes."""

    total: int
    bad: int
    good: int
    per_plane_bad: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "bad": self.bad,
            "good": self.good,
            "per_plane_bad": list(self.per_plane_bad),
        }


def _rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(m):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def _check_planes_mod_p(planes: Sequence[Plane], p: int, *, transverse: bool) -> None:
    for j, pl in enumerate(planes):
        if _rank_mod_p(pl.basis, p) != 2:
            raise InvariantError(f"plane {j} degenerates mod {p}")
    for i in range(len(planes)):
        for j in range(i + 1, len(planes)):
            stacked = list(planes[i].basis) + list(planes[j].basis)
            r = _rank_mod_p(stacked, p)
            if transverse:
                if r != 4:
                    raise NotTransverseError(
                        f"planes {i} and {j} are not transverse mod {p}"
                    )
            elif r == 2:
                raise NotTransverseError(f"planes {i} and {j} coincide mod {p}")


def _images_nonzero(phi: Sequence[int], plane: Plane, n: int) -> tuple[int, int]:
    u, v = plane.basis
    fu = sum(a * b for a, b in zip(phi, u)) % n
    fv = sum(a * b for a, b in zip(phi, v)) % n
    return fu, fv


def _normalized_covectors(p: int) -> Iterable[tuple[int, ...]]:
    """All projectively normalized covectors of F_p^4 in lexicographic order."""
    for lead in (3, 2, 1, 0):
        for rest in product(range(p), repeat=3 - lead):
            yield (0,) * lead + (1,) + rest


def find_prime_cover(p: int, planes: Sequence[Plane]) -> CoverHom:
    """Lexicographically smallest normalized covector mod p avoiding every plane.

    The kernel hyperplane of the result meets each plane in a 1-dimensional
    subspace mod p, which is exactly the connected-preimage certificate. The
    planes must stay 2-dimensional and pairwise distinct mod p; full pairwise
    transversality mod p is deliberately not required (iterated covers at one
    prime produce planes sharing a line mod p, and existence only needs the
    union bound bad <= 4(p+1) < p^3+p^2+p+1).
    """
    if not is_prime(p):
        raise InvariantError(f"{p} is not prime")
    planes = list(planes)
    if not planes:
        raise InvariantError("need at least one plane")
    _check_planes_mod_p(planes, p, transverse=False)
    for phi in _normalized_covectors(p):
        if all(any(_images_nonzero(phi, pl, p)) for pl in planes):
            return CoverHom(p, phi)
    raise NoCoverFoundError(
        f"no hyperplane of F_{p}^4 avoids all {len(planes)} planes"
    )


def hyperplane_census(p: int, planes: Sequence[Plane]) -> HyperplaneCensus:
    """Exhaustively count hyperplanes of F_p^4 containing each plane.

    Preconditions: p prime, every plane 2-dimensional mod p, planes pairwise
    transverse mod p (so no hyperplane contains two of them and the bad counts
    decompose). Postconditions asserted from the enumeration itself:
    total = p^3+p^2+p+1, per-plane bad = p+1, pairwise overlaps empty, and
    good >= (p^2-3)(p+1).
    """
    if not is_prime(p):
        raise InvariantError(f"{p} is not prime")
    if p > _CENSUS_PRIME_BOUND:
        raise InvariantError(f"census enumeration capped at p <= {_CENSUS_PRIME_BOUND}")
    planes = list(planes)
    if not planes:
        raise InvariantError("need at least one plane")
    _check_planes_mod_p(planes, p, transverse=True)

    vecs = np.array(
        [[x % p for x in v] for pl in planes for v in pl.basis], dtype=np.int64
    )  # 2 rows per plane
    nplanes = len(planes)
    per_plane = [0] * nplanes
    overlaps = 0
    total = 0
    chunk = 1 << 16
    for lead in (3, 2, 1, 0):
        free = 3 - lead
        count = p**free
        for start in range(0, count, chunk):
            idx = np.arange(start, min(start + chunk, count), dtype=np.int64)
            cov = np.zeros((len(idx), 4), dtype=np.int64)
            cov[:, lead] = 1
            for t in range(free):
                cov[:, lead + 1 + t] = (idx // p ** (free - 1 - t)) % p
            total += len(idx)
            imgs = (cov @ vecs.T) % p
            contains = [
                (imgs[:, 2 * j] == 0) & (imgs[:, 2 * j + 1] == 0)
                for j in range(nplanes)
            ]
            for j in range(nplanes):
                per_plane[j] += int(contains[j].sum())
            for i in range(nplanes):
                for j in range(i + 1, nplanes):
                    overlaps += int((contains[i] & contains[j]).sum())

    if total != p**3 + p**2 + p + 1:
        raise VerificationError("census enumeration missed covectors")
    if overlaps:
        raise VerificationError("a hyperplane contains two planes despite transversality")
    for j, b in enumerate(per_plane):
        if b != p + 1:
            raise VerificationError(f"plane {j} is contained in {b} hyperplanes, expected {p + 1}")
    bad = sum(per_plane)
    good = total - bad
    if nplanes == 4 and good < (p**2 - 3) * (p + 1):
        raise VerificationError("good-hyperplane count fell below the guaranteed bound")
    return HyperplaneCensus(total, bad, good, tuple(per_plane))


def find_cyclic_cover(e: int, planes: Sequence[Plane]) -> CoverHom:
    """Lexicographically smallest covector mod e restricting onto Z/e on every plane.

    The condition gcd(phi(u_j), phi(v_j), e) = 1 for a basis (u_j, v_j) makes
    every preimage connected in the degree-e cover. Searches all e^4 covectors
    in lexicographic order; NoCoverFound after exhausting them.
    """
    if not isinstance(e, int) or e < 2:
        raise InvariantError("cyclic cover degree must be an integer >= 2")
    planes = list(planes)
    if not planes:
        raise InvariantError("need at least one plane")
    for phi in product(range(e), repeat=4):
        ok = True
        for pl in planes:
            fu, fv = _images_nonzero(phi, pl, e)
            if gcd(gcd(fu, fv), e) != 1:
                ok = False
                break
        if ok:
            return CoverHom(e, phi)
    raise NoCoverFoundError(f"no covector mod {e} keeps all {len(planes)} planes connected")


def component_count(cover: CoverHom, plane: Plane) -> int:
    """Number of connected components of the preimage of a subtorus with this plane."""
    fu, fv = _images_nonzero(cover.phi, plane, cover.n)
    return gcd(gcd(fu, fv), cover.n)


def apply_cover(config: "AbelianConfig", cover: CoverHom) -> "AbelianConfig":
    """Pull an abelian configuration back along the cover determined by ker(phi).

    Every curve must lift connectedly (DisconnectedPreimage otherwise). Curve
    planes become their intersection with the kernel lattice, rewritten in
    unimodular coordinates on the kernel; offsets are transported by the same
    chart; incidences are recomputed from scratch; characteristic numbers
    multiply by the degree. Pairwise intersection numbers are re-derived and
    must come out exactly degree times the old ones.
    """
    from .families import AbelianConfig  # deferred: families builds on this module

    for cid, torus in config.curves:
        cc = component_count(cover, torus.plane)
        if cc != 1:
            raise DisconnectedPreimageError(cid, cc)

    if cover.n == 1:
        return config

    kern = kernel_lattice(cover.phi, cover.n)
    if sublattice_index(kern) != cover.n:
        raise VerificationError("kernel index does not match the cover degree")
    chart = rebase(kern)

    old_pairs: dict[tuple[str, str], int | None] = {}
    for i in range(len(config.curves)):
        for j in range(i + 1, len(config.curves)):
            a_id, a = config.curves[i]
            b_id, b = config.curves[j]
            try:
                old_pairs[(a_id, b_id)] = transverse_index(a.plane, b.plane)
            except NotTransverseError:
                old_pairs[(a_id, b_id)] = None

    lifted = []
    for cid, torus in config.curves:
        sub = lattice_intersection(kern, torus.plane)
        c1 = chart.to_sublattice(sub.basis[0])
        c2 = chart.to_sublattice(sub.basis[1])
        new_plane = Plane.span(c1, c2)
        new_offset = chart.to_sublattice_rational(torus.offset)
        lifted.append((cid, TranslatedSubtorus(new_plane, new_offset)))

    chars = config.chars
    new_chars = type(chars)(
        chi=chars.chi * cover.n,
        tau=chars.tau * cover.n,
        c1sq=None if chars.c1sq is None else chars.c1sq * cover.n,
    )
    new_config = AbelianConfig.assemble(
        basis=tuple(f"k{i}" for i in range(1, 5)),
        curves=lifted,
        chars=new_chars,
    )

    by_id = dict(new_config.curves)
    for (a_id, b_id), old in old_pairs.items():
        if old is None:
            continue
        new = transverse_index(by_id[a_id].plane, by_id[b_id].plane)
        if new != cover.n * old:
            raise VerificationError(
                f"intersection of {a_id} and {b_id} scaled {old} -> {new}, "
                f"expected factor {cover.n}"
            )
    return new_config
