"""Cover search and application tests.

The prime search is checked against an independent exhaustive enumeration of
the normalized covectors; census counts are checked against a brute-force
count over all nonzero covectors; towers are checked against single cyclic
covers.
"""

from itertools import product
from math import gcd

import pytest

from einfill.covers import (
    CoverHom,
    apply_cover,
    component_count,
    find_cyclic_cover,
    find_prime_cover,
    hyperplane_census,
    is_prime,
)
from einfill.errors import (
    DisconnectedPreimageError,
    InvariantError,
    NoCoverFoundError,
    NotTransverseError,
)
from einfill.families import hirzebruch_base
from einfill.lattice import Plane, transverse_index

E1, E2, E3, E4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


def base_planes():
    return [torus.plane for _, torus in hirzebruch_base().curves]


def images_mod(phi, plane, n):
    u, v = plane.basis
    return (
        sum(a * b for a, b in zip(phi, u)) % n,
        sum(a * b for a, b in zip(phi, v)) % n,
    )


# five planes whose mod-2 annihilator lines partition all 15 nonzero covectors,
# so no hyperplane of F_2^4 avoids every plane
BLOCKING_PLANES = [
    Plane.span(E1, E2),
    Plane.span(E3, E4),
    Plane.span((1, 0, 1, 0), (0, 1, 0, 1)),
    Plane.span((1, 1, 1, 0), (0, 1, 1, 1)),
    Plane.span((1, 0, 1, 1), (1, 1, 0, 1)),
]


class TestCoverHom:
    def test_identity_cover(self):
        c = CoverHom(1, (0, 0, 0, 0))
        assert c.phi == (0, 0, 0, 0)

    def test_non_surjective_rejected(self):
        with pytest.raises(InvariantError):
            CoverHom(4, (0, 2, 2, 2))
        with pytest.raises(InvariantError):
            CoverHom(6, (2, 0, 2, 4))

    def test_prime_normalization(self):
        assert CoverHom(3, (0, 2, 0, 2)).phi == (0, 1, 0, 1)
        assert CoverHom(5, (3, 1, 0, 0)).phi == (1, 2, 0, 0)

    def test_composite_kept_as_given(self):
        assert CoverHom(4, (0, 3, 3, 3)).phi == (0, 3, 3, 3)

    def test_json_round_trip(self):
        c = CoverHom(6, (0, 1, 1, 1))
        assert CoverHom.from_json(c.to_json()) == c
        assert c.to_json() == {"n": 6, "phi": [0, 1, 1, 1]}

    def test_bad_degree(self):
        with pytest.raises(InvariantError):
            CoverHom(0, (1, 0, 0, 0))


class TestFindPrimeCover:
    def test_p2_matches_exhaustive_lex_scan(self):
        planes = base_planes()
        # independent scan of all 15 normalized covectors in the same order
        expected = None
        for lead in (3, 2, 1, 0):
            for rest in product(range(2), repeat=3 - lead):
                phi = (0,) * lead + (1,) + rest
                if all(any(images_mod(phi, pl, 2)) for pl in planes):
                    expected = phi
                    break
            if expected:
                break
        got = find_prime_cover(2, planes)
        assert got == CoverHom(2, expected)
        assert got.phi == (0, 1, 1, 1)

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
    def test_certificate_kernel_meets_each_plane_in_a_line(self, p):
        planes = base_planes()
        cover = find_prime_cover(p, planes)
        for pl in planes:
            u, v = pl.basis
            in_kernel = sum(
                1
                for a, b in product(range(p), repeat=2)
                if sum((a * x + b * y) * f for x, y, f in zip(u, v, cover.phi)) % p == 0
            )
            assert in_kernel == p  # one line of the p^2 plane vectors

    def test_coincident_planes_rejected(self):
        p = Plane.span(E1, E2)
        with pytest.raises((NotTransverseError, NoCoverFoundError)):
            find_prime_cover(2, [p, p])

    def test_blocked_configuration_reports_honestly(self):
        with pytest.raises(NoCoverFoundError):
            find_prime_cover(2, BLOCKING_PLANES)

    def test_non_prime_rejected(self):
        with pytest.raises(InvariantError):
            find_prime_cover(6, base_planes())


class TestHyperplaneCensus:
    def census_brute(self, p, planes):
        reps = []
        seen = set()
        for cov in product(range(p), repeat=4):
            if not any(cov) or cov in seen:
                continue
            for s in range(1, p):
                seen.add(tuple((s * c) % p for c in cov))
            reps.append(cov)
        per = [
            sum(1 for cov in reps if images_mod(cov, pl, p) == (0, 0))
            for pl in planes
        ]
        return len(reps), per

    @pytest.mark.parametrize(
        "p, total, bad, good",
        [(2, 15, 12, 3), (3, 40, 16, 24), (5, 156, 24, 132)],
    )
    def test_frozen_counts(self, p, total, bad, good):
        c = hyperplane_census(p, base_planes())
        assert (c.total, c.bad, c.good) == (total, bad, good)
        assert c.per_plane_bad == (p + 1,) * 4
        assert c.good >= (p**2 - 3) * (p + 1)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_matches_brute_force(self, p):
        planes = base_planes()
        total, per = self.census_brute(p, planes)
        c = hyperplane_census(p, planes)
        assert c.total == total
        assert list(c.per_plane_bad) == per

    def test_non_transverse_rejected(self):
        planes = base_planes()
        with pytest.raises(NotTransverseError):
            hyperplane_census(2, [planes[0], planes[0], planes[1], planes[2]])

    def test_json(self):
        c = hyperplane_census(2, base_planes())
        assert c.to_json() == {"total": 15, "bad": 12, "good": 3, "per_plane_bad": [3, 3, 3, 3]}


class TestFindCyclicCover:
    def test_e2_agrees_with_prime_search(self):
        planes = base_planes()
        assert find_cyclic_cover(2, planes) == find_prime_cover(2, planes)

    def test_e6_crt_cross_check(self):
        planes = base_planes()
        c = find_cyclic_cover(6, planes)
        # reductions mod 2 and mod 3 must each be valid prime certificates
        for p in (2, 3):
            for pl in planes:
                fu, fv = images_mod(c.phi, pl, p)
                assert (fu, fv) != (0, 0)

    @pytest.mark.parametrize("e, phi", [(2, (0, 1, 1, 1)), (3, (0, 1, 0, 1)), (4, (0, 1, 1, 1)), (12, (0, 1, 1, 1))])
    def test_frozen_lex_minima(self, e, phi):
        assert find_cyclic_cover(e, base_planes()).phi == phi

    def test_connectivity_condition_on_result(self):
        for e in (2, 3, 4, 5, 6, 9, 50):
            c = find_cyclic_cover(e, base_planes())
            for pl in base_planes():
                assert component_count(c, pl) == 1

    def test_e1_rejected(self):
        with pytest.raises(InvariantError):
            find_cyclic_cover(1, base_planes())

    def test_exhaustion_reports_honestly(self):
        with pytest.raises(NoCoverFoundError):
            find_cyclic_cover(2, BLOCKING_PLANES)


class TestComponentCount:
    def test_killed_plane(self):
        for e in (2, 3, 7):
            assert component_count(CoverHom(e, (1, 0, 0, 0)), Plane.span(E3, E4)) == e

    def test_connected_plane(self):
        assert component_count(CoverHom(5, (1, 0, 0, 0)), Plane.span(E1, E2)) == 1

    def test_proper_subgroup(self):
        assert component_count(CoverHom(4, (2, 0, 0, 1)), Plane.span(E1, E2)) == 2

    def test_divides_degree(self):
        cover = CoverHom(12, (0, 1, 1, 1))
        for pl in BLOCKING_PLANES:
            assert 12 % component_count(cover, pl) == 0


class TestApplyCover:
    def test_identity_cover_is_identity(self):
        base = hirzebruch_base()
        assert apply_cover(base, CoverHom(1, (0, 0, 0, 0))) == base

    def test_lifted_pairs_scale_by_degree(self):
        base = hirzebruch_base()
        e = 3
        lifted = apply_cover(base, find_cyclic_cover(e, base_planes()))
        curves = dict(lifted.curves)
        ids = list(curves)
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                assert transverse_index(curves[ids[i]].plane, curves[ids[j]].plane) == e
        assert len(lifted.incidences) == e
        for inc in lifted.incidences:
            assert len(inc.curves) == 4

    def test_chars_scale(self):
        base = hirzebruch_base()
        lifted = apply_cover(base, find_cyclic_cover(4, base_planes()))
        assert (lifted.chars.chi, lifted.chars.tau, lifted.chars.c1sq) == (0, 0, 0)

    def test_disconnected_preimage_named(self):
        base = hirzebruch_base()
        with pytest.raises(DisconnectedPreimageError) as err:
            apply_cover(base, CoverHom(2, (1, 0, 0, 0)))
        assert err.value.curve_id == "z=0"
        assert err.value.components == 2


def prime_factors(e):
    out, f = [], 2
    while e > 1:
        while e % f == 0:
            out.append(f)
            e //= f
        f += 1
    return out


@pytest.mark.parametrize("e", [4, 6])
def test_tower_equals_single_cyclic_cover(e):
    base = hirzebruch_base()
    tower = base
    for p in prime_factors(e):
        planes = [torus.plane for _, torus in tower.curves]
        tower = apply_cover(tower, find_prime_cover(p, planes))
    single = apply_cover(base, find_cyclic_cover(e, base_planes()))

    def pair_multiset(config):
        curves = dict(config.curves)
        ids = sorted(curves)
        return sorted(
            transverse_index(curves[a].plane, curves[b].plane)
            for i, a in enumerate(ids)
            for b in ids[i + 1 :]
        )

    assert pair_multiset(tower) == pair_multiset(single) == [e] * 6


def test_is_prime_small():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)
