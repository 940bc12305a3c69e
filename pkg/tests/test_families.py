"""Family builders: base configuration, cyclic covers, the direct Y_e model."""

from fractions import Fraction

import pytest

from einfill.calculus import fill_cusps, log_bmy, log_canonical_sq
from einfill.core import EQUALITY, CharNumbers
from einfill.covers import CoverHom
from einfill.errors import InvariantError, NotTransverseError
from einfill.families import (
    AbelianConfig,
    build_xe_detail,
    build_ye_detail,
    hirzebruch_base,
    verify_cover_viewpoint,
)
from einfill.lattice import (
    Plane,
    TorusPoint,
    TranslatedSubtorus,
    intersection_points,
    transverse_index,
)

E1, E2, E3, E4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


class TestHirzebruchBase:
    def test_origin_is_the_only_multi_point(self):
        config = hirzebruch_base()
        assert len(config.incidences) == 1
        inc = config.incidences[0]
        assert inc.point == TorusPoint.of(0, 0, 0, 0)
        assert sorted(inc.curves) == ["w=0", "w=z", "w=zeta*z", "z=0"]

    def test_all_pairs_meet_once(self):
        curves = dict(hirzebruch_base().curves)
        ids = sorted(curves)
        for i, a in enumerate(ids):
            for b in ids[i + 1 :]:
                assert transverse_index(curves[a].plane, curves[b].plane) == 1

    def test_abelian_chars(self):
        assert hirzebruch_base().chars == CharNumbers(0, 0, 0)

    def test_json_shape(self):
        obj = hirzebruch_base().to_json()
        assert set(obj) == {"basis", "chars", "curves", "incidences"}
        assert obj["basis"] == ["z:1", "z:zeta", "w:1", "w:zeta"]
        assert len(obj["curves"]) == 4


class TestAssemble:
    def test_duplicate_ids_rejected(self):
        t = TranslatedSubtorus.at(Plane.span(E1, E2))
        s = TranslatedSubtorus.at(Plane.span(E3, E4))
        with pytest.raises(InvariantError):
            AbelianConfig.assemble(("a", "b", "c", "d"), [("x", t), ("x", s)], CharNumbers(0, 0, 0))

    def test_coincident_curves_rejected(self):
        t = TranslatedSubtorus.at(Plane.span(E1, E2))
        u = TranslatedSubtorus.at(Plane.span(E1, E2), (0, 0, Fraction(0), 0))
        with pytest.raises(InvariantError, match="coincide"):
            AbelianConfig.assemble(("a", "b", "c", "d"), [("x", t), ("y", u)], CharNumbers(0, 0, 0))

    def test_parallel_distinct_curves_fine(self):
        t = TranslatedSubtorus.at(Plane.span(E3, E4))
        u = TranslatedSubtorus.at(Plane.span(E3, E4), (Fraction(1, 2), 0, 0, 0))
        config = AbelianConfig.assemble(
            ("a", "b", "c", "d"), [("x", t), ("y", u)], CharNumbers(0, 0, 0)
        )
        assert config.incidences == ()

    def test_partial_overlap_rejected(self):
        t = TranslatedSubtorus.at(Plane.span(E1, E2))
        u = TranslatedSubtorus.at(Plane.span(E2, E3))
        with pytest.raises(NotTransverseError):
            AbelianConfig.assemble(("a", "b", "c", "d"), [("x", t), ("y", u)], CharNumbers(0, 0, 0))

    def test_unknown_curve_lookup(self):
        config = hirzebruch_base()
        with pytest.raises(KeyError):
            config.curve("ghost")


class TestBuildXe:
    def test_e1_skips_the_cover(self):
        built = build_xe_detail(1)
        assert built.cover is None
        assert built.config == hirzebruch_base()
        assert built.pair.chars == CharNumbers(chi=1, tau=-1, c1sq=-1)
        assert built.cusped.cusps == (1, 1, 1, 1)
        assert built.cusped.tau == 3

    @pytest.mark.parametrize("e", [2, 3, 4, 6])
    def test_family_numbers(self, e):
        built = build_xe_detail(e)
        assert built.pair.chars == CharNumbers(chi=e, tau=-e, c1sq=-e)
        assert all(c.self_int == -e for c in built.pair.curves)
        assert all(c.genus == 1 for c in built.pair.curves)
        assert built.cusped.cusps == (e,) * 4
        assert log_canonical_sq(built.pair) == 3 * e
        assert log_bmy(built.pair).status == EQUALITY

    def test_frozen_cover_certificates(self):
        assert build_xe_detail(4).cover == CoverHom(4, (0, 1, 1, 1))
        assert build_xe_detail(3).cover == CoverHom(3, (0, 1, 0, 1))

    def test_quadruple_points_are_shared_pairwise(self):
        e = 3
        built = build_xe_detail(e)
        curves = dict(built.config.curves)
        ids = sorted(curves)
        shared = sorted(inc.point for inc in built.config.incidences)
        for i, a in enumerate(ids):
            for b in ids[i + 1 :]:
                assert intersection_points(curves[a], curves[b]) == shared

    def test_bad_parameter(self):
        with pytest.raises(InvariantError):
            build_xe_detail(0)
        with pytest.raises(InvariantError):
            build_xe_detail("2")


class TestBuildYe:
    @pytest.mark.parametrize("e", [1, 2, 3, 5])
    def test_family_numbers(self, e):
        built = build_ye_detail(e)
        assert built.pair.chars == CharNumbers(chi=e, tau=-e, c1sq=-e)
        diag = {"w=0", "w=z", "w=zeta*z"}
        for c in built.pair.curves:
            assert c.self_int == (-e if c.id in diag else -1)
        assert built.cusped.chi == e
        assert built.cusped.tau == 3
        assert built.cusped.cusps == (e, e, e) + (1,) * e
        assert log_canonical_sq(built.pair) == 3 * e
        assert log_bmy(built.pair).status == EQUALITY

    def test_each_point_pairs_with_its_own_vertical(self):
        e = 4
        built = build_ye_detail(e)
        verticals = set()
        for inc in built.config.incidences:
            assert len(inc.curves) == 4
            vs = [cid for cid in inc.curves if cid.startswith("z=")]
            assert len(vs) == 1
            verticals.add(vs[0])
        assert verticals == {f"z={k}" for k in range(e)}

    def test_e1_matches_xe1_through_the_open_manifold(self):
        ye = build_ye_detail(1)
        xe = build_xe_detail(1)
        assert ye.cusped.chi == xe.cusped.chi == 1
        assert len(ye.cusped.cusps) == len(xe.cusped.cusps) == 4
        # both removal paths compactify back to the same (chi, tau)
        ye_compact = fill_cusps(ye.cusped, range(4))
        xe_compact = fill_cusps(xe.cusped, range(4))
        assert (ye_compact.chi, ye_compact.tau) == (xe_compact.chi, xe_compact.tau) == (1, -1)

    def test_builders_satisfy_noether_divisibility(self):
        for e in (1, 2, 3, 7):
            for built in (build_xe_detail(e), build_ye_detail(e)):
                ch = built.pair.chars
                assert (ch.c1sq + ch.chi) % 12 == 0

    def test_bad_parameter(self):
        with pytest.raises(InvariantError):
            build_ye_detail(-1)


class TestCoverViewpoint:
    def test_vertical_preimage_disconnects(self):
        rep = verify_cover_viewpoint(3)
        by_id = dict(rep.components)
        assert by_id == {"w=0": 1, "z=0": 3, "w=z": 1, "w=zeta*z": 1}
        assert rep.disconnected == "z=0"
        assert rep.cover == CoverHom(3, (1, 0, 0, 0))

    def test_e2_counts(self):
        rep = verify_cover_viewpoint(2)
        assert sorted(n for _, n in rep.components) == [1, 1, 1, 2]

    def test_e1_rejected(self):
        with pytest.raises(InvariantError):
            verify_cover_viewpoint(1)

    def test_json(self):
        obj = verify_cover_viewpoint(2).to_json()
        assert obj["e"] == 2
        assert obj["cover"] == {"n": 2, "phi": [1, 0, 0, 0]}
        assert obj["components"]["z=0"] == 2
