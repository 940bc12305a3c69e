"""Domain type validation and JSON round-trips."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from einfill.core import (
    EQUALITY,
    STRICT,
    VIOLATED,
    CharNumbers,
    CuspedManifold,
    Verdict,
    rational_from_json,
    rational_to_json,
)
from einfill.errors import InvariantError, NonPositiveCuspError


class TestCharNumbers:
    def test_signature_relation_accepted(self):
        ch = CharNumbers(chi=1, tau=-1, c1sq=-1)
        assert ch.c2 == 1

    def test_signature_relation_rejected(self):
        with pytest.raises(InvariantError):
            CharNumbers(chi=1, tau=0, c1sq=-1)

    def test_c1sq_optional(self):
        ch = CharNumbers(chi=7, tau=5)
        assert ch.c1sq is None

    def test_non_integer_rejected(self):
        with pytest.raises(InvariantError):
            CharNumbers(chi=Fraction(1, 2), tau=0)
        with pytest.raises(InvariantError):
            CharNumbers(chi=0, tau=0, c1sq=1.0)

    def test_json_round_trip(self):
        ch = CharNumbers(chi=4, tau=-4, c1sq=-4)
        assert CharNumbers.from_json(ch.to_json()) == ch
        assert ch.to_json() == {"chi": 4, "tau": -4, "c1sq": -4}

    @given(st.integers(-50, 50), st.integers(-50, 50))
    def test_relation_enforced_exhaustively(self, chi, tau):
        # every (chi, tau) admits exactly one legal c1sq
        ch = CharNumbers(chi=chi, tau=tau, c1sq=2 * chi + 3 * tau)
        assert ch.c2 == chi
        with pytest.raises(InvariantError):
            CharNumbers(chi=chi, tau=tau, c1sq=2 * chi + 3 * tau + 1)


class TestVerdict:
    def test_status_must_match_margin(self):
        Verdict(EQUALITY, Fraction(0), "ok")
        with pytest.raises(InvariantError):
            Verdict(STRICT, Fraction(0), "ok")
        with pytest.raises(InvariantError):
            Verdict(VIOLATED, Fraction(1, 2), "ok")

    def test_unknown_status(self):
        with pytest.raises(InvariantError):
            Verdict("MAYBE", Fraction(1), "ok")

    @given(st.fractions(max_denominator=1000))
    def test_from_margin_consistent(self, margin):
        v = Verdict.from_margin(margin, strict="s", equality="e", violated="v")
        assert v.margin == margin
        if margin < 0:
            assert (v.status, v.note) == (VIOLATED, "v")
        elif margin == 0:
            assert (v.status, v.note) == (EQUALITY, "e")
        else:
            assert (v.status, v.note) == (STRICT, "s")

    def test_json_round_trip(self):
        v = Verdict.from_margin(Fraction(-5, 2), strict="s", equality="e", violated="v")
        assert Verdict.from_json(v.to_json()) == v
        assert v.to_json()["margin"] == {"num": -5, "den": 2}


class TestCuspedManifold:
    def test_positive_cusps_required(self):
        with pytest.raises(NonPositiveCuspError):
            CuspedManifold(chi=1, tau=0, cusps=(1, 0))
        with pytest.raises(NonPositiveCuspError):
            CuspedManifold(chi=1, tau=0, cusps=(-2,))

    def test_empty_cusps_fine(self):
        m = CuspedManifold(chi=3, tau=1, cusps=())
        assert m.cusps == ()

    def test_json_round_trip(self):
        m = CuspedManifold(chi=2, tau=3, cusps=(2, 2, 2, 1, 1))
        assert CuspedManifold.from_json(m.to_json()) == m


def test_rational_json_reduced():
    assert rational_to_json(Fraction(6, 4)) == {"num": 3, "den": 2}
    assert rational_to_json(-2) == {"num": -2, "den": 1}
    assert rational_from_json({"num": 3, "den": 2}) == Fraction(3, 2)


@given(st.fractions(max_denominator=10**6))
def test_rational_json_round_trip(q):
    obj = rational_to_json(q)
    assert obj["den"] >= 1
    assert rational_from_json(obj) == q
