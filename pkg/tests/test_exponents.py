import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hahnfield import INFINITY, ExponentGroup, GroupMismatchError, ParseError
from hahnfield.sampling import exponent_sample, rng_for

Z = ExponentGroup.integers()
Q = ExponentGroup.rationals()
LEX = ExponentGroup.rational_lex(2)
ALL_GROUPS = [Z, Q, LEX]


def test_selectors_round_trip():
    for group in ALL_GROUPS + [ExponentGroup.rational_lex(3)]:
        assert ExponentGroup.from_selector(group.selector) == group
    assert ExponentGroup.from_selector("qnlex:2") == LEX


def test_bad_selectors_rejected():
    for token in ("r", "zz", "qnlex:1", "qnlex:0", "q3lex"):
        with pytest.raises(ValueError):
            ExponentGroup.from_selector(token)
    with pytest.raises(ValueError):
        ExponentGroup.rational_lex(1)


def test_archimedean_flag():
    assert Z.archimedean and Q.archimedean
    assert not LEX.archimedean
    assert not ExponentGroup.rational_lex(4).archimedean


def test_addition_examples():
    assert Q.parse("1/3") + Q.parse("1/6") == Q.parse("1/2")
    assert LEX.parse("(1, 2)") + LEX.parse("(2, 3)") == LEX.parse("(3, 5)")
    for group in ALL_GROUPS:
        gamma = exponent_sample(random.Random(1), group)
        assert gamma + group.zero() == gamma


def test_comparison_examples():
    assert LEX.parse("(0, 1000)") < LEX.parse("(1, 0)")
    for group in ALL_GROUPS:
        assert exponent_sample(random.Random(2), group) < INFINITY
    assert Q.parse("2/4") == Q.parse("1/2")


def test_infinity_is_maximum():
    assert INFINITY == INFINITY
    assert not INFINITY < INFINITY
    assert INFINITY >= INFINITY
    gamma = Q.parse("1000000")
    assert gamma < INFINITY and INFINITY > gamma
    assert gamma <= INFINITY and INFINITY >= gamma
    assert not INFINITY < gamma


@pytest.mark.parametrize("group", ALL_GROUPS, ids=lambda g: g.selector)
def test_group_laws_randomized(group):
    rng = rng_for(101, f"laws:{group.selector}")
    for _ in range(1000):
        a = exponent_sample(rng, group)
        b = exponent_sample(rng, group)
        c = exponent_sample(rng, group)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert (-a) + a == group.zero()
        # total order: exactly one of <, ==, > holds
        assert (a < b) + (a == b) + (b < a) == 1
        # translation invariance
        if a < b:
            assert a + c < b + c


@pytest.mark.parametrize("group", ALL_GROUPS, ids=lambda g: g.selector)
def test_parse_format_round_trip(group):
    rng = rng_for(102, f"roundtrip:{group.selector}")
    for _ in range(1000):
        gamma = exponent_sample(rng, group)
        assert group.parse(str(gamma)) == gamma


def test_parse_rejects_malformed():
    with pytest.raises(ParseError):
        Z.parse("1/2")
    with pytest.raises(ParseError):
        Q.parse("1/0")
    with pytest.raises(ParseError):
        Q.parse("")
    with pytest.raises(ParseError):
        LEX.parse("(1, 2, 3)")
    with pytest.raises(ParseError):
        LEX.parse("1")


def test_parse_accepts_unicode_minus():
    assert Q.parse("−3/2") == Q.parse("-3/2")
    assert LEX.parse("(1/2, −3)") == LEX.parse("(1/2, -3)")


def test_group_mismatch_raises():
    with pytest.raises(GroupMismatchError):
        Z.parse("1") + Q.parse("1")
    with pytest.raises(GroupMismatchError):
        Z.parse("1") < Q.parse("1")
    with pytest.raises(GroupMismatchError):
        Q.element(Z.parse("1"))


def test_element_coercion():
    assert Q.element(Fraction(2, 4)) == Q.parse("1/2")
    assert Z.element(3) == Z.parse("3")
    assert LEX.element((1, Fraction(1, 2))) == LEX.parse("(1, 1/2)")
    with pytest.raises(TypeError):
        Z.element(Fraction(1, 2))
    with pytest.raises(TypeError):
        LEX.element((1,))


def test_unit_is_positive_step():
    for group in ALL_GROUPS:
        assert group.unit() > group.zero()
    assert LEX.unit() == LEX.parse("(0, 1)")


@settings(max_examples=200, deadline=None)
@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_translation_invariance_integers(a, b, c):
    ea, eb, ec = Z.element(a), Z.element(b), Z.element(c)
    assert (ea < eb) == (ea + ec < eb + ec)


@settings(max_examples=200, deadline=None)
@given(
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
)
def test_lex_order_is_lexicographic(a1, a2, b1, b2):
    left, right = LEX.element((a1, a2)), LEX.element((b1, b2))
    assert (left < right) == ((a1, a2) < (b1, b2))
