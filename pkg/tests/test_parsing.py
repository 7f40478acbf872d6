import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multseq import RingSpec, minimalize, parse_ideal, power, render_ideal
from multseq.errors import MultSeqError, ParseError
from multseq.parsing import parse_expression

from conftest import CYCLE_GENS, R2, R3, R4, random_ideals


def test_cycle_shorthand():
    A = parse_ideal("ab2,bc3,cd4,da5", R4)
    assert set(A.gens) == set(CYCLE_GENS)


def test_shorthand_and_explicit():
    assert parse_ideal("x2,xy", R2).gens == ((2, 0), (1, 1))
    assert set(parse_ideal("x^2*y, y^3", R2).gens) == {(2, 1), (0, 3)}
    assert parse_ideal(" x 2 , x y ", R2).gens == ((2, 0), (1, 1))
    assert parse_ideal("xxy", R2).gens == ((2, 1),)


def test_wrappers_and_power_suffix():
    assert parse_ideal('ideal"x2,xy"', R2).gens == ((2, 0), (1, 1))
    expr = parse_expression("(ab2,bc3,cd4,da5)^3", R4)
    assert expr.power == 3
    assert expr.ideal == power(minimalize(CYCLE_GENS, R4), 3)
    assert parse_ideal("(x,y)", R2) == parse_ideal("x,y", R2)


def test_multi_character_names_force_explicit_mode():
    ring = RingSpec(("x1", "x2", "x3"))
    assert parse_ideal("x1^2*x2, x3", ring).gens == ((0, 0, 1), (2, 1, 0))
    assert parse_ideal("x1*x2", ring).gens == ((1, 1, 0),)


def test_special_terms():
    assert parse_ideal("0", R2).is_zero
    assert parse_ideal("1", R2).is_unit
    assert parse_ideal("x^0*y", R2).gens == ((0, 1),)


@pytest.mark.parametrize(
    "src, fragment",
    [
        ("x2,w", "unknown variable"),
        ("x0", "use explicit mode for trivial factors"),
        ("x2,,y", "empty term"),
        ("x2,", "empty term"),
        ("", "empty"),
        ("x^2*y, xy", "mixes shorthand and explicit"),
        ("x^a", "malformed exponent"),
        ("x^", "malformed exponent"),
        ("x**y", "empty factor"),
        ("2x", "exponent without a variable"),
        ("a2-bd,b4,e3", "non-monomial"),
        ("x+y", "non-monomial"),
        ("x" + "9" * 40, "too large"),
    ],
)
def test_errors(src, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_ideal(src, R2)


def test_invalid_utf8():
    with pytest.raises(ParseError):
        parse_ideal(b"\xff\xfe", R2)


@pytest.mark.parametrize("A", random_ideals(40, seed=29), ids=str)
def test_round_trip(A):
    assert parse_ideal(render_ideal(A), A.ring) == A


def test_round_trip_explicit_names():
    ring = RingSpec(("u1", "u2"))
    A = minimalize([(2, 1), (0, 3)], ring)
    assert render_ideal(A) == "u1^2*u2,u2^3"
    assert parse_ideal(render_ideal(A), ring) == A


@settings(max_examples=400, deadline=None)
@given(st.binary(max_size=40))
def test_parser_never_crashes_on_bytes(data):
    try:
        parse_ideal(data, R3)
    except MultSeqError:
        pass


@settings(max_examples=400, deadline=None)
@given(st.text(alphabet="xyz0123456789,*^() +-\"ideal", max_size=30))
def test_parser_never_crashes_on_text(text):
    try:
        parse_ideal(text, R3)
    except MultSeqError:
        pass
