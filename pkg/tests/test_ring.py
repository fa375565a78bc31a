import pytest
from hypothesis import given
from hypothesis import strategies as st

from theta_forge.ring import (
    ONE,
    ZERO,
    ParseError,
    Polynomial,
    c,
    c_power,
    complete_sym,
    div_linear_t,
    elem_sym,
    format_poly,
    parse_poly,
    poly_from_json,
    poly_to_json,
    substitute_t,
    t,
)
from strategies import polys


def test_c_zero_is_one_and_negative_vanishes():
    assert c(0) == ONE
    assert c(-3) == ZERO
    assert c(2) * c(-1) == ZERO


def test_t_negative_index_convention():
    assert t(-3) == t(3)
    with pytest.raises(ValueError):
        t(0)


def test_elementary_and_complete():
    assert elem_sym(2, 3) == t(1) * t(2) + t(1) * t(3) + t(2) * t(3)
    assert complete_sym(2, 2) == t(1) ** 2 + t(1) * t(2) + t(2) ** 2
    assert elem_sym(4, 3) == ZERO
    assert complete_sym(0, 0) == ONE


def test_c_power_small_cases():
    assert c_power(1, 2) == c(1) - t(1) - t(2)
    assert c_power(2, -1) == c(2) - c(1) * t(1)
    assert c_power(3, 0) == c(3)
    assert c_power(0, 5) == ONE
    assert c_power(-1, 2) == ZERO


@pytest.mark.parametrize("p", range(0, 7))
@pytest.mark.parametrize("r", range(1, 5))
def test_c_power_recurrence_positive(p, r):
    assert c_power(p, r) == c_power(p, r - 1) - t(r) * c_power(p - 1, r)


@pytest.mark.parametrize("p", range(0, 7))
@pytest.mark.parametrize("r", range(-4, 1))
def test_c_power_recurrence_nonpositive(p, r):
    assert c_power(p, r) == c_power(p, r - 1) + t(r - 1) * c_power(p - 1, r)


def test_format_is_canonical_and_descending():
    f = parse_poly("3 + c[1]^2 - 2*c[2]*t[1] - t[2]^3")
    assert format_poly(f) == "-2*c[2]*t[1] - t[2]^3 + c[1]^2 + 3"
    assert format_poly(ZERO) == "0"
    assert format_poly(c(1) * t(2), "latex") == "c_{1} t_{2}"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_poly("c[1] + * t[2]")
    assert err.value.position == 7
    with pytest.raises(ParseError):
        parse_poly("")
    with pytest.raises(ParseError):
        parse_poly("t[0]")
    with pytest.raises(ParseError):
        parse_poly("q[1]")


def test_parse_named_atoms():
    f = parse_poly("2*X[1,2]^2 - c[1]", atoms={"X": lambda a: t(a[0]) + t(a[1])})
    assert f == (t(1) + t(2)) ** 2 * 2 - c(1)


def test_div_linear_t_exact_and_inexact():
    f = (t(1) - t(3)) * (c(2) + t(2) ** 2)
    assert div_linear_t(f, 1, 3) == c(2) + t(2) ** 2
    assert div_linear_t(t(1) ** 3 * c(1), 1) == t(1) ** 2 * c(1)
    with pytest.raises(ArithmeticError):
        div_linear_t(t(1) + c(1), 1, 2)


def test_substitute_t_requires_every_variable():
    f = t(1) * c(2) + t(3)
    assert substitute_t(f, {1: 2, 3: -1}) == c(2).scale(2) - ONE
    with pytest.raises(KeyError):
        substitute_t(f, {1: 2})


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == ZERO


@given(polys())
def test_text_and_json_round_trip(f):
    assert parse_poly(format_poly(f)) == f
    assert poly_from_json(poly_to_json(f)) == f
    assert parse_poly(format_poly(f, "json")) == f


@given(polys(), st.integers(1, 4), st.integers(1, 4))
def test_div_linear_t_inverts_multiplication(f, i, j):
    if i == j:
        assert div_linear_t(f * t(i), i) == f
    else:
        assert div_linear_t(f * (t(i) - t(j)), i, j) == f


@given(polys())
def test_swap_t_is_involution(f):
    assert f.swap_t(1, 2).swap_t(1, 2) == f


def test_polynomial_is_hashable_and_immutable_in_use():
    f = c(1) + t(1)
    assert hash(f) == hash(t(1) + c(1))
    assert isinstance(f.scale(0), Polynomial) and not f.scale(0)
