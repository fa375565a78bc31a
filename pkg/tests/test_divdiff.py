import pytest
from hypothesis import given
from hypothesis import strategies as st

from theta_forge.divdiff import (
    descent_case,
    divided_diff,
    left_descent_target,
    reduced_word_to,
    theta_from_top,
    top_partition,
    verify_descent,
    weyl_act,
)
from theta_forge.partitions import KStrictPartition, in_rectangle
from theta_forge.ring import ONE, ZERO, c, c_power, t
from theta_forge.theta import theta_double
from oracle import naive_divided_difference, to_sympy
from strategies import polys


def test_small_values():
    assert divided_diff(0, c(1)) == ONE
    assert divided_diff(1, t(1)) == -ONE
    assert divided_diff(1, t(1) * t(2)) == ZERO
    assert weyl_act(0, c(1)) == c(1) - 2 * t(1)
    assert weyl_act(0, c(2)) == c(2) - 2 * c(1) * t(1) + 2 * t(1) ** 2


def test_negative_generator_rejected():
    with pytest.raises(ValueError):
        weyl_act(-1, c(1))


@given(st.integers(0, 3), polys(max_terms=3, c_max=3, t_max=3))
def test_divided_difference_matches_rational_function_route(i, f):
    assert to_sympy(divided_diff(i, f)) == naive_divided_difference(i, to_sympy(f))


@given(st.integers(0, 3), polys())
def test_involution_and_square_zero(i, f):
    assert weyl_act(i, weyl_act(i, f)) == f
    assert divided_diff(i, divided_diff(i, f)) == ZERO


@given(st.integers(0, 3), polys(max_terms=3), polys(max_terms=3))
def test_leibniz(i, f, g):
    lhs = divided_diff(i, f * g)
    assert lhs == divided_diff(i, f) * g + weyl_act(i, f) * divided_diff(i, g)


@given(polys(max_terms=3))
def test_braid_relations(f):
    def act(word, g):
        for i in reversed(word):
            g = weyl_act(i, g)
        return g

    assert act([0, 1, 0, 1], f) == act([1, 0, 1, 0], f)
    assert act([1, 2, 1], f) == act([2, 1, 2], f)
    assert act([0, 2], f) == act([2, 0], f)


@pytest.mark.parametrize("i", range(0, 4))
@pytest.mark.parametrize("r", range(-3, 4))
def test_divided_difference_of_c_upper(i, r):
    for p in range(6):
        expected = c_power(p - 1, r + 1) if r in (i, -i) else ZERO
        assert divided_diff(i, c_power(p, r)) == expected


def test_descent_cases_first_instances():
    assert descent_case(KStrictPartition((1,), 0), 0) == "a"
    assert descent_case(KStrictPartition((1,), 1), 1) == "b"
    assert descent_case(KStrictPartition((3,), 1), 1) == "c"
    assert descent_case(KStrictPartition((2,), 0), 1) == "d"


def test_descent_targets():
    assert left_descent_target((1,), 0, k=0) == KStrictPartition((), 0)
    assert left_descent_target((2, 1), 0, k=0) == KStrictPartition((2,), 0)
    assert left_descent_target((2, 1), 1, k=0) is None
    with pytest.raises(ValueError, match="not a left descent"):
        verify_descent(KStrictPartition((2, 1), 0), 1)


@pytest.mark.parametrize("k", [0, 1])
def test_every_descent_in_a_small_box(k):
    for lam in in_rectangle(3, 4, k):
        for i in range(lam.min_rank() + 1):
            if left_descent_target(lam, i) is not None:
                assert verify_descent(lam, i)


def test_top_partition():
    assert top_partition(1, 3).parts == (4, 3)
    assert top_partition(0, 2).parts == (2, 1)


def test_reduced_word_length():
    lam = KStrictPartition((2, 1), 1)
    word = reduced_word_to(lam, 3)
    assert len(word) == top_partition(1, 3).size - lam.size


@pytest.mark.parametrize("seed", [None, 1, 2])
def test_theta_from_top_small_rank(seed):
    for lam in in_rectangle(2, 4, 1):
        if lam.fits(3):
            assert theta_from_top(lam, 3, seed=seed) == theta_double(lam)
