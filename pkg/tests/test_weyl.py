import itertools
from collections import deque

import pytest
from hypothesis import given

from theta_forge.partitions import KStrictPartition, p_kn
from theta_forge.ring import c, format_poly, parse_poly, t
from theta_forge.theta import beta_seq, pair_set_C, theta_double
from theta_forge.weyl import (
    SignedPermutation,
    agreement_sides,
    beta_from_w,
    coxeter_length,
    full_window,
    grassmannian_to_partition,
    is_k_grassmannian,
    localization_sigma1,
    omega_poly,
    pair_set_from_w,
    partition_to_w,
    reduced_factorizations,
    schubert_poly_A,
)
from strategies import k_strict


def _bfs_lengths(n):
    """Word length of every element of W_n by breadth-first search on generators."""
    start = SignedPermutation.identity(n)
    dist = {start.window: 0}
    queue = deque([start])
    gens = [SignedPermutation.simple(i, n) for i in range(n)]
    while queue:
        w = queue.popleft()
        for s in gens:
            v = w * s
            if v.window not in dist:
                dist[v.window] = dist[w.window] + 1
                queue.append(v)
    return dist


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_length_formula_matches_word_length(n):
    dist = _bfs_lengths(n)
    assert len(dist) == 2**n * [1, 1, 2, 6, 24][n]
    for window, d in dist.items():
        assert coxeter_length(window) == d


def test_composition_is_right_to_left():
    s1 = SignedPermutation.simple(1, 3)
    s2 = SignedPermutation.simple(2, 3)
    assert (s2 * s1).window == (3, 1, 2)
    assert (s1 * s2).window == (2, 3, 1)
    w = SignedPermutation((2, -3, 1))
    assert (w * w.inverse()).window == (1, 2, 3)


def test_parse_and_str():
    w = SignedPermutation.parse("4,8,-5,-2,-1,3,6,7")
    assert str(w) == "4,8,-5,-2,-1,3,6,7"
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))


def test_worked_example_element():
    lam = KStrictPartition((7, 4, 3, 2, 1, 1), 2)
    w = partition_to_w(lam)
    assert w.window == (4, 8, -5, -2, -1, 3, 6, 7)
    assert coxeter_length(w) == 18 == lam.size
    assert pair_set_from_w(w, 2) == pair_set_C(lam)
    assert beta_from_w(w, 2) == beta_seq(lam)
    assert format_poly(localization_sigma1(lam)) == "t[1] + t[2] + t[4] + 2*t[5] + t[8]"


@pytest.mark.parametrize("k,n", [(0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5)])
def test_bijection_with_k_strict_partitions(k, n):
    grass = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            w = SignedPermutation(p * s for p, s in zip(perm, signs))
            if is_k_grassmannian(w, k):
                grass.append(w)
    parts = {grassmannian_to_partition(w, k).parts for w in grass}
    assert len(parts) == len(grass)
    assert parts == {lam.parts for lam in p_kn(k, n)}
    for w in grass:
        lam = grassmannian_to_partition(w, k)
        assert partition_to_w(lam, n) == w
        assert coxeter_length(w) == lam.size


def test_rank_too_small():
    with pytest.raises(ValueError, match="rank too small"):
        partition_to_w((5,), n=2, k=0)


@pytest.mark.parametrize(
    "perm,expected",
    [
        ((1, 2, 3), "1"),
        ((2, 1, 3), "t[1]"),
        ((1, 3, 2), "t[1] + t[2]"),
        ((2, 3, 1), "t[1]*t[2]"),
        ((3, 1, 2), "t[1]^2"),
        ((3, 2, 1), "t[1]^2*t[2]"),
        ((1, 4, 2, 3), "t[1]^2 + t[1]*t[2] + t[2]^2"),
    ],
)
def test_schubert_polynomials(perm, expected):
    assert schubert_poly_A(perm) == parse_poly(expected)


def test_reduced_factorizations_of_a_box():
    facs = reduced_factorizations((1,), k=1)
    assert sorted((str(f.u), f.mu.parts) for f in facs) == [("", (1,)), ("2,1", ())]


def test_omega_of_three_one():
    q31 = c(3) * c(1) - 2 * c(4)
    q21 = c(2) * c(1) - 2 * c(3)
    assert omega_poly((3, 1), 0) == q31 - q21 * (t(1) + t(2))
    assert theta_double((3, 1), 0) - omega_poly((3, 1), 0) == (c(1) ** 2 - 2 * c(2)) * t(1) * t(2)


def test_omega_of_a_box():
    assert omega_poly((1,), 1) == c(1) - t(1)


def test_full_window():
    assert full_window(KStrictPartition((3,), 0)) == 3
    assert full_window(KStrictPartition((7, 4, 3, 2, 1, 1), 2)) == 6


@given(k_strict(max_size=8))
def test_agreement_identity_on_full_window(lam):
    lhs, rhs = agreement_sides(lam)
    assert lhs == rhs


def test_agreement_identity_fails_on_length_window():
    lhs, rhs = agreement_sides(KStrictPartition((3,), 0), L=1)
    assert lhs != rhs
