import json
from pathlib import Path

import pytest
import sympy
from hypothesis import given

from theta_forge.partitions import KStrictPartition, is_k_strict, k_strict_upto
from theta_forge.ring import ONE, c, format_poly, parse_poly, t
from theta_forge.theta import (
    beta_seq,
    factorial_Q_rhs,
    factorial_S_rhs,
    pair_set_A,
    pair_set_C,
    pf_multiset,
    schur_det,
    schur_pf,
    schur_pf_plain,
    theta_det_product,
    theta_double,
    theta_pf_sum,
    theta_single,
)
from theta_forge.quotient import equal_in_quotient
from oracle import naive_theta, to_sympy
from strategies import k_strict

GOLDEN = json.loads((Path(__file__).parent / "data" / "theta_golden.json").read_text())

Q31 = (
    "c[1]^2*t[1]*t[2] - c[1]*c[2]*t[1] - c[1]*c[2]*t[2] + c[1]*c[3]"
    " - 2*c[2]*t[1]*t[2] + 2*c[3]*t[1] + 2*c[3]*t[2] - 2*c[4]"
)


def test_pairs_and_superscripts_of_the_worked_example():
    lam = KStrictPartition((7, 4, 3, 2, 1, 1), 2)
    assert sorted(pair_set_C(lam)) == [(1, 2), (1, 3), (1, 4), (2, 3)]
    assert beta_seq(lam) == (-4, -1, 0, 3, 6, 7)


def test_pair_set_A_is_the_complement():
    assert sorted(pair_set_A(KStrictPartition((1, 1, 1), 1))) == [(1, 2), (1, 3), (2, 3)]
    assert not pair_set_A(KStrictPartition((4, 2, 1), 0))
    lam = KStrictPartition((3, 1, 1), 1)
    assert pair_set_A(lam) | pair_set_C(lam) == {(1, 2), (1, 3), (2, 3)}


def test_double_Q_of_three_one():
    q = theta_double((3, 1), 0)
    assert format_poly(q) == Q31
    by_hand = (c(3) - c(2) * (t(1) + t(2)) + c(1) * t(1) * t(2)) * c(1) - 2 * (
        c(4) - c(3) * (t(1) + t(2)) + c(2) * t(1) * t(2)
    )
    assert q == by_hand


def test_empty_partition_gives_one():
    for k in range(3):
        assert theta_double((), k) == ONE
        assert theta_single((), k) == ONE


def test_theta_one_is_shifted_c_one():
    assert theta_double((1,), 2) == c(1) - t(1) - t(2)
    assert theta_single((1,), 2) == c(1)


@pytest.mark.parametrize("row", GOLDEN, ids=lambda r: f"k{r['k']}-{''.join(map(str, r['lambda'])) or 'empty'}")
def test_against_frozen_oracle_values(row):
    lam = KStrictPartition(row["lambda"], row["k"])
    assert to_sympy(theta_double(lam)) == sympy.sympify(row["double"])
    assert to_sympy(theta_single(lam)) == sympy.sympify(row["single"])


def test_oracle_still_reproduces_frozen_values():
    for row in GOLDEN[:20]:
        assert naive_theta(tuple(row["lambda"]), row["k"]) == sympy.sympify(row["double"])


@given(k_strict())
def test_homogeneous_of_degree_size(lam):
    assert theta_double(lam).is_homogeneous(lam.size)
    assert theta_single(lam).is_homogeneous(lam.size)


@given(k_strict(max_size=6))
def test_single_is_double_at_t_zero(lam):
    f = theta_double(lam)
    zero = f.substitute({i: 0 for i in f.t_indices()})
    assert zero == theta_single(lam)


@given(k_strict(max_size=6))
def test_determinant_product_form(lam):
    assert theta_det_product(lam) == theta_double(lam)


PF_CASES = [
    (parts, k)
    for parts in [(1, 1, 1, 1), (3, 2, 1), (4, 1, 1), (5, 1)]
    for k in (0, 1, 2)
    if is_k_strict(parts, k)
]


@pytest.mark.parametrize("parts,k", PF_CASES)
def test_pfaffian_sum_form(parts, k):
    lam = KStrictPartition(parts, k)
    assert theta_pf_sum(lam) == theta_double(lam)


def test_pruning_only_drops_vanishing_pfaffians():
    lam = KStrictPartition((3, 2, 1), 1)
    beta = beta_seq(lam)
    kept = pf_multiset(lam, prune=True)
    dropped = [nu for nu in pf_multiset(lam) if nu not in kept]
    assert dropped
    assert all(not schur_pf_plain(nu, beta) for nu in dropped)


def test_memoized_pfaffian_matches_plain():
    for alpha in [(3, 1), (4, 2, 1), (2, 2, 1, 1), (5, 3, 2, 1)]:
        rho = tuple(range(-1, len(alpha) - 1))
        assert schur_pf(alpha, rho) == schur_pf_plain(alpha, rho)


def test_extreme_cases():
    det_case = KStrictPartition((2, 2, 1), 2)
    assert schur_det(det_case.parts, beta_seq(det_case)) == theta_double(det_case)
    pf_case = KStrictPartition((5, 3), 1)
    assert schur_pf(pf_case.parts, beta_seq(pf_case)) == theta_double(pf_case)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_factorial_expansions(k):
    for lam in k_strict_upto(6, k):
        if all(p <= k for p in lam.parts) or not pair_set_C(lam):
            if not pair_set_C(lam):
                assert factorial_S_rhs(lam) == theta_double(lam)
        if all(p > k for p in lam.parts):
            assert equal_in_quotient(factorial_Q_rhs(lam), theta_double(lam), k)


def test_parse_of_display_gives_back_the_polynomial():
    assert parse_poly(Q31) == theta_double((3, 1), 0)
