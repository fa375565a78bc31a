"""Raising operators acting on integer sequences and on the monomials ``c^gamma_alpha``.

A raising operator expression is a product over pairs ``(i, j)`` of one of

* ``1 - R_ij``                      (kind ``"minus"``)
* ``1 + R_ij``                      (kind ``"plus"``)
* ``(1 + R_ij)^{-1}``               (kind ``"inv"``, a formal series)
* ``(1 - R_ij) / (1 + R_ij)``       (kind ``"ratio"``, a formal series)

applied to a base sequence.  The series factors are made finite by a
per-position floor: a term whose final entry at position ``j`` lies below
``floor[j]`` is known to vanish.  Pairs are processed by decreasing second
index; raises into column ``j`` only come from pairs ``(j, l)`` with
``l > j``, so once column ``j`` is done its entry is final and can be pruned.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .ring import ONE, ZERO, Polynomial, c_power

__all__ = [
    "pair_set",
    "is_order_ideal",
    "outer_corners",
    "valid_pair_sets",
    "a_seq",
    "gamma_seq",
    "expand_operator",
    "expand",
    "raising_apply",
    "t_poly",
    "two_row_ratio",
]

_SERIES = ("inv", "ratio")


def pair_set(pairs=()):
    return frozenset((int(i), int(j)) for i, j in pairs)


def is_order_ideal(D):
    for i, j in D:
        if not 1 <= i < j:
            return False
        if i > 1 and (i - 1, j) not in D:
            return False
        if j - 1 > i and (i, j - 1) not in D:
            return False
    return True


def outer_corners(D, L):
    """Pairs ``(i, j)`` with ``j <= L`` outside ``D`` whose addition keeps ``D`` an order ideal."""
    if not is_order_ideal(D):
        raise ValueError("not a valid set of pairs")
    out = set()
    for j in range(2, L + 1):
        for i in range(1, j):
            if (i, j) in D:
                continue
            if (i == 1 or (i - 1, j) in D) and (j - 1 == i or (i, j - 1) in D):
                out.add((i, j))
    return out


def valid_pair_sets(L):
    """Every order ideal of pairs with second index at most ``L``."""
    out = [frozenset()]
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for D in frontier:
            for corner in outer_corners(D, L):
                E = D | {corner}
                if E not in seen:
                    seen.add(E)
                    out.append(E)
                    nxt.append(E)
        frontier = nxt
    return out


def a_seq(D, j):
    return sum(1 for i in range(1, j) if (i, j) not in D)


def gamma_seq(D, mu, k):
    """``gamma_j(D, mu) = k + 1 - mu_j + a_j(D)`` for ``j = 1..len(mu)``."""
    return tuple(k + 1 - m + a_seq(D, j) for j, m in enumerate(mu, 1))


def _apply_factor(states, i, j, kind, floor_j):
    i0, j0 = i - 1, j - 1
    out = defaultdict(int)
    for vec, coeff in states.items():
        out[vec] += coeff
        if kind in ("minus", "plus"):
            v = list(vec)
            v[i0] += 1
            v[j0] -= 1
            out[tuple(v)] += -coeff if kind == "minus" else coeff
            continue
        step = 2 if kind == "ratio" else 1
        v = list(vec)
        m = 0
        while True:
            m += 1
            v[i0] += 1
            v[j0] -= 1
            if v[j0] < floor_j:
                break
            out[tuple(v)] += coeff * step * (-1 if m % 2 else 1)
    return {v: x for v, x in out.items() if x}


@lru_cache(maxsize=4096)
def _expand_cached(factors, base, floors, suffix):
    L = len(base)
    by_col = defaultdict(list)
    for (i, j), kind in factors:
        if j <= L:
            by_col[j].append((i, kind))
    states = {base: 1}
    for j in sorted(by_col, reverse=True):
        floor_j = None if floors is None else floors[j - 1]
        for i, kind in sorted(by_col[j]):
            if kind in _SERIES and floor_j is None:
                raise ValueError("series factor needs a base sequence to terminate")
            states = _apply_factor(states, i, j, kind, floor_j if floor_j is not None else -(10**9))
        if floor_j is not None:
            states = {v: x for v, x in states.items() if v[j - 1] >= floor_j}
        if suffix:
            states = {v: x for v, x in states.items() if sum(v[j - 1 :]) >= 0}
    if floors is not None:
        states = {v: x for v, x in states.items() if all(a >= f for a, f in zip(v, floors))}
    return tuple(sorted(states.items(), reverse=True))


def expand(factors, base, floors=None, suffix_nonneg=False):
    """Expand a product of raising-operator factors applied to ``base``.

    ``factors`` maps pairs to kinds.  Returns ``{resulting sequence: coefficient}``.
    With ``suffix_nonneg`` every sequence with a negative tail sum
    ``v_j + v_{j+1} + ...`` is dropped (raising never moves mass rightward,
    so such a sequence can never be raised to a nonnegative one).
    """
    base = tuple(base)
    if floors is not None:
        floors = tuple(floors)
        if len(floors) != len(base):
            raise ValueError("floors must match the base length")
    key = tuple(sorted(dict(factors).items()))
    return dict(_expand_cached(key, base, floors, bool(suffix_nonneg)))


def _operator_factors(D, L):
    return {(i, j): ("ratio" if (i, j) in D else "minus") for j in range(2, L + 1) for i in range(1, j)}


def expand_operator(D, L, base=None):
    """Finite expansion of ``R^D`` on sequences of support length ``<= L``.

    Returns ``(coefficient, shift)`` pairs.  Without ``base`` only the
    ``(1 - R_ij)`` factors are allowed in the window (the series would not
    terminate); with ``base`` terms whose shifted sequence has a negative
    entry are dropped.
    """
    if not is_order_ideal(D):
        raise ValueError("not a valid set of pairs")
    if base is None:
        base_t = (0,) * L
        floors = None
    else:
        base_t = tuple(base) + (0,) * (L - len(base))
        if len(base_t) != L:
            raise ValueError("base longer than window")
        floors = (0,) * L
    terms = expand(_operator_factors(D, L), base_t, floors)
    return [(coeff, tuple(a - b for a, b in zip(vec, base_t))) for vec, coeff in terms.items()]


def combine_monomials(terms, gamma):
    """``sum_alpha coeff * prod_j c^{gamma_j}_{alpha_j}`` evaluated Horner-style.

    Terms sharing a prefix share the partial product, so the number of
    polynomial multiplications is the number of trie nodes, not terms.
    """
    L = len(gamma)
    items = [(a, x) for a, x in terms.items() if x]
    if not items:
        return ZERO
    if L == 0:
        return Polynomial.const(sum(x for _, x in items))

    def rec(group, pos):
        by_val = defaultdict(list)
        for a, x in group:
            by_val[a[pos]].append((a, x))
        acc = defaultdict(int)
        r = gamma[pos]
        for val, sub in by_val.items():
            base = c_power(val, r)
            if not base:
                continue
            if pos == L - 1:
                tail = sum(x for _, x in sub)
                if tail:
                    for k, v in base._terms.items():
                        acc[k] += v * tail
            else:
                rest = rec(sub, pos + 1)
                if rest:
                    for k, v in (base * rest)._terms.items():
                        acc[k] += v
        return Polynomial(acc)

    return rec(items, 0)


def raising_apply(D, alpha, gamma):
    """``R^D c^gamma_alpha`` with an explicit superscript sequence ``gamma``."""
    alpha = tuple(alpha)
    gamma = tuple(gamma)
    if len(alpha) != len(gamma):
        raise ValueError("alpha and gamma must have equal length")
    if not is_order_ideal(D):
        raise ValueError("not a valid set of pairs")
    L = len(alpha)
    if L == 0:
        return ONE
    terms = expand(_operator_factors(D, L), alpha, (0,) * L)
    return combine_monomials(terms, gamma)


def t_poly(D, mu, k):
    """``T(D, mu) = R^D c^{gamma(D, mu)}_mu``; the superscripts stay with their slots."""
    mu = tuple(mu)
    return raising_apply(D, mu, gamma_seq(D, mu, k))


@lru_cache(maxsize=None)
def two_row_ratio(p, q, rp, rq):
    """``(1 - R_12)/(1 + R_12) c^{(rp, rq)}_{(p, q)}``, truncated where ``c_{q-m}`` vanishes."""
    out = c_power(p, rp) * c_power(q, rq)
    for m in range(1, q + 1):
        term = c_power(p + m, rp) * c_power(q - m, rq)
        out = out + term.scale(2 if m % 2 == 0 else -2)
    return out
