"""The action of ``W_infinity`` on ``Z[c, t]``, divided differences, and descent of theta polynomials."""

from __future__ import annotations

import random
from functools import lru_cache

from .partitions import KStrictPartition
from .ring import ZERO, Polynomial, c, div_linear_t, t
from .theta import as_partition, theta_double
from .weyl import (
    SignedPermutation,
    coxeter_length,
    grassmannian_to_partition,
    is_k_grassmannian,
    partition_to_w,
)

__all__ = [
    "weyl_act",
    "divided_diff",
    "left_descent_target",
    "descent_case",
    "verify_descent",
    "top_partition",
    "reduced_word_to",
    "theta_from_top",
]


@lru_cache(maxsize=None)
def _s0_image_of_c(p):
    """``s_0(c_p) = c_p + 2 sum_{j=1}^{p} (-t_1)^j c_{p-j}``."""
    out = c(p)
    for j in range(1, p + 1):
        out = out + (t(1, j) * c(p - j)).scale(2 * (-1) ** j)
    return out


def weyl_act(i, f):
    """``s_i`` applied to ``f``; ``s_0`` negates ``t_1`` and twists every ``c_p``."""
    if i < 0:
        raise ValueError("generator index must be nonnegative")
    if i >= 1:
        return f.swap_t(i, i + 1)
    c_map = {p: _s0_image_of_c(p) for p in f.c_indices()}
    return f.substitute(t_map={1: -t(1)}, c_map=c_map, strict=False)


def divided_diff(i, f):
    """``(f - s_0 f) / 2t_1`` for ``i = 0``, ``(f - s_i f) / (t_{i+1} - t_i)`` otherwise.

    The division is exact for every ``f``; a remainder means the action is broken.
    """
    num = f - weyl_act(i, f)
    if not num:
        return ZERO
    try:
        if i == 0:
            return div_linear_t(num, 1).exact_div_int(2)
        return div_linear_t(num, i + 1, i)
    except ArithmeticError as exc:
        raise AssertionError(f"divided difference d_{i} is not exact") from exc


def left_descent_target(lam, i, k=None):
    """The ``mu`` with ``w_lam = s_i w_mu`` and ``|mu| = |lam| - 1``, or None."""
    lam = as_partition(lam, k)
    n = max(lam.min_rank(), i + 1)
    w = partition_to_w(lam, n)
    v = SignedPermutation.simple(i, n) * w
    if coxeter_length(v) != coxeter_length(w) - 1 or not is_k_grassmannian(v, lam.k):
        return None
    return grassmannian_to_partition(v, lam.k)


def descent_case(lam, i, k=None):
    """Which of the four shapes of ``w_lam`` makes ``i`` a left descent: ``"a"`` to ``"d"``."""
    lam = as_partition(lam, k)
    n = max(lam.min_rank(), i + 1)
    w = list(partition_to_w(lam, n).window)
    pos = {v: idx for idx, v in enumerate(w)}
    if i == 0:
        return "a" if -1 in pos else None
    if i + 1 in pos and i in pos and pos[i + 1] < pos[i]:
        return "b"
    if i in pos and -(i + 1) in pos and pos[i] < pos[-(i + 1)]:
        return "c"
    if -(i + 1) in pos and i in pos and pos[-(i + 1)] < pos[i]:
        return "d"
    return None


def verify_descent(lam, i, k=None):
    """``d_i Theta_lam == Theta_mu`` exactly, where ``w_lam = s_i w_mu``."""
    lam = as_partition(lam, k)
    mu = left_descent_target(lam, i)
    if mu is None:
        raise ValueError(f"s_{i} is not a left descent of w_{lam}")
    return divided_diff(i, theta_double(lam)) == theta_double(mu)


def top_partition(k, n):
    """``(n+k, n+k-1, ..., 2k+1)``, the partition of the longest k-Grassmannian element of ``W_n``."""
    return KStrictPartition(range(n + k, 2 * k, -1), k)


def _left_descents(u):
    n = u.n
    lu = coxeter_length(u)
    return [i for i in range(n) if coxeter_length(SignedPermutation.simple(i, n) * u) < lu]


def reduced_word_to(lam, n, rng=None):
    """Indices ``a_r, ..., a_1`` in application order so that ``d_{a_1} ... d_{a_r} Theta_top = Theta_lam``.

    Each step peels a left descent off ``u = w_cur w_lam^{-1}``: the smallest
    one, or a random one when ``rng`` is given.
    """
    lam = as_partition(lam)
    if not lam.fits(n):
        raise ValueError(f"rank too small: {lam} does not fit in P({lam.k},{n})")
    w_lam = partition_to_w(lam, n)
    cur = partition_to_w(top_partition(lam.k, n), n)
    u = cur * w_lam.inverse()
    if coxeter_length(cur) != coxeter_length(u) + coxeter_length(w_lam):
        raise AssertionError("top element does not factor through w_lam")
    word = []
    while coxeter_length(u) > 0:
        descents = _left_descents(u)
        i = descents[0] if rng is None else rng.choice(descents)
        word.append(i)
        u = SignedPermutation.simple(i, n) * u
    return word


def theta_from_top(lam, n, k=None, word=None, seed=None):
    """``Theta_lam`` obtained from ``Theta_top`` by iterated divided differences."""
    lam = as_partition(lam, k)
    if word is None:
        rng = None if seed is None else random.Random(seed)
        word = reduced_word_to(lam, n, rng)
    f = theta_double(top_partition(lam.k, n))
    for i in word:
        f = divided_diff(i, f)
    return f
