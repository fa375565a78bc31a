"""Double and single theta polynomials and their determinant/Pfaffian forms."""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .partitions import KStrictPartition, sub_partitions
from .raising import combine_monomials, expand, gamma_seq, raising_apply
from .ring import ONE, ZERO, Polynomial, _complete_sym_neg_t, c_power
from .raising import two_row_ratio

__all__ = [
    "as_partition",
    "pair_set_C",
    "pair_set_A",
    "beta_seq",
    "theta_double",
    "theta_single",
    "schur_det",
    "schur_pf",
    "schur_pf_plain",
    "theta_det_product",
    "pf_multiset",
    "theta_pf_sum",
    "factorial_S_rhs",
    "factorial_Q_rhs",
    "is_determinantal",
    "all_parts_large",
]


def as_partition(lam, k=None):
    if isinstance(lam, KStrictPartition):
        if k is not None and k != lam.k:
            return KStrictPartition(lam.parts, k)
        return lam
    if k is None:
        raise ValueError("k is required for a bare sequence")
    return KStrictPartition(lam, k)


def pair_set_C(lam, L=None):
    """``{(i, j) : i < j <= L, lam_i + lam_j > 2k + j - i}`` with ``L`` defaulting to the length."""
    lam = as_partition(lam)
    L = lam.length if L is None else L
    k = lam.k
    return frozenset(
        (i, j) for j in range(2, L + 1) for i in range(1, j) if lam[i] + lam[j] > 2 * k + j - i
    )


def pair_set_A(lam, L=None):
    """The complement of ``C(lam)`` among pairs with ``j <= L``."""
    lam = as_partition(lam)
    L = lam.length if L is None else L
    C = pair_set_C(lam, L)
    return frozenset((i, j) for j in range(2, L + 1) for i in range(1, j) if (i, j) not in C)


def beta_seq(lam, L=None):
    lam = as_partition(lam)
    L = lam.length if L is None else L
    return gamma_seq(pair_set_C(lam, L), lam.padded(L), lam.k)


@lru_cache(maxsize=None)
def _theta_double(parts, k):
    lam = KStrictPartition(parts, k)
    return raising_apply(pair_set_C(lam), lam.parts, beta_seq(lam))


def theta_double(lam, k=None):
    """``Theta_lam(c|t) = R^lam c^{beta(lam)}_lam`` in ``Z[c, t]``."""
    lam = as_partition(lam, k)
    return _theta_double(lam.parts, lam.k)


@lru_cache(maxsize=None)
def _theta_single(parts, k):
    lam = KStrictPartition(parts, k)
    L = lam.length
    if L == 0:
        return ONE
    factors = {(i, j): ("ratio" if (i, j) in pair_set_C(lam) else "minus") for j in range(2, L + 1) for i in range(1, j)}
    terms = expand(factors, lam.parts, (0,) * L)
    # c^0_p = c_p, so a zero superscript gives the t = 0 specialization directly
    return combine_monomials(terms, (0,) * L)


def theta_single(lam, k=None):
    """``Theta_lam(c) = Theta_lam(c|0)``."""
    lam = as_partition(lam, k)
    return _theta_single(lam.parts, lam.k)


def _determinant(n, entry):
    """Laplace expansion along rows with memo on the set of used columns."""
    memo = {}

    def rec(row, used):
        if row == n:
            return ONE
        if used in memo:
            return memo[used]
        acc = defaultdict(int)
        sign = 1
        for col in range(n):
            bit = 1 << col
            if used & bit:
                continue
            e = entry(row, col)
            if e:
                minor = rec(row + 1, used | bit)
                if minor:
                    for key, v in (e * minor)._terms.items():
                        acc[key] += sign * v
            sign = -sign
        out = Polynomial(acc)
        memo[used] = out
        return out

    return rec(0, 0)


def schur_det(alpha, rho):
    """``S^rho_alpha = det(c^{rho_i}_{alpha_i + j - i})``."""
    alpha, rho = tuple(alpha), tuple(rho)
    if len(alpha) != len(rho):
        raise ValueError("alpha and rho must have equal length")
    return _determinant(len(alpha), lambda i, j: c_power(alpha[i] + j - i, rho[i]))


def _pfaffian(n, entry):
    """Pfaffian of the antisymmetric matrix with upper entries ``entry(i, j)``, ``i < j``."""
    if n % 2:
        raise ValueError("Pfaffian needs an even size")
    memo = {}

    def rec(mask):
        if mask == 0:
            return ONE
        if mask in memo:
            return memo[mask]
        idx = [i for i in range(n) if mask >> i & 1]
        first = idx[0]
        acc = defaultdict(int)
        for pos, j in enumerate(idx[1:]):
            e = entry(first, j)
            if not e:
                continue
            rest = rec(mask & ~(1 << first) & ~(1 << j))
            if not rest:
                continue
            sign = -1 if pos % 2 else 1
            for key, v in (e * rest)._terms.items():
                acc[key] += sign * v
        out = Polynomial(acc)
        memo[mask] = out
        return out

    return rec((1 << n) - 1)


@lru_cache(maxsize=200000)
def _pf_rows(rows):
    """Pfaffian for an even tuple of ``(alpha_i, rho_i)`` rows.

    Every principal sub-Pfaffian is again a ``Q`` of the subsequence, so the
    memo is shared across all vectors, and a negative tail sum means zero.
    """
    if not rows:
        return ONE
    tail = 0
    for a, _ in reversed(rows):
        tail += a
        if tail < 0:
            return ZERO
    (a1, r1), rest = rows[0], rows[1:]
    acc = defaultdict(int)
    for pos, (aj, rj) in enumerate(rest):
        e = two_row_ratio(a1, aj, r1, rj)
        if not e:
            continue
        sub = _pf_rows(rest[:pos] + rest[pos + 1 :])
        if not sub:
            continue
        sign = -1 if pos % 2 else 1
        for key, v in (e * sub)._terms.items():
            acc[key] += sign * v
    return Polynomial(acc)


def schur_pf(alpha, rho):
    """``Q^rho_alpha`` as a Pfaffian of two-row ratio entries; odd length is padded by ``(0, 0)``."""
    alpha, rho = list(alpha), list(rho)
    if len(alpha) != len(rho):
        raise ValueError("alpha and rho must have equal length")
    if len(alpha) % 2:
        alpha.append(0)
        rho.append(0)
    return _pf_rows(tuple(zip(alpha, rho)))


def schur_pf_plain(alpha, rho):
    """Same Pfaffian without shared memo or vanishing shortcuts (reference route)."""
    alpha, rho = list(alpha), list(rho)
    if len(alpha) != len(rho):
        raise ValueError("alpha and rho must have equal length")
    if len(alpha) % 2:
        alpha.append(0)
        rho.append(0)
    return _pfaffian(len(alpha), lambda i, j: two_row_ratio(alpha[i], alpha[j], rho[i], rho[j]))


def theta_det_product(lam, k=None):
    """``prod_{C_l(lam)} (1 + R_ij)^{-1}`` applied to the determinant ``S^{beta}_lam``.

    A determinant row ``j`` of ``S_alpha`` vanishes once ``alpha_j + l - j < 0``,
    which is the floor that makes the series finite.
    """
    lam = as_partition(lam, k)
    L = lam.length
    if L == 0:
        return ONE
    beta = beta_seq(lam)
    factors = {p: "inv" for p in pair_set_C(lam)}
    floors = tuple(j - L for j in range(1, L + 1))
    out = ZERO
    for nu, coeff in expand(factors, lam.parts, floors).items():
        out = out + schur_det(nu, beta).scale(coeff)
    return out


def pf_multiset(lam, k=None, prune=False):
    """``{prod_{(i,j) in S} R_ij lam : S subset A_l(lam)}`` as vector -> multiplicity.

    With ``prune`` vectors having a negative tail sum are left out; their
    Pfaffians vanish because ``Q_nu`` is the raising expansion of ``c_nu`` and
    no raising can make such a tail nonnegative.
    """
    lam = as_partition(lam, k)
    factors = {p: "plus" for p in pair_set_A(lam)}
    return expand(factors, lam.parts, suffix_nonneg=prune)


def _pf_weighted_sum(weighted):
    """``sum_rows w * Pf(rows)`` over a dict of even row tuples.

    Expanding every Pfaffian along its first row and grouping by the chosen
    partner turns the sum into one multiplication per group; the weighted
    remainders recurse.
    """
    if not weighted:
        return ZERO
    n = len(next(iter(weighted)))
    if n == 0:
        return Polynomial.const(sum(weighted.values()))
    groups = defaultdict(lambda: defaultdict(int))
    for rows, w in weighted.items():
        tail = 0
        for a, _ in reversed(rows):
            tail += a
            if tail < 0:
                break
        else:
            first, rest = rows[0], rows[1:]
            for pos, partner in enumerate(rest):
                sign = -w if pos % 2 else w
                groups[(first, partner)][rest[:pos] + rest[pos + 1 :]] += sign
    acc = defaultdict(int)
    for ((a1, r1), (aj, rj)), sub_weighted in groups.items():
        e = two_row_ratio(a1, aj, r1, rj)
        if not e:
            continue
        sub = _pf_weighted_sum({rows: w for rows, w in sub_weighted.items() if w})
        if sub:
            for key, v in (e * sub)._terms.items():
                acc[key] += v
    return Polynomial(acc)


def theta_pf_sum(lam, k=None):
    """``sum_{nu in N} Q^{beta(lam)}_nu``; vectors with vanishing Pfaffian are skipped."""
    lam = as_partition(lam, k)
    if lam.length == 0:
        return ONE
    beta = list(beta_seq(lam))
    pad = lam.length % 2
    weighted = {}
    for nu, mult in pf_multiset(lam, prune=True).items():
        rows = tuple(zip(nu, beta)) + (((0, 0),) if pad else ())
        weighted[rows] = weighted.get(rows, 0) + mult
    return _pf_weighted_sum(weighted)


def is_determinantal(lam):
    """``lam_i + lam_j <= 2k + j - i`` for all ``i < j <= length``."""
    lam = as_partition(lam)
    return not pair_set_C(lam)


def all_parts_large(lam):
    lam = as_partition(lam)
    return all(p > lam.k for p in lam.parts)


@lru_cache(maxsize=None)
def _schur_S_single(mu):
    return _determinant(len(mu), lambda i, j: c_power(mu[i] + j - i, 0))


def factorial_S_rhs(lam, k=None):
    """``sum_{mu in lam} S_mu(c) det(h^{k+i-lam_i}_{lam_i - mu_j + j - i}(-t))``."""
    lam = as_partition(lam, k)
    if not is_determinantal(lam):
        raise ValueError("factorial S-expansion needs lam_i + lam_j <= 2k + j - i for all i < j")
    L, kk, parts = lam.length, lam.k, lam.parts
    out = ZERO
    for mu in sub_partitions(parts):
        mu_p = mu + (0,) * (L - len(mu))
        hdet = _determinant(
            L, lambda i, j: _complete_sym_neg_t(parts[i] - mu_p[j] + j - i, kk + (i + 1) - parts[i])
        )
        if hdet:
            out = out + _schur_S_single(mu_p) * hdet
    return out


def factorial_Q_rhs(lam, k=None):
    """``sum_mu Q_mu(c) det(h^{k+1-lam_i}_{lam_i - mu_j}(-t))`` over strict ``mu`` inside ``lam`` with all ``l`` parts ``> k``."""
    lam = as_partition(lam, k)
    if not all_parts_large(lam):
        raise ValueError("factorial Q-expansion needs every part of lam to exceed k")
    L, kk, parts = lam.length, lam.k, lam.parts
    out = ZERO
    for mu in sub_partitions(parts):
        if len(mu) != L or any(m <= kk for m in mu) or len(set(mu)) != L:
            continue
        hdet = _determinant(
            L, lambda i, j: _complete_sym_neg_t(parts[i] - mu[j], kk + 1 - parts[i])
        )
        if hdet:
            out = out + schur_pf(mu, (0,) * L) * hdet
    return out
