"""Signed permutations, the k-Grassmannian bijection, and the Omega representative."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import KStrictPartition, is_k_strict, sub_partitions
from .ring import ONE, ZERO, Polynomial, div_linear_t, t
from .theta import as_partition, beta_seq, pair_set_C, theta_single

__all__ = [
    "SignedPermutation",
    "coxeter_length",
    "partition_to_w",
    "grassmannian_to_partition",
    "is_k_grassmannian",
    "pair_set_from_w",
    "beta_from_w",
    "ReducedFactorization",
    "reduced_factorizations",
    "schubert_poly_A",
    "omega_poly",
    "localization_sigma1",
    "full_window",
    "agreement_sides",
]


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation in window notation ``(w_1, ..., w_n)``.

    Composition is right-to-left: ``(u * v)(i) = u(v(i))``, with ``w(-i) = -w(i)``.
    """

    window: tuple

    def __init__(self, window):
        window = tuple(int(x) for x in window)
        if sorted(abs(x) for x in window) != list(range(1, len(window) + 1)):
            raise ValueError(f"{window} is not a signed permutation")
        object.__setattr__(self, "window", window)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, i, n):
        """``s_0`` changes the sign of 1; ``s_i`` swaps ``i`` and ``i + 1``."""
        w = list(range(1, n + 1))
        if i == 0:
            w[0] = -1
        elif 1 <= i < n:
            w[i - 1], w[i] = w[i], w[i - 1]
        else:
            raise ValueError(f"no generator s_{i} in rank {n}")
        return cls(w)

    @classmethod
    def parse(cls, text):
        return cls(int(x) for x in text.replace(" ", "").split(",") if x)

    @property
    def n(self):
        return len(self.window)

    def __call__(self, i):
        if i == 0 or abs(i) > self.n:
            # fixed outside the window
            return i
        v = self.window[abs(i) - 1]
        return v if i > 0 else -v

    def extend(self, n):
        if n < self.n:
            raise ValueError("cannot shrink a signed permutation")
        return SignedPermutation(self.window + tuple(range(self.n + 1, n + 1)))

    def trimmed(self):
        w = list(self.window)
        while w and w[-1] == len(w):
            w.pop()
        return SignedPermutation(w)

    def __mul__(self, other):
        n = max(self.n, other.n)
        return SignedPermutation(self(other(i)) for i in range(1, n + 1))

    def inverse(self):
        out = [0] * self.n
        for i, v in enumerate(self.window, 1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(out)

    def is_unsigned(self):
        return all(v > 0 for v in self.window)

    def length(self):
        return coxeter_length(self)

    def __str__(self):
        return ",".join(map(str, self.window))


def coxeter_length(w):
    """``inv(w) + #{i <= j : w_i + w_j < 0}``, the length in the generators ``s_0, ..., s_{n-1}``."""
    v = w.window if isinstance(w, SignedPermutation) else tuple(w)
    n = len(v)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if v[i] > v[j])
    neg = sum(1 for i in range(n) for j in range(i, n) if v[i] + v[j] < 0)
    return inv + neg


def is_k_grassmannian(w, k):
    """Every right descent of ``w`` is at ``k``: ``l(w s_i) > l(w)`` for ``i != k``."""
    if not isinstance(w, SignedPermutation):
        w = SignedPermutation(w)
    lw = coxeter_length(w)
    for i in range(w.n):
        if i != k and coxeter_length(w * SignedPermutation.simple(i, w.n)) < lw:
            return False
    return True


def partition_to_w(lam, n=None, k=None):
    """The k-Grassmannian element ``w_lam`` in ``W_n`` (minimal rank when ``n`` is None)."""
    lam = as_partition(lam, k)
    k = lam.k
    if n is None:
        n = lam.min_rank()
    if not lam.fits(n):
        raise ValueError(f"rank too small: {lam} does not fit in P({k},{n})")
    m = n - k
    bottom = [0] * (m + 1)
    lk = lam.k_length
    used = set()
    for i in range(1, lk + 1):
        bottom[i] = -(lam[i] - k)
        used.add(lam[i] - k)
    top = []
    pos = m
    for v in range(n, 0, -1):
        if v in used:
            continue
        if pos > lk and len(top) == lam[pos]:
            bottom[pos] = v
            pos -= 1
        else:
            top.append(v)
    if len(top) != k or pos != lk:
        raise ValueError(f"rank too small: {lam} does not fit in P({k},{n})")
    return SignedPermutation(sorted(top) + bottom[1:])


def grassmannian_to_partition(w, k):
    if not isinstance(w, SignedPermutation):
        w = SignedPermutation(w)
    if w.n < k or not is_k_grassmannian(w, k):
        raise ValueError(f"{w} is not {k}-Grassmannian")
    top = w.window[:k]
    parts = []
    for v in w.window[k:]:
        if v < 0:
            parts.append(k - v)
        else:
            parts.append(sum(1 for p in top if p > v))
    return KStrictPartition(parts, k)


def pair_set_from_w(w, k):
    v = w.window[k:]
    return frozenset(
        (i, j) for j in range(2, len(v) + 1) for i in range(1, j) if v[i - 1] + v[j - 1] < 0
    )


def beta_from_w(w, k, L=None):
    v = w.window[k:]
    L = len(v) if L is None else L
    return tuple(x + 1 if x < 0 else x for x in v[:L])


@dataclass(frozen=True)
class ReducedFactorization:
    u: SignedPermutation
    mu: KStrictPartition


def reduced_factorizations(lam, k=None):
    """All ``u * w_mu = w_lam`` with ``u`` unsigned and lengths adding up."""
    lam = as_partition(lam, k)
    n = lam.min_rank()
    w_lam = partition_to_w(lam, n)
    length = coxeter_length(w_lam)
    out = []
    for parts in sub_partitions(lam.parts):
        if not is_k_strict(parts, lam.k):
            continue
        mu = KStrictPartition(parts, lam.k)
        w_mu = partition_to_w(mu, n)
        u = w_lam * w_mu.inverse()
        if u.is_unsigned() and coxeter_length(u) + coxeter_length(w_mu) == length:
            out.append(ReducedFactorization(u.trimmed(), mu))
    return out


@lru_cache(maxsize=None)
def _schubert(perm):
    n = len(perm)
    if all(perm[i] > perm[i + 1] for i in range(n - 1)):
        # longest element: the staircase monomial
        out = ONE
        for i in range(1, n):
            out = out * t(i, n - i)
        return out
    i = next(i for i in range(n - 1) if perm[i] < perm[i + 1])
    up = list(perm)
    up[i], up[i + 1] = up[i + 1], up[i]
    f = _schubert(tuple(up))
    # type A convention: (f - s_i f) / (t_i - t_{i+1})
    return div_linear_t(f - f.swap_t(i + 1, i + 2), i + 1, i + 2)


def schubert_poly_A(u):
    """Type A Schubert polynomial in ``t``, by divided differences from the longest element."""
    if not isinstance(u, SignedPermutation):
        u = SignedPermutation(u)
    if not u.is_unsigned():
        raise ValueError("Schubert polynomials need an unsigned permutation")
    perm = u.trimmed().window
    if not perm:
        return ONE
    return _schubert(perm)


def _negate_t(f):
    return f.substitute({i: -t(i) for i in f.t_indices()})


@lru_cache(maxsize=None)
def _omega(parts, k):
    out = ZERO
    for fac in reduced_factorizations(KStrictPartition(parts, k)):
        out = out + theta_single(fac.mu) * _negate_t(schubert_poly_A(fac.u.inverse()))
    return out


def omega_poly(lam, k=None):
    """``sum theta_single(mu) * S_{u^{-1}}(-t)`` over reduced factorizations ``u w_mu = w_lam``."""
    lam = as_partition(lam, k)
    return _omega(lam.parts, lam.k)


def localization_sigma1(lam, k=None):
    """``2 sum_{j <= l_k} t_{lam_j - k} + sum_{j <= k} (t_{w_j} - t_j)``."""
    lam = as_partition(lam, k)
    k = lam.k
    w = partition_to_w(lam)
    out = ZERO
    for j in range(1, lam.k_length + 1):
        out = out + t(lam[j] - k).scale(2)
    for j in range(1, k + 1):
        out = out + t(w(j)) - t(j)
    return out


def full_window(lam):
    """Largest second index of a pair in ``C(lam)``, or the length if that is larger.

    Beyond the length, ``(1, j)`` lies in ``C(lam)`` exactly when
    ``lam_1 > 2k + j - 1``, so the window is ``max(l, lam_1 - 2k)``.
    """
    lam = as_partition(lam)
    return max(lam.length, lam[1] - 2 * lam.k)


def agreement_sides(lam, k=None, L=None):
    """Both sides of ``sum_{j<=k} t_{w_j} + sum_{j<=l_k} t_{lam_j-k} + sum_{l_k<j<=L} t_{beta_j} = sum_{j<=k+L} t_j``.

    ``L`` defaults to :func:`full_window`; with ``L`` equal to the length the
    identity can fail (e.g. ``lam = (3)``, ``k = 0``).
    """
    lam = as_partition(lam, k)
    k = lam.k
    L = full_window(lam) if L is None else L
    w = partition_to_w(lam, max(lam.min_rank(), k + L))
    beta = beta_seq(lam, L)
    lhs = ZERO
    for j in range(1, k + 1):
        lhs = lhs + t(w(j))
    for j in range(1, lam.k_length + 1):
        lhs = lhs + t(lam[j] - k)
    for j in range(lam.k_length + 1, L + 1):
        lhs = lhs + t(beta[j - 1])
    rhs = ZERO
    for j in range(1, k + L + 1):
        rhs = rhs + t(j)
    return lhs, rhs
