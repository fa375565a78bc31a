"""Normal forms in ``C^(k)[t]`` and expansion in the theta basis.

The relations ``c_p^2 + 2 sum_{i=1}^{p} (-1)^i c_{p+i} c_{p-i} = 0`` for
``p > k`` rewrite any c-monomial into a Z-combination of ``c_lam`` with ``lam``
k-strict.  Each rewrite moves the monomial strictly up in dominance order at
fixed degree, which is asserted as it happens.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .partitions import KStrictPartition, dominates, is_k_strict
from .ring import ONE, ZERO, Polynomial, c_monomial_key, c_partition, poly_from_json, poly_to_json, split_key
from .theta import as_partition, theta_double

__all__ = [
    "Expansion",
    "reduce_monomial",
    "normal_form",
    "lift",
    "nf_mul",
    "theta_nf",
    "theta_expansion",
    "from_theta",
    "equal_in_quotient",
    "finite_truncate",
    "structure_constants",
]


def _key_order(lam):
    return (sum(lam), lam)


class Expansion:
    """``{k-strict partition: t-polynomial}`` in either the ``"c"`` or ``"theta"`` basis."""

    __slots__ = ("basis", "k", "coeffs")

    def __init__(self, coeffs=None, k=0, basis="theta"):
        if basis not in ("c", "theta"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.k = k
        self.coeffs = {}
        for lam, poly in (coeffs or {}).items():
            key = lam.parts if isinstance(lam, KStrictPartition) else tuple(lam)
            if not isinstance(poly, Polynomial):
                poly = Polynomial.const(poly)
            if not poly:
                continue
            if not poly.is_t_only():
                raise ValueError("expansion coefficients must be polynomials in t only")
            if not is_k_strict(key, k):
                raise ValueError(f"{key} is not k-strict for k={k}")
            self.coeffs[key] = poly

    def __getitem__(self, lam):
        key = lam.parts if isinstance(lam, KStrictPartition) else tuple(lam)
        return self.coeffs.get(key, ZERO)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(sorted(self.coeffs, key=_key_order))

    def items(self):
        return [(lam, self.coeffs[lam]) for lam in self]

    def _compatible(self, other):
        if not isinstance(other, Expansion):
            return False
        if (self.basis, self.k) != (other.basis, other.k):
            raise ValueError("cannot combine expansions of different bases or k")
        return True

    def __eq__(self, other):
        if isinstance(other, Expansion):
            return (self.basis, self.k, self.coeffs) == (other.basis, other.k, other.coeffs)
        if isinstance(other, dict):
            return self == Expansion(other, self.k, self.basis)
        return NotImplemented

    def __add__(self, other):
        if not self._compatible(other):
            return NotImplemented
        acc = dict(self.coeffs)
        for lam, p in other.coeffs.items():
            acc[lam] = acc.get(lam, ZERO) + p
        return Expansion(acc, self.k, self.basis)

    def __neg__(self):
        return Expansion({lam: -p for lam, p in self.coeffs.items()}, self.k, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly):
        return Expansion({lam: p * poly for lam, p in self.coeffs.items()}, self.k, self.basis)

    def to_json(self):
        return {
            "basis": self.basis,
            "k": self.k,
            "coeffs": [{"partition": list(lam), "poly": poly_to_json(p)} for lam, p in self.items()],
        }

    @classmethod
    def from_json(cls, obj):
        coeffs = {tuple(e["partition"]): poly_from_json(e["poly"]) for e in obj["coeffs"]}
        return cls(coeffs, obj["k"], obj["basis"])

    def __repr__(self):
        inner = ", ".join(f"{lam}: {p}" for lam, p in self.items())
        return f"Expansion({self.basis}, k={self.k}, {{{inner}}})"


@lru_cache(maxsize=None)
def _reduce(parts, k):
    """``parts`` sorted decreasingly; returns a tuple of ``(k-strict parts, coefficient)``."""
    p = next((a for a, b in zip(parts, parts[1:]) if a == b and a > k), None)
    if p is None:
        return ((parts, 1),)
    rest = list(parts)
    rest.remove(p)
    rest.remove(p)
    acc = defaultdict(int)
    for i in range(1, p + 1):
        new = rest + [p + i] + ([p - i] if p - i > 0 else [])
        new = tuple(sorted(new, reverse=True))
        if not (dominates(new, parts) and new != parts):
            raise AssertionError(f"rewrite {parts} -> {new} does not increase dominance")
        # c_p c_p = -2 sum_i (-1)^i c_{p+i} c_{p-i}
        coeff = -2 * (-1) ** i
        for lam, x in _reduce(new, k):
            acc[lam] += coeff * x
    return tuple((lam, x) for lam, x in acc.items() if x)


def reduce_monomial(alpha, k):
    """Image of ``prod c_{alpha_i}`` in the k-strict monomial basis (c-basis expansion)."""
    parts = tuple(sorted((a for a in alpha if a > 0), reverse=True))
    if any(a < 0 for a in alpha):
        return Expansion({}, k, "c")
    return Expansion({lam: x for lam, x in _reduce(parts, k)}, k, "c")


def _nf_dict(f, k):
    by_c = defaultdict(lambda: defaultdict(int))
    for key, v in f._terms.items():
        ckey, tkey = split_key(key)
        by_c[ckey][tkey] += v
    acc = defaultdict(lambda: defaultdict(int))
    for ckey, tterms in by_c.items():
        for lam, x in _reduce(c_partition(ckey), k):
            target = acc[lam]
            for tkey, v in tterms.items():
                target[tkey] += x * v
    out = {}
    for lam, tterms in acc.items():
        poly = Polynomial(tterms)
        if poly:
            out[lam] = poly
    return out


def normal_form(f, k):
    """Expansion of ``f`` in the basis ``{c_lam}`` of ``C^(k)[t]``."""
    if isinstance(f, Expansion):
        f = lift(f)
    return Expansion(_nf_dict(f, k), k, "c")


def lift(e):
    """The polynomial ``sum coeff * c_lam`` (c-basis) or ``sum coeff * Theta_lam`` (theta basis)."""
    acc = defaultdict(int)
    for lam, p in e.coeffs.items():
        if e.basis == "c":
            base = Polynomial._wrap({c_monomial_key(lam): 1})
        else:
            base = theta_double(lam, e.k)
        for key, v in (base * p)._terms.items():
            acc[key] += v
    return Polynomial(acc)


def nf_mul(a, b):
    """Product of two c-basis normal forms, reduced again."""
    if a.basis != "c" or b.basis != "c" or a.k != b.k:
        raise ValueError("nf_mul needs two c-basis expansions with equal k")
    acc = defaultdict(lambda: ZERO)
    for lam, p in a.coeffs.items():
        for mu, q in b.coeffs.items():
            pq = p * q
            if not pq:
                continue
            merged = tuple(sorted(lam + mu, reverse=True))
            for nu, x in _reduce(merged, a.k):
                acc[nu] = acc[nu] + pq.scale(x)
    return Expansion(dict(acc), a.k, "c")


@lru_cache(maxsize=None)
def _theta_nf(parts, k):
    nf = _nf_dict(theta_double(parts, k), k)
    lead = nf.get(parts)
    if lead != ONE:
        raise AssertionError(f"Theta_{parts} does not have leading monomial c_lam with coefficient 1")
    return nf


def theta_nf(lam, k=None):
    lam = as_partition(lam, k)
    return Expansion(_theta_nf(lam.parts, lam.k), lam.k, "c")


def _pivot(nf):
    top = max(sum(lam) for lam in nf)
    return min(lam for lam in nf if sum(lam) == top)


def theta_expansion(f, k):
    """The unique ``f = sum b_lam(t) Theta_lam`` in ``C^(k)[t]``.

    Peel off the top-degree, lexicographically smallest monomial each time;
    lexicographic order extends dominance, and ``Theta_lam`` is ``c_lam`` plus
    terms of lower c-degree or strictly higher dominance.
    """
    if isinstance(f, Expansion):
        if f.basis == "theta":
            return f
        nf = dict(f.coeffs)
    else:
        nf = _nf_dict(f, k)
    out = {}
    while nf:
        lam = _pivot(nf)
        b = nf[lam]
        out[lam] = b
        for mu, q in _theta_nf(lam, k).items():
            new = nf.get(mu, ZERO) - q * b
            if new:
                nf[mu] = new
            else:
                nf.pop(mu, None)
        if lam in nf:
            raise AssertionError(f"pivot {lam} survived its own subtraction")
    return Expansion(out, k, "theta")


def from_theta(e):
    """c-basis normal form of a theta-basis expansion (the construction side)."""
    if e.basis != "theta":
        raise ValueError("expected a theta-basis expansion")
    acc = defaultdict(lambda: ZERO)
    for lam, b in e.coeffs.items():
        for mu, q in _theta_nf(lam, e.k).items():
            acc[mu] = acc[mu] + q * b
    return Expansion(dict(acc), e.k, "c")


def equal_in_quotient(f, g, k):
    return not _nf_dict(f - g, k)


def finite_truncate(e, n, k=None):
    """Drop every key outside ``P(k, n)``; this is the projection to rank ``n``."""
    k = e.k if k is None else k
    kept = {lam: p for lam, p in e.coeffs.items() if KStrictPartition(lam, k).fits(n)}
    return Expansion(kept, k, e.basis)


def structure_constants(lam, mu, k, n=None):
    """Theta-basis expansion of ``Theta_lam * Theta_mu``, optionally truncated to ``P(k, n)``."""
    lam = as_partition(lam, k)
    mu = as_partition(mu, k)
    product = nf_mul(theta_nf(lam), theta_nf(mu))
    out = theta_expansion(product, k)
    return out if n is None else finite_truncate(out, n, k)
