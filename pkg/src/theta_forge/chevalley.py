"""The equivariant Chevalley rule for ``Theta_1 * Theta_lam``."""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import KStrictPartition, is_k_strict
from .quotient import Expansion, nf_mul, theta_expansion, theta_nf
from .ring import ZERO, format_poly, t
from .raising import gamma_seq, t_poly
from .theta import as_partition, beta_seq, pair_set_C
from .weyl import full_window

__all__ = [
    "k_related",
    "ChevalleyTerm",
    "chevalley_covers",
    "chevalley_t_coeff",
    "chevalley_rhs",
    "chevalley_lhs",
    "verify_chevalley",
    "row_terms",
    "chevalley_gamma",
]


def k_related(box1, box2, k):
    """Boxes ``[r, c]`` and ``[r', c']`` with ``|c - k - 1| + r = |c' - k - 1| + r'``."""
    (r1, c1), (r2, c2) = box1, box2
    return abs(c1 - k - 1) + r1 == abs(c2 - k - 1) + r2


@dataclass(frozen=True)
class ChevalleyTerm:
    mu: KStrictPartition
    multiplicity: int
    kind: str

    def to_json(self):
        return {"mu": list(self.mu.parts), "e": self.multiplicity, "kind": self.kind}


def _column_height(parts, col):
    return sum(1 for p in parts if p >= col)


def _bottom_boxes(parts, k):
    """Bottom boxes of the first ``k`` columns."""
    return [(_column_height(parts, c), c) for c in range(1, k + 1) if _column_height(parts, c) > 0]


def _full_pairs(parts, k):
    # beyond max(length, lam_1) + 1 no pair can satisfy lam_i + lam_j > 2k + j - i
    lam = KStrictPartition(parts, k)
    return pair_set_C(lam, max(lam.length, lam[1]) + 1)


def _add_box_covers(lam):
    k, parts = lam.k, list(lam.parts)
    bottoms = _bottom_boxes(lam.parts, k)
    out = []
    for row in range(1, len(parts) + 2):
        new = parts + [0] if row == len(parts) + 1 else list(parts)
        new[row - 1] += 1
        if not is_k_strict(new, k):
            continue
        box = (row, new[row - 1])
        double = box[1] > k + 1 and not any(k_related(box, b, k) for b in bottoms)
        out.append((KStrictPartition(new, k), 2 if double else 1, row))
    return out


def _move_covers(lam):
    """Rule (ii): take ``r`` boxes off the bottom of a column ``c0 <= k`` and add ``r + 1`` to one row."""
    k, parts = lam.k, lam.parts
    out = []
    for c0 in range(1, k + 1):
        height = _column_height(parts, c0)
        r = 0
        while r < height and parts[height - 1 - r] == c0:
            r += 1
            removed_rows = range(height - r + 1, height + 1)
            base = list(parts)
            for i in removed_rows:
                base[i - 1] = c0 - 1
            for row in range(1, len(base) + 2):
                new = base + [0] if row == len(base) + 1 else list(base)
                start = new[row - 1]
                new[row - 1] += r + 1
                if any(a < b for a, b in zip(new, new[1:])) or not is_k_strict(new, k):
                    continue
                mu = KStrictPartition(new, k)
                if mu.contains(lam):
                    continue
                added = [(row, c) for c in range(start + 1, start + r + 2)]
                removed = [(i, c0) for i in removed_rows]
                h_mu = _column_height(mu.parts, c0)
                checks = removed + ([(h_mu, c0)] if h_mu > 0 else [])
                if all(any(k_related(b, a, k) for a in added) for b in checks):
                    out.append((mu, 1, row))
    return out


def chevalley_covers(lam, k=None):
    """All ``mu`` with ``lam -> mu`` together with ``e_{lam mu}`` and the type I/IIa/IIb/IIc."""
    lam = as_partition(lam, k)
    k = lam.k
    pairs_lam = _full_pairs(lam.parts, k)
    seen = {}
    for mu, e, row in _add_box_covers(lam) + _move_covers(lam):
        if mu.parts in seen:
            continue
        pairs_mu = _full_pairs(mu.parts, k)
        if pairs_mu == pairs_lam:
            kind = "I"
        elif e == 2:
            kind = "IIa"
        elif mu.size - lam.size == 1 and mu.contains(lam) and mu[row] <= k:
            kind = "IIb"
        else:
            kind = "IIc"
        seen[mu.parts] = ChevalleyTerm(mu, e, kind)
    return sorted(seen.values(), key=lambda term: term.mu.parts)


def chevalley_t_coeff(lam, k=None, window="full"):
    """The t-linear coefficient of ``Theta_lam`` in ``Theta_1 * Theta_lam``.

    ``sum_{j=k+1}^{k+L} t_j + sum_{j<=l_k} t_{lam_j-k} - sum_{l_k<j<=L} t_{beta_j}``.
    ``window="full"`` takes ``L = max(l, lam_1 - 2k)``, covering every pair of
    ``C(lam)``; ``window="length"`` takes ``L = l`` as in the usual statement,
    which is wrong once ``lam_1 > 2k + l`` (for instance ``lam = (3)``, ``k = 0``).
    """
    lam = as_partition(lam, k)
    k = lam.k
    if window == "full":
        L = full_window(lam)
    elif window == "length":
        L = lam.length
    else:
        raise ValueError(f"unknown window {window!r}")
    beta = beta_seq(lam, L)
    out = ZERO
    for j in range(k + 1, k + L + 1):
        out = out + t(j)
    for j in range(1, lam.k_length + 1):
        out = out + t(lam[j] - k)
    for j in range(lam.k_length + 1, L + 1):
        out = out - t(beta[j - 1])
    return out


def chevalley_rhs(lam, k=None, window="full"):
    lam = as_partition(lam, k)
    coeffs = {lam.parts: chevalley_t_coeff(lam, window=window)}
    for term in chevalley_covers(lam):
        coeffs[term.mu.parts] = coeffs.get(term.mu.parts, ZERO) + term.multiplicity
    return Expansion(coeffs, lam.k, "theta")


def chevalley_lhs(lam, k=None):
    """Theta-basis expansion of ``Theta_1 * Theta_lam`` computed in the quotient."""
    lam = as_partition(lam, k)
    one = KStrictPartition((1,), lam.k)
    return theta_expansion(nf_mul(theta_nf(one), theta_nf(lam)), lam.k)


def verify_chevalley(lam, k=None):
    """Report comparing the algebraic product with the combinatorial rule (never raises on mismatch)."""
    lam = as_partition(lam, k)
    lhs = chevalley_lhs(lam)
    rhs = chevalley_rhs(lam)
    covers = chevalley_covers(lam)
    return {
        "lambda": list(lam.parts),
        "k": lam.k,
        "pass": lhs == rhs,
        "lhs": lhs.to_json(),
        "rhs": rhs.to_json(),
        "covers": [term.to_json() for term in covers],
        "coefficient": format_poly(chevalley_t_coeff(lam)),
    }


def row_terms(lam, k=None):
    """Theta-expansions of ``T(C, lam + e_h)`` for ``h = 1 .. l + 1`` with ``C = C(lam)`` cut at ``j <= l``.

    Their sum is the cover part of the product plus a multiple of ``Theta_lam``;
    this splits the product row by row for diagnostics.
    """
    lam = as_partition(lam, k)
    k = lam.k
    L = lam.length
    C = pair_set_C(lam, L)
    out = {}
    for h in range(1, L + 2):
        mu = list(lam.padded(L + 1))
        mu[h - 1] += 1
        out[h] = theta_expansion(t_poly(C, tuple(mu), k), k)
    return out



def chevalley_gamma(lam, k=None):
    """``gamma(C, lam + e_{l+1}) = (beta_1, ..., beta_l, k + l)``, the superscripts used for ``c_1 * Theta_lam``."""
    lam = as_partition(lam, k)
    L = lam.length
    mu = lam.padded(L + 1)[:L] + (1,)
    return gamma_seq(pair_set_C(lam, L), mu, lam.k)
