"""k-strict partitions and the small amount of partition combinatorics we need."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate


class NotKStrictError(ValueError):
    pass


def _strip(parts):
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@dataclass(frozen=True, order=True)
class KStrictPartition:
    """A partition whose parts exceeding ``k`` are pairwise distinct.

    Trailing zeros are dropped on construction, so ``(3, 1, 0)`` and
    ``(3, 1)`` give equal objects.
    """

    k: int
    parts: tuple

    def __init__(self, parts, k):
        parts = _strip(int(p) for p in parts)
        if k < 0:
            raise ValueError("k must be nonnegative")
        if any(p < 0 for p in parts):
            raise NotKStrictError(f"{parts} is not k-strict: negative part")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise NotKStrictError(f"{parts} is not k-strict: not weakly decreasing")
        big = [p for p in parts if p > k]
        if len(big) != len(set(big)):
            raise NotKStrictError(f"{parts} is not k-strict for k={k}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text, k):
        text = text.strip().strip("()[]")
        if not text:
            return cls((), k)
        try:
            parts = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
        except ValueError as exc:
            raise NotKStrictError(f"cannot parse partition {text!r}") from exc
        return cls(parts, k)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, j):
        """1-based part access with ``lam[j] = 0`` beyond the length."""
        if j < 1:
            raise IndexError("parts are indexed from 1")
        return self.parts[j - 1] if j <= len(self.parts) else 0

    @property
    def length(self):
        return len(self.parts)

    @property
    def k_length(self):
        return sum(1 for p in self.parts if p > self.k)

    @property
    def size(self):
        return sum(self.parts)

    def padded(self, n):
        return self.parts + (0,) * (n - len(self.parts))

    def fits(self, n):
        """Membership in P(k, n): fits inside an (n-k) x (n+k) rectangle."""
        if n < self.k:
            return False
        return len(self.parts) <= n - self.k and (not self.parts or self.parts[0] <= n + self.k)

    def min_rank(self):
        return max(len(self.parts) + self.k, (self.parts[0] - self.k) if self.parts else 0, self.k + 1)

    def column_heights(self):
        """Conjugate partition."""
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1))

    def contains(self, other):
        return all(self[i] >= other[i] for i in range(1, max(len(self), len(other)) + 1))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def is_k_strict(parts, k):
    try:
        KStrictPartition(parts, k)
    except NotKStrictError:
        return False
    return True


def dominates(mu, lam):
    """``mu >= lam`` in dominance order (partitions of the same size)."""
    a = list(accumulate(mu))
    b = list(accumulate(lam))
    n = max(len(a), len(b))
    a += [a[-1] if a else 0] * (n - len(a))
    b += [b[-1] if b else 0] * (n - len(b))
    return all(x >= y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _partitions(n, max_part):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n, max_part=None):
    return _partitions(n, n if max_part is None else max_part)


def k_strict_partitions(size, k):
    """All k-strict partitions of ``size`` in reverse lexicographic order."""
    return [KStrictPartition(p, k) for p in partitions_of(size) if is_k_strict(p, k)]


def k_strict_upto(max_size, k):
    out = []
    for s in range(max_size + 1):
        out.extend(k_strict_partitions(s, k))
    return out


def in_rectangle(rows, cols, k):
    """k-strict partitions with at most ``rows`` parts, each at most ``cols``."""
    out = []
    for s in range(rows * cols + 1):
        for p in partitions_of(s, cols):
            if len(p) <= rows and is_k_strict(p, k):
                out.append(KStrictPartition(p, k))
    return out


def p_kn(k, n):
    """The finite set P(k, n)."""
    if n < k:
        return []
    return in_rectangle(n - k, n + k, k)


def sub_partitions(lam):
    """All partitions contained in ``lam`` (as tuples, any k)."""
    lam = tuple(lam)

    def rec(i, bound):
        if i == len(lam):
            yield ()
            return
        for v in range(min(bound, lam[i]), -1, -1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for p in rec(0, lam[0] if lam else 0):
        yield _strip(p)
