"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from theta_forge.partitions import KStrictPartition, is_k_strict
from theta_forge.ring import ONE, ZERO, c, t


@st.composite
def monomials(draw, c_max=4, t_max=4, max_factors=4):
    out = ONE
    for _ in range(draw(st.integers(0, max_factors))):
        if draw(st.booleans()):
            out = out * c(draw(st.integers(1, c_max)))
        else:
            out = out * t(draw(st.integers(1, t_max)))
    return out


@st.composite
def polys(draw, max_terms=4, **kw):
    f = ZERO
    for _ in range(draw(st.integers(0, max_terms))):
        f = f + draw(monomials(**kw)).scale(draw(st.integers(-5, 5)))
    return f


@st.composite
def k_strict(draw, k_max=2, max_size=7):
    k = draw(st.integers(0, k_max))
    parts = draw(st.lists(st.integers(1, max_size), max_size=4))
    parts = sorted(parts, reverse=True)
    while sum(parts) > max_size:
        parts.pop(0)
    parts = [p for i, p in enumerate(parts) if p <= k or p not in parts[:i]]
    assert is_k_strict(parts, k)
    return KStrictPartition(parts, k)
