"""Exact arithmetic in the graded ring Z[c, t].

Monomials are packed into a single Python integer: every variable owns a
fixed-width bit field holding its exponent, with ``c_p`` in the even slots
and ``t_i`` in the odd slots.  Multiplying monomials is then integer
addition, which keeps the inner loops of polynomial products cheap.

``c_0`` is identified with 1 and ``c_p`` with 0 for ``p < 0``.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from functools import lru_cache, reduce
from operator import or_

__all__ = [
    "Polynomial",
    "ParseError",
    "ZERO",
    "ONE",
    "c",
    "t",
    "poly_add",
    "poly_mul",
    "elem_sym",
    "complete_sym",
    "c_power",
    "substitute_t",
    "div_linear_t",
    "poly_to_json",
    "poly_from_json",
    "format_poly",
    "parse_poly",
]

FIELD = 16
_FMASK = (1 << FIELD) - 1


def _c_slot(p):
    return 2 * (p - 1)


def _t_slot(i):
    return 2 * (i - 1) + 1


def _c_key(p, e=1):
    return e << (FIELD * _c_slot(p))


def _t_key(i, e=1):
    return e << (FIELD * _t_slot(i))


@lru_cache(maxsize=None)
def _masks(nslots):
    cmask = tmask = high = 0
    for s in range(nslots):
        if s % 2 == 0:
            cmask |= _FMASK << (FIELD * s)
        else:
            tmask |= _FMASK << (FIELD * s)
        high |= 1 << (FIELD * s + FIELD - 1)
    return cmask, tmask, high


def _masks_for(key):
    nslots = max(2, -(-key.bit_length() // FIELD))
    # round up to a multiple of 16 slots so the cache stays tiny
    return _masks(-(-nslots // 16) * 16)


def split_key(key):
    """Split a packed monomial into its c-part and t-part (both packed)."""
    cmask, _, _ = _masks_for(key)
    ck = key & cmask
    return ck, key ^ ck


@lru_cache(maxsize=1 << 16)
def decode_key(key):
    """Return ``(c_exponents, t_exponents)`` as dense tuples starting at index 1.

    Trailing zeros are stripped.
    """
    cs, ts = [], []
    s = 0
    while key:
        e = key & _FMASK
        (ts if s % 2 else cs).append(e)
        key >>= FIELD
        s += 1
    while cs and cs[-1] == 0:
        cs.pop()
    while ts and ts[-1] == 0:
        ts.pop()
    return tuple(cs), tuple(ts)


def encode_key(c_exps=(), t_exps=()):
    """Inverse of :func:`decode_key`; accepts dense tuples or ``{index: exp}`` maps."""
    key = 0
    items_c = c_exps.items() if isinstance(c_exps, dict) else enumerate(c_exps, 1)
    items_t = t_exps.items() if isinstance(t_exps, dict) else enumerate(t_exps, 1)
    for p, e in items_c:
        if e < 0 or p < 1:
            raise ValueError(f"bad c exponent entry {p}:{e}")
        if e:
            key += _c_key(p, e)
    for i, e in items_t:
        if e < 0 or i < 1:
            raise ValueError(f"bad t exponent entry {i}:{e}")
        if e:
            key += _t_key(i, e)
    return key


@lru_cache(maxsize=1 << 16)
def c_partition(ckey):
    """The multiset of c-indices of a packed c-monomial, as a partition tuple."""
    cs, _ = decode_key(ckey)
    parts = []
    for p in range(len(cs), 0, -1):
        parts.extend([p] * cs[p - 1])
    return tuple(parts)


def c_monomial_key(parts):
    """Packed key of ``c_{a_1} c_{a_2} ...``; ``None`` if some index is negative."""
    key = 0
    for p in parts:
        if p < 0:
            return None
        if p:
            key += _c_key(p)
    return key


def _graded_degree(key):
    cs, ts = decode_key(key)
    return sum(p * e for p, e in enumerate(cs, 1)) + sum(ts)


class Polynomial:
    """An immutable element of Z[c, t] stored sparsely as ``{packed monomial: int}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self._terms = {k: v for k, v in terms.items() if v}
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        # terms must already be free of zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, n):
        return cls._wrap({0: n} if n else {})

    @classmethod
    def from_monomials(cls, items):
        """Build from ``(c_exps, t_exps, coeff)`` triples (dense tuples or maps)."""
        acc = defaultdict(int)
        for ce, te, coeff in items:
            acc[encode_key(ce, te)] += coeff
        return cls(acc)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        """A copy of the packed term map."""
        return dict(self._terms)

    def monomials(self):
        """Yield ``(c_exps, t_exps, coeff)`` with dense exponent tuples, canonical order."""
        for key in self._canonical_keys():
            ce, te = decode_key(key)
            yield ce, te, self._terms[key]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def constant_term(self):
        return self._terms.get(0, 0)

    def is_t_only(self):
        return all(split_key(k)[0] == 0 for k in self._terms)

    def is_c_only(self):
        return all(split_key(k)[1] == 0 for k in self._terms)

    def degrees(self):
        """Set of graded degrees occurring (``c_p`` has degree p, ``t_i`` degree 1)."""
        return {_graded_degree(k) for k in self._terms}

    def is_homogeneous(self, degree=None):
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def t_indices(self):
        out = set()
        for k in self._terms:
            _, ts = decode_key(k)
            out.update(i for i, e in enumerate(ts, 1) if e)
        return out

    def c_indices(self):
        out = set()
        for k in self._terms:
            cs, _ = decode_key(k)
            out.update(p for p, e in enumerate(cs, 1) if e)
        return out

    def _canonical_keys(self):
        def sort_key(k):
            ce, te = decode_key(k)
            return (_graded_degree(k), ce, te)

        return sorted(self._terms, key=sort_key, reverse=True)

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return Polynomial._wrap({k: -v for k, v in self._terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, v in b.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Polynomial._wrap(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) - v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Polynomial._wrap(out)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, n):
        if not n:
            return ZERO
        return Polynomial._wrap({k: v * n for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        _check_headroom(a)
        _check_headroom(b)
        if len(a) < len(b):
            a, b = b, a
        out = defaultdict(int)
        for kb, vb in b.items():
            for ka, va in a.items():
                out[ka + kb] += va * vb
        return Polynomial._wrap({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div_int(self, n):
        """Divide every coefficient by ``n``; raises if any division is inexact."""
        out = {}
        for k, v in self._terms.items():
            q, r = divmod(v, n)
            if r:
                raise ArithmeticError(f"coefficient {v} not divisible by {n}")
            out[k] = q
        return Polynomial._wrap(out)

    # -- substitution -----------------------------------------------------

    def substitute(self, t_map=None, c_map=None, strict=True):
        """Ring homomorphism defined on the generators.

        ``t_map`` / ``c_map`` send an index to a Polynomial (or int).  With
        ``strict`` every occurring t-index must be assigned; c-variables
        missing from ``c_map`` are left alone, as are unassigned t-variables
        when ``strict`` is false.
        """
        t_map = t_map or {}
        c_map = c_map or {}
        power_cache = {}

        def image_power(kind, idx, e):
            key = (kind, idx, e)
            if key not in power_cache:
                src = t_map if kind == "t" else c_map
                if idx in src:
                    base = src[idx]
                    if isinstance(base, int):
                        base = Polynomial.const(base)
                elif kind == "t" and strict:
                    raise KeyError(f"unassigned variable t[{idx}]")
                else:
                    base = Polynomial._wrap({(_t_key if kind == "t" else _c_key)(idx): 1})
                power_cache[key] = base**e
            return power_cache[key]

        acc = defaultdict(int)
        for k, v in self._terms.items():
            cs, ts = decode_key(k)
            term = Polynomial.const(v)
            for p, e in enumerate(cs, 1):
                if e:
                    term = term * image_power("c", p, e)
            for i, e in enumerate(ts, 1):
                if e:
                    term = term * image_power("t", i, e)
            for kk, vv in term._terms.items():
                acc[kk] += vv
        return Polynomial(acc)

    def swap_t(self, i, j):
        """Interchange ``t_i`` and ``t_j`` (a bit-field permutation, no products)."""
        si, sj = FIELD * _t_slot(i), FIELD * _t_slot(j)
        out = {}
        for k, v in self._terms.items():
            ei = (k >> si) & _FMASK
            ej = (k >> sj) & _FMASK
            out[k + ((ej - ei) << si) + ((ei - ej) << sj)] = v
        return Polynomial._wrap(out)

    def collect_t(self, i):
        """Split as ``sum_e coeff_e * t_i^e``; returns ``{e: coeff_e}``."""
        shift = FIELD * _t_slot(i)
        groups = defaultdict(dict)
        for k, v in self._terms.items():
            e = (k >> shift) & _FMASK
            groups[e][k - (e << shift)] = v
        return {e: Polynomial._wrap(d) for e, d in groups.items()}

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _check_headroom(terms):
    if not terms:
        return
    acc = reduce(or_, terms)
    _, _, high = _masks_for(acc)
    if acc & high:
        raise OverflowError("exponent too large for packed monomial representation")


ZERO = Polynomial._wrap({})
ONE = Polynomial._wrap({0: 1})


def c(p, e=1):
    """The generator ``c_p`` raised to ``e`` (``c_0 = 1``, ``c_p = 0`` for p < 0)."""
    if p < 0:
        return ZERO
    if p == 0:
        return ONE
    return Polynomial._wrap({_c_key(p, e): 1})


def t(i, e=1):
    """The variable ``t_i``; negative indices follow the convention ``t_{-i} = t_i``."""
    if i == 0:
        raise ValueError("t_0 is not a variable")
    return Polynomial._wrap({_t_key(abs(i), e): 1})


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


@lru_cache(maxsize=None)
def elem_sym(j, r):
    """``e_j(t_1, ..., t_r)``."""
    if j < 0 or r < 0 or j > r:
        return ZERO
    if j == 0:
        return ONE
    # e_j^r = e_j^{r-1} + t_r e_{j-1}^{r-1}
    return elem_sym(j, r - 1) + t(r) * elem_sym(j - 1, r - 1)


@lru_cache(maxsize=None)
def complete_sym(j, r):
    """``h^r_j(t)``: complete symmetric for r > 0, delta for r = 0, ``e^{-r}_j`` for r < 0."""
    if j < 0:
        return ZERO
    if r < 0:
        return elem_sym(j, -r)
    if j == 0:
        return ONE
    if r == 0:
        return ZERO
    # h_j^r = h_j^{r-1} + t_r h_{j-1}^r
    return complete_sym(j, r - 1) + t(r) * complete_sym(j - 1, r)


@lru_cache(maxsize=None)
def _complete_sym_neg_t(j, r):
    h = complete_sym(j, r)
    return -h if j % 2 else h


@lru_cache(maxsize=None)
def c_power(p, r):
    """``c^r_p = sum_{j=0}^{p} c_{p-j} h^r_j(-t)``."""
    if p < 0:
        return ZERO
    out = ZERO
    for j in range(p + 1):
        h = _complete_sym_neg_t(j, r)
        if h:
            out = out + c(p - j) * h
    return out


def _shift_monomials(f, key):
    return Polynomial._wrap({k + key: v for k, v in f._terms.items()})


def div_linear_t(f, i, j=None):
    """Exact quotient ``f / (t_i - t_j)``, or ``f / t_i`` when ``j`` is None.

    Synthetic division in ``t_i`` over the coefficients; a nonzero remainder
    raises ``ArithmeticError``.
    """
    if not f:
        return ZERO
    parts = f.collect_t(i)
    top = max(parts)
    ti = _t_key(i)
    tj = None if j is None else _t_key(j)
    q = {}
    carry = ZERO
    # q_{e-1} = g_e + t_j q_e, walking down from the top exponent
    for e in range(top, 0, -1):
        g = parts.get(e, ZERO)
        carry = g if tj is None else g + _shift_monomials(carry, tj)
        if carry:
            q[e - 1] = carry
    remainder = parts.get(0, ZERO)
    if tj is not None:
        remainder = remainder + _shift_monomials(carry, tj)
    if remainder:
        raise ArithmeticError("polynomial is not divisible by the linear form")
    acc = {}
    for e, coeff in q.items():
        shift = ti * e
        for k, v in coeff._terms.items():
            acc[k + shift] = v
    return Polynomial._wrap(acc)


def substitute_t(f, assignment):
    """Substitute ``t_i -> assignment[i]``; every occurring index must be assigned."""
    missing = f.t_indices() - set(assignment)
    if missing:
        raise KeyError(f"unassigned variable t[{min(missing)}]")
    return f.substitute(t_map=assignment)


# -- formatting -------------------------------------------------------------


def _factors(ce, te, style):
    out = []
    for name, exps in (("c", ce), ("t", te)):
        for idx, e in enumerate(exps, 1):
            if not e:
                continue
            if style == "latex":
                f = f"{name}_{{{idx}}}"
                if e > 1:
                    f += f"^{{{e}}}"
            else:
                f = f"{name}[{idx}]"
                if e > 1:
                    f += f"^{e}"
            out.append(f)
    return out


def format_poly(f, fmt="text"):
    """Canonical rendering: terms by graded degree, then c-exponents, then t-exponents (descending)."""
    if fmt == "json":
        return json.dumps(poly_to_json(f), separators=(",", ":"))
    if fmt not in ("text", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    if f.is_zero():
        return "0"
    joiner = "*" if fmt == "text" else " "
    pieces = []
    for ce, te, coeff in f.monomials():
        facs = _factors(ce, te, fmt)
        mag = abs(coeff)
        if not facs:
            body = str(mag)
        elif mag == 1:
            body = joiner.join(facs)
        else:
            body = joiner.join([str(mag)] + facs)
        if not pieces:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(pieces)


def poly_to_json(f):
    terms = []
    for ce, te, coeff in f.monomials():
        terms.append(
            {
                "c": [[p, e] for p, e in enumerate(ce, 1) if e],
                "t": [[i, e] for i, e in enumerate(te, 1) if e],
                "coeff": str(coeff),
            }
        )
    return {"terms": terms}


def poly_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        items = []
        for term in obj["terms"]:
            ce = {int(p): int(e) for p, e in term.get("c", [])}
            te = {int(i): int(e) for i, e in term.get("t", [])}
            items.append((ce, te, int(term["coeff"])))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed polynomial JSON: {exc}", 0) from exc
    return Polynomial.from_monomials(items)


# -- parsing ----------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)\s*\[([-\d,\s]*)\]|(\^)|(\*)|([+-]))")


class _Parser:
    def __init__(self, text, atoms=None):
        self.text = text
        self.atoms = atoms or {}
        self.pos = 0
        self.tokens = []
        self._tokenize()
        self.i = 0

    def _tokenize(self):
        pos, text = 0, self.text
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
            if m.group(1):
                self.tokens.append(("num", int(m.group(1)), start))
            elif m.group(2):
                name, body = m.group(2), m.group(3)
                try:
                    args = tuple(int(x) for x in body.replace(" ", "").split(",") if x)
                except ValueError:
                    raise ParseError(f"bad index list {body!r}", start) from None
                if name in ("c", "t"):
                    if len(args) != 1:
                        raise ParseError(f"{name}[...] takes one index", start)
                    args = args[0]
                self.tokens.append(("var", (name, args), start))
            elif m.group(4):
                self.tokens.append(("^", None, start))
            elif m.group(5):
                self.tokens.append(("*", None, start))
            else:
                self.tokens.append(("sign", m.group(6), start))
            pos = m.end()
        self.tokens.append(("end", None, len(text)))

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        total = ZERO
        sign = 1
        if self.peek()[0] == "sign":
            sign = -1 if self.take()[1] == "-" else 1
        while True:
            total = total + self.term().scale(sign)
            kind, val, pos = self.peek()
            if kind == "end":
                return total
            if kind != "sign":
                raise ParseError("expected '+' or '-'", pos)
            self.take()
            sign = -1 if val == "-" else 1

    def term(self):
        kind, val, pos = self.peek()
        coeff = 1
        factors = []
        if kind == "num":
            self.take()
            coeff = val
            nxt = self.peek()
            if nxt[0] == "*":
                self.take()
                if self.peek()[0] != "var":
                    raise ParseError("expected factor after '*'", self.peek()[2])
            elif nxt[0] == "var":
                pass
            else:
                return Polynomial.const(coeff)
        elif kind != "var":
            raise ParseError("expected a term", pos)
        factors.append(self.factor())
        while self.peek()[0] == "*":
            self.take()
            factors.append(self.factor())
        out = Polynomial.const(coeff)
        for f in factors:
            out = out * f
        return out

    def factor(self):
        kind, val, pos = self.take()
        if kind != "var":
            raise ParseError("expected c[p] or t[i]", pos)
        name, idx = val
        if name == "c":
            base = c(idx)
        elif name == "t":
            if idx < 1:
                raise ParseError(f"invalid t index {idx}", pos)
            base = t(idx)
        elif name in self.atoms:
            try:
                base = self.atoms[name](idx)
            except ValueError as exc:
                raise ParseError(str(exc), pos) from None
        else:
            raise ParseError(f"unknown symbol {name!r}", pos)
        while self.peek()[0] == "^":
            self.take()
            kind, e, epos = self.take()
            if kind != "num":
                raise ParseError("expected exponent", epos)
            base = base**e
        return base


def parse_poly(text, atoms=None):
    """Parse the text grammar produced by :func:`format_poly` (or its JSON form).

    ``atoms`` maps extra names to callables taking a tuple of integers, so
    that ``Theta[3,1]`` can stand for a polynomial built elsewhere.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        return poly_from_json(stripped)
    return _Parser(text, atoms).parse()
