"""Exact integer Laurent polynomials in one variable q.

A :class:`LaurentPoly` is an immutable sparse map ``exponent -> coefficient``
with no zero coefficients stored.  Besides the ring operations it carries the
bar map ``q -> q^-1``, the change of variable ``p = -q^-1`` and the two
"splitting" steps used by every Kazhdan-Lusztig style triangular solve.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import Union

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "Q",
    "QINV",
    "P",
    "mono",
    "add",
    "mul",
    "neg",
    "scale",
    "bar",
    "split_positive",
    "split_negative",
    "express_in_p",
    "eval_at_one",
]

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Sparse Laurent polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()) -> None:
        if isinstance(terms, int):
            t = {0: terms} if terms else {}
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            t: dict[int, int] = {}
            for e, c in items:
                c = t.get(e, 0) + c
                if c:
                    t[e] = c
                else:
                    t.pop(e, None)
        self._t = t
        self._h: int | None = None

    @classmethod
    def _raw(cls, t: dict[int, int]) -> LaurentPoly:
        # trusted constructor: t already normalized and owned
        obj = cls.__new__(cls)
        obj._t = t
        obj._h = None
        return obj

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._t)

    def items(self) -> list[tuple[int, int]]:
        """Terms sorted by ascending exponent."""
        return sorted(self._t.items())

    def coeff(self, e: int) -> int:
        return self._t.get(e, 0)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def degree(self) -> int:
        """Largest exponent; raises on zero."""
        return max(self._t)

    def low_degree(self) -> int:
        """Smallest exponent; raises on zero."""
        return min(self._t)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: Scalar) -> LaurentPoly:
        o = _coerce(other)
        if not o._t:
            return self
        if not self._t:
            return o
        t = dict(self._t)
        for e, c in o._t.items():
            c = t.get(e, 0) + c
            if c:
                t[e] = c
            else:
                del t[e]
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._t.items()})
        o = _coerce(other)
        if not self._t or not o._t:
            return ZERO
        a, b = self._t, o._t
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        t: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._t) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._t.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly._raw({-e * -k: c ** (-k)})
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division; raises if ``other`` does not divide ``self``."""
        if not other._t:
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._t)
        dtop, dlo = max(other._t), min(other._t)
        lead = other._t[dtop]
        floor = min(rem) - dlo if rem else 0
        out: dict[int, int] = {}
        while rem:
            top = max(rem)
            e = top - dtop
            c, r = divmod(rem[top], lead)
            if r or e < floor:
                raise ValueError("polynomial division is not exact")
            out[e] = c
            for e2, c2 in other._t.items():
                v = rem.get(e + e2, 0) - c * c2
                if v:
                    rem[e + e2] = v
                else:
                    rem.pop(e + e2, None)
        return LaurentPoly._raw(out)

    # -- involutions ----------------------------------------------------------
    def bar(self) -> LaurentPoly:
        """The ring involution q -> q^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._t.items()})

    def express_in_p(self) -> LaurentPoly:
        """Rewrite in p = -q^-1: the term c q^e becomes c (-1)^e p^-e."""
        return LaurentPoly._raw({-e: (-c if e & 1 else c) for e, c in self._t.items()})

    def eval_at_one(self) -> int:
        return sum(self._t.values())

    def evaluate(self, x):
        """Evaluate at a value supporting ``**`` with negative exponents."""
        return sum(c * x ** e for e, c in self._t.items())

    # -- serialization ----------------------------------------------------------
    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> LaurentPoly:
        return cls((int(e), int(c)) for e, c in data)

    def format(self, var: str = "q") -> str:
        """Text form with ascending exponents, e.g. ``-q^-2 + 2 + q^3``."""
        if not self._t:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                x = var if e == 1 else f"{var}^{e}"
                body = x if a == 1 else f"{a}{x}"
            if i == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    @classmethod
    def parse(cls, text: str, var: str = "q") -> LaurentPoly:
        """Inverse of :meth:`format` (whitespace-insensitive)."""
        import re

        s = text.replace(" ", "")
        if s in ("0", "", "·"):
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        pat = re.compile(rf"([+-])(\d*)({re.escape(var)}(?:\^(-?\d+))?)?")
        t: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = pat.match(s, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r}")
            c = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
            e = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
            t[e] = t.get(e, 0) + c
            pos = m.end()
        return cls(t)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"

    def __str__(self) -> str:
        return self.format()


def _coerce(x: Scalar) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})
QINV = LaurentPoly({-1: 1})
#: p = -q^-1 expressed in q
P = LaurentPoly({-1: -1})


def mono(e: int, c: int = 1) -> LaurentPoly:
    """The monomial c q^e."""
    return LaurentPoly._raw({e: c}) if c else ZERO


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def neg(a: LaurentPoly) -> LaurentPoly:
    return -a


def scale(a: LaurentPoly, c: int) -> LaurentPoly:
    return a * c


def bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def express_in_p(a: LaurentPoly) -> LaurentPoly:
    return a.express_in_p()


def eval_at_one(a: LaurentPoly) -> int:
    return a.eval_at_one()


def _check_antisymmetric(r: LaurentPoly) -> None:
    if r.bar() != -r:
        raise ValueError(f"split requires bar(r) = -r, got r = {r}")


def split_positive(r: LaurentPoly) -> LaurentPoly:
    """The unique f in qZ[q] with f - bar(f) = r."""
    _check_antisymmetric(r)
    return LaurentPoly._raw({e: c for e, c in r._t.items() if e > 0})


def split_negative(r: LaurentPoly) -> LaurentPoly:
    """The unique f in q^-1 Z[q^-1] with f - bar(f) = r."""
    _check_antisymmetric(r)
    return LaurentPoly._raw({e: c for e, c in r._t.items() if e < 0})
