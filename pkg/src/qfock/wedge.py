"""The finite q-wedge calculus: ordering rules, normal forms, bar involution.

Wedges u_{k_1} ∧ ... ∧ u_{k_r} are labelled by integer tuples.  A tuple is
*ordered* when strictly decreasing; ordered wedges form a basis and every
wedge is rewritten into that basis by the two-factor ordering rules R1-R4
applied to adjacent factors.

The production normal form uses memoized insertion: u_x ∧ u_w for an ordered
w is computed by rewriting the first pair and re-inserting.  Both the pair
rules and insertion are covariant under the translation k -> k + nl, so memo
keys are normalized by that shift.
"""
from __future__ import annotations

import threading
from collections import Counter
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .algebra import ONE, ZERO, LaurentPoly, mono
from .indexing import decompose

__all__ = [
    "WedgeSum",
    "pair_rule",
    "straighten",
    "straighten_naive",
    "bar_finite",
    "bar_finite_ordered",
    "boson_finite",
    "is_ordered",
    "wedge_geq",
    "kappa",
]

WedgeSum = dict[tuple[int, ...], LaurentPoly]


def is_ordered(k: Sequence[int]) -> bool:
    return all(k[i] > k[i + 1] for i in range(len(k) - 1))


def _add_into(acc: WedgeSum, key: tuple[int, ...], c: LaurentPoly) -> None:
    if not c:
        return
    v = acc.get(key)
    if v is None:
        acc[key] = c
    else:
        v = v + c
        if v:
            acc[key] = v
        else:
            del acc[key]


@lru_cache(maxsize=None)
def _quotient_series(m: int, odd: bool) -> LaurentPoly:
    # (q^{2m+1} + q^{-2m-1})/(q + q^-1) when odd, else (q^{2m} - q^{-2m})/(q + q^-1)
    if odd:
        num = LaurentPoly({2 * m + 1: 1, -2 * m - 1: 1})
    else:
        num = LaurentPoly({2 * m: 1, -2 * m: -1})
    return num.exact_div(LaurentPoly({1: 1, -1: 1}))


_QMQ = LaurentPoly({1: 1, -1: -1})  # q − q^-1


def _series(out: list, start_a: int, start_b: int, step: int, m0: int, coeff) -> None:
    # append (a, b, coeff(m)) for a = start_a − step·(m − m0), b = start_b + step·(m − m0) while a > b
    m = m0
    a, b = start_a, start_b
    while a > b:
        out.append(((a, b), coeff(m)))
        m += 1
        a -= step
        b += step


@lru_cache(maxsize=None)
def _pair_rule_norm(k1: int, k2: int, n: int, l: int) -> tuple[tuple[tuple[int, int], LaurentPoly], ...]:
    nl = n * l
    c1, d1, _ = decompose(k1, n, l)
    c2, d2, _ = decompose(k2, n, l)
    g = (c2 - c1) % nl
    dl = (n * (d2 - d1)) % nl
    out: list[tuple[tuple[int, int], LaurentPoly]] = []
    if g == 0 and dl == 0:  # R1
        out.append(((k2, k1), -ONE))
    elif dl == 0:  # R2
        out.append(((k2, k1), mono(-1, -1)))
        base = LaurentPoly({-2: 1, 0: -1})
        _series(out, k2 - g, k1 + g, nl, 0, lambda m: base * mono(-2 * m))
        _series(out, k2 - nl, k1 + nl, nl, 1, lambda m: -(base * mono(-2 * m + 1)))
    elif g == 0:  # R3
        out.append(((k2, k1), mono(1)))
        base = LaurentPoly({2: 1, 0: -1})
        _series(out, k2 - dl, k1 + dl, nl, 0, lambda m: base * mono(2 * m))
        _series(out, k2 - nl, k1 + nl, nl, 1, lambda m: base * mono(2 * m - 1))
    else:  # R4
        out.append(((k2, k1), ONE))
        odd = lambda m: _QMQ * _quotient_series(m, True)  # noqa: E731
        even = lambda m: _QMQ * _quotient_series(m, False)  # noqa: E731
        _series(out, k2 - dl, k1 + dl, nl, 0, odd)
        _series(out, k2 - g, k1 + g, nl, 0, odd)
        _series(out, k2 - g - dl, k1 + g + dl, nl, 1, even)
        _series(out, k2 - nl, k1 + nl, nl, 1, even)
    merged: WedgeSum = {}
    for key, c in out:
        _add_into(merged, key, c)
    return tuple(merged.items())


def pair_rule(k1: int, k2: int, n: int, l: int) -> list[tuple[tuple[int, int], LaurentPoly]]:
    """u_{k1} ∧ u_{k2} for k1 ≤ k2 as a combination of ordered pairs (a, b), a > b."""
    if k1 > k2:
        return [((k1, k2), ONE)]
    if k1 == k2:
        return []
    nl = n * l
    shift = ((k1 - 1) // nl) * nl
    res = _pair_rule_norm(k1 - shift, k2 - shift, n, l)
    return [((a + shift, b + shift), c) for (a, b), c in res]


class _InsertMemo:
    """Translation-normalized memo for u_x ∧ (ordered w); guarded by a lock."""

    def __init__(self) -> None:
        self._tables: dict[tuple[int, int], dict] = {}
        self._lock = threading.Lock()

    def table(self, n: int, l: int) -> dict:
        with self._lock:
            return self._tables.setdefault((n, l), {})

    def clear(self) -> None:
        with self._lock:
            self._tables.clear()


_MEMO = _InsertMemo()


def clear_caches() -> None:
    """Drop all memoized straightening results."""
    _MEMO.clear()
    _pair_rule_norm.cache_clear()


def _insert(x: int, w: tuple[int, ...], n: int, l: int, memo: dict) -> Mapping[tuple[int, ...], LaurentPoly]:
    if not w or x > w[0]:
        return {(x,) + w: ONE}
    if x == w[0]:
        return {}
    nl = n * l
    shift = ((x - 1) // nl) * nl
    if shift:
        xs = x - shift
        ws = tuple(v - shift for v in w)
        base = memo.get((xs, ws))
        if base is None:
            base = _insert_core(xs, ws, n, l, memo)
            memo[(xs, ws)] = base
        return {tuple(v + shift for v in key): c for key, c in base.items()}
    base = memo.get((x, w))
    if base is None:
        base = _insert_core(x, w, n, l, memo)
        memo[(x, w)] = base
    return base


def _insert_core(x: int, w: tuple[int, ...], n: int, l: int, memo: dict) -> WedgeSum:
    acc: WedgeSum = {}
    rest = w[1:]
    for (a, b), c in pair_rule(x, w[0], n, l):
        for key1, c1 in _insert(b, rest, n, l, memo).items():
            cc = c * c1
            for key2, c2 in _insert(a, key1, n, l, memo).items():
                _add_into(acc, key2, cc * c2)
    return acc


def straighten(seq: Iterable[int], n: int, l: int) -> WedgeSum:
    """Normal form of u_{k_1} ∧ ... ∧ u_{k_r} over ordered wedges."""
    seq = tuple(seq)
    memo = _MEMO.table(n, l)
    cur: WedgeSum = {(): ONE}
    for x in reversed(seq):
        nxt: WedgeSum = {}
        for w, c in cur.items():
            for key, c2 in _insert(x, w, n, l, memo).items():
                _add_into(nxt, key, c * c2)
        cur = nxt
        if not cur:
            break
    return cur


def straighten_sum(w: Mapping[tuple[int, ...], LaurentPoly], n: int, l: int) -> WedgeSum:
    """Linear extension of :func:`straighten`."""
    acc: WedgeSum = {}
    for key, c in w.items():
        for k2, c2 in straighten(key, n, l).items():
            _add_into(acc, k2, c * c2)
    return acc


def straighten_naive(seq: Iterable[int], n: int, l: int, strategy: str = "left") -> WedgeSum:
    """Direct rewriting of adjacent violations, leftmost or rightmost first.

    Independent of the insertion algorithm; used to test confluence.
    """
    if strategy not in ("left", "right"):
        raise ValueError("strategy must be 'left' or 'right'")
    memo: dict[tuple[int, ...], WedgeSum] = {}
    active: set[tuple[int, ...]] = set()

    def go(k: tuple[int, ...]) -> WedgeSum:
        if k in memo:
            return memo[k]
        idx = range(len(k) - 1) if strategy == "left" else range(len(k) - 2, -1, -1)
        a = next((i for i in idx if k[i] <= k[i + 1]), None)
        if a is None:
            return {k: ONE}
        if k in active:
            raise RecursionError(f"rewriting cycle at {k}")
        active.add(k)
        acc: WedgeSum = {}
        for (x, y), c in pair_rule(k[a], k[a + 1], n, l):
            for key, c2 in go(k[:a] + (x, y) + k[a + 2 :]).items():
                _add_into(acc, key, c * c2)
        active.discard(k)
        memo[k] = acc
        return acc

    return dict(go(tuple(seq)))


def kappa(vals: Sequence[int]) -> int:
    """#{i < j : v_i = v_j}."""
    return sum(c * (c - 1) // 2 for c in Counter(vals).values())


def bar_finite_ordered(k: Sequence[int], n: int, l: int) -> WedgeSum:
    """bar(u_k) = (−q)^{κ(d)} q^{−κ(c)} · (u_{k_r} ∧ ... ∧ u_{k_1}) for a single wedge."""
    k = tuple(k)
    dec = [decompose(x, n, l) for x in k]
    kd = kappa([t.d for t in dec])
    kc = kappa([t.c for t in dec])
    factor = mono(kd - kc, -1 if kd % 2 else 1)
    return {key: factor * c for key, c in straighten(tuple(reversed(k)), n, l).items()}


def bar_finite(w: Mapping[tuple[int, ...], LaurentPoly], n: int, l: int) -> WedgeSum:
    """Semilinear bar involution on a wedge sum."""
    acc: WedgeSum = {}
    for key, c in w.items():
        cb = c.bar()
        for k2, c2 in bar_finite_ordered(key, n, l).items():
            _add_into(acc, k2, cb * c2)
    return acc


def boson_finite(w: Mapping[tuple[int, ...], LaurentPoly], m: int, n: int, l: int) -> WedgeSum:
    """B_m = Σ_j (k_j -> k_j − nl·m), re-straightened."""
    if m == 0:
        raise ValueError("boson index must be nonzero")
    shift = n * l * m
    acc: WedgeSum = {}
    for key, c in w.items():
        for j in range(len(key)):
            moved = key[:j] + (key[j] - shift,) + key[j + 1 :]
            for k2, c2 in straighten(moved, n, l).items():
                _add_into(acc, k2, c * c2)
    return acc


def wedge_geq(k: Sequence[int], l_: Sequence[int]) -> bool:
    """The partial order on ordered wedges: partial sums ≥, equal totals, last entry ≤."""
    if len(k) != len(l_):
        return False
    a = b = 0
    for x, y in zip(k, l_):
        a += x
        b += y
        if a < b:
            return False
    return a == b and (not k or k[-1] <= l_[-1])
