"""Parabolic Kazhdan–Lusztig polynomials from the induced affine Hecke module.

The module 1⁺_a ⊗ Ĥ has the basis (ζ| indexed by the orbit a·Ŵ of integer
r-tuples under the right action

    ζ·s_i  swaps ζ_i and ζ_{i+1}                      (1 ≤ i < r)
    ζ·s_0 = (ζ_r − n, ζ_2, ..., ζ_{r−1}, ζ_1 + n)
    ζ·π   = (ζ_2, ..., ζ_r, ζ_1 + n)

and T_i acts by the three-case rule on ζ_i versus ζ_{i+1} (with ζ_0 = ζ_r − n).
The bar involution is computed by descent recursion and the bases C±_ζ by the
same triangular solve used for the Fock space.  This gives an oracle for the
wedge-side transition matrices that shares no code with the straightening rules.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .algebra import ONE, ZERO, LaurentPoly, mono
from .canonical import solve_closure, weight_blocks
from .indexing import decompose
from .wedge import bar_finite_ordered

__all__ = [
    "CosetVector",
    "act_Ti",
    "act_Tpi",
    "length",
    "descents",
    "bar_coset",
    "kl_module_basis",
    "zeta_of",
    "block_rearrangements",
    "crosscheck_KL",
    "KLReport",
]

Zeta = tuple[int, ...]
_QMQ = LaurentPoly({1: 1, -1: -1})  # q − q⁻¹


def _residues(z: Zeta, n: int) -> tuple[int, ...]:
    return tuple(sorted((x - 1) % n + 1 for x in z))


@dataclass(frozen=True)
class CosetVector:
    """Σ c_ζ (ζ| over one orbit a·Ŵ."""

    n: int
    terms: Mapping[Zeta, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {tuple(k): v for k, v in self.terms.items() if v}
        anchors = {_residues(k, self.n) for k in clean}
        if len(anchors) > 1 or len({len(k) for k in clean}) > 1:
            raise ValueError("all keys must lie in one orbit")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis(cls, zeta: Sequence[int], n: int) -> CosetVector:
        return cls(n, {tuple(zeta): ONE})

    @property
    def anchor(self) -> tuple[int, ...] | None:
        for k in self.terms:
            return _residues(k, self.n)
        return None

    def __add__(self, other: CosetVector) -> CosetVector:
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, ZERO) + c
        return CosetVector(self.n, t)

    def __sub__(self, other: CosetVector) -> CosetVector:
        return self + other * -1

    def __mul__(self, c: LaurentPoly | int) -> CosetVector:
        return CosetVector(self.n, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[tuple[Zeta, LaurentPoly]]:
        return iter(sorted(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, zeta: Sequence[int]) -> LaurentPoly:
        return self.terms.get(tuple(zeta), ZERO)


# -- the right action ---------------------------------------------------------------


def _pair(z: Zeta, i: int, n: int) -> tuple[int, int]:
    """(ζ_i, ζ_{i+1}) with ζ_0 = ζ_r − n."""
    return (z[-1] - n, z[0]) if i == 0 else (z[i - 1], z[i])


def _s(z: Zeta, i: int, n: int) -> Zeta:
    if i == 0:
        if len(z) == 1:
            return z
        return (z[-1] - n,) + z[1:-1] + (z[0] + n,)
    return z[: i - 1] + (z[i], z[i - 1]) + z[i + 1 :]


def _check_i(z: Zeta, i: int) -> None:
    if len(z) < 2 or not 0 <= i < len(z):
        raise ValueError(f"T_{i} needs 0 ≤ i < r with r ≥ 2")


def _ti_key(z: Zeta, i: int, n: int) -> list[tuple[Zeta, LaurentPoly]]:
    x, y = _pair(z, i, n)
    if x < y:
        return [(_s(z, i, n), ONE)]
    if x == y:
        return [(z, mono(-1))]
    return [(_s(z, i, n), ONE), (z, -_QMQ)]


def act_Ti(v: CosetVector, i: int) -> CosetVector:
    """Right action of T_i."""
    acc: dict[Zeta, LaurentPoly] = {}
    for z, c in v.terms.items():
        _check_i(z, i)
        for z2, c2 in _ti_key(z, i, v.n):
            acc[z2] = acc.get(z2, ZERO) + c * c2
    return CosetVector(v.n, acc)


def act_Tpi(v: CosetVector, power: int = 1) -> CosetVector:
    """Right action of T_π^power (π^{-1} for negative powers)."""
    n = v.n

    def shift(z: Zeta) -> Zeta:
        for _ in range(abs(power)):
            z = z[1:] + (z[0] + n,) if power > 0 else (z[-1] - n,) + z[:-1]
        return z

    return CosetVector(n, {shift(z): c for z, c in v.terms.items()})


def length(zeta: Sequence[int], n: int, a: Sequence[int] | None = None) -> int:
    """Length of the minimal coset representative x with a·x = ζ."""
    z = tuple(zeta)
    if a is not None and _residues(z, n) != tuple(a):
        raise ValueError("ζ is not in the orbit of a")
    cs = [(x - 1) % n + 1 for x in z]
    mus = [(x - c) // n for x, c in zip(z, cs)]
    total = 0
    for i, j in itertools.combinations(range(len(z)), 2):
        ci, cj, mi, mj = cs[i], cs[j], mus[i], mus[j]
        if ci > cj and mi >= mj:
            total += 1
        if ci < cj and mi < mj:
            total += 1
        if mi > mj:
            total += mi - mj
        elif mi < mj:
            total += mj - mi - 1
    return total


def descents(zeta: Sequence[int], n: int) -> list[int]:
    """All i ∈ 0..r−1 with ζ_i > ζ_{i+1}."""
    z = tuple(zeta)
    if len(z) < 2:
        return []
    return [i for i in range(len(z)) if _pair(z, i, n)[0] > _pair(z, i, n)[1]]


# -- bar involution ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _bar_key(z: Zeta, n: int, policy: str) -> tuple[tuple[Zeta, LaurentPoly], ...]:
    ds = descents(z, n)
    if not ds:
        return ((z, ONE),)
    i = ds[0] if policy == "first" else ds[-1]
    prev = _bar_key(_s(z, i, n), n, policy)
    # bar((ζ|) = bar((ζ·s_i|) · (T_i + q − q⁻¹))
    acc: dict[Zeta, LaurentPoly] = {}
    for z2, c in prev:
        for z3, c3 in _ti_key(z2, i, n):
            acc[z3] = acc.get(z3, ZERO) + c * c3
        acc[z2] = acc.get(z2, ZERO) + c * _QMQ
    return tuple((k, c) for k, c in sorted(acc.items()) if c)


def bar_coset(v: CosetVector, policy: str = "first") -> CosetVector:
    """Semilinear bar involution; ``policy`` picks the descent used at each recursion step."""
    if policy not in ("first", "last"):
        raise ValueError("policy must be 'first' or 'last'")
    acc: dict[Zeta, LaurentPoly] = {}
    for z, c in v.terms.items():
        cb = c.bar()
        for z2, c2 in _bar_key(z, v.n, policy):
            acc[z2] = acc.get(z2, ZERO) + cb * c2
    return CosetVector(v.n, acc)


@lru_cache(maxsize=None)
def _kl_column(z: Zeta, n: int, sign: str) -> tuple[tuple[Zeta, LaurentPoly], ...]:
    order, d = solve_closure([z], lambda key: dict(_bar_key(key, n, "first")), sign)
    j = order.index(z)
    return tuple((order[i], d[i][j]) for i in range(len(order)) if d[i][j])


def kl_module_basis(zeta: Sequence[int], n: int, sign: str = "plus", a: Sequence[int] | None = None) -> dict[Zeta, LaurentPoly]:
    """η ↦ P±_{η,ζ}, the coefficients of C±_ζ = Σ_η P±_{η,ζ} (η|."""
    z = tuple(zeta)
    if a is not None and _residues(z, n) != tuple(a):
        raise ValueError("ζ is not in the orbit of a")
    return dict(_kl_column(z, n, sign))


# -- wedges as coset vectors --------------------------------------------------------


def zeta_of(k: Sequence[int], n: int, l: int) -> tuple[tuple[int, ...], tuple[int, ...], Zeta]:
    """(a, b, ζ) with u_k = [ζ]_b for a strictly decreasing finite sequence k."""
    k = tuple(k)
    if any(x <= y for x, y in zip(k, k[1:])):
        raise ValueError("k must be strictly decreasing")
    dec = [decompose(x, n, l) for x in k]
    a = tuple(sorted(t.c for t in dec))
    b = tuple(sorted((t.d for t in dec), reverse=True))
    z: list[int] = []
    for level in range(l, 0, -1):
        z.extend(t.c - n * t.m for t in dec if t.d == level)
    return a, b, tuple(z)


def _blocks(b: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal runs [start, end) of equal entries."""
    out, start = [], 0
    for i in range(1, len(b) + 1):
        if i == len(b) or b[i] != b[start]:
            out.append((start, i))
            start = i
    return out


def _reverse_blocks(z: Zeta, b: Sequence[int]) -> Zeta:
    out: list[int] = []
    for s, e in _blocks(b):
        out.extend(reversed(z[s:e]))
    return tuple(out)


def _inversions(seq: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])


def block_rearrangements(z: Zeta, b: Sequence[int]) -> Iterator[tuple[Zeta, int]]:
    """(z·v, ℓ(v)) for v in the stabilizer W_b, where z is increasing on each block of b."""
    runs = _blocks(b)
    pieces = [list(itertools.permutations(z[s:e])) for s, e in runs]
    for choice in itertools.product(*pieces):
        yield tuple(x for part in choice for x in part), sum(_inversions(p) for p in choice)


def _oracle_plus(xi: Zeta, eta: Zeta, b: Sequence[int], n: int) -> LaurentPoly:
    col = kl_module_basis(_reverse_blocks(xi, b), n, "plus")
    total = ZERO
    for rho, ell in block_rearrangements(_reverse_blocks(eta, b), b):
        c = col.get(rho)
        if c:
            total = total + mono(ell, -1 if ell % 2 else 1) * c
    return total


@dataclass(frozen=True)
class KLReport:
    ok: bool
    checked: int
    fock_checked: int
    mismatches: tuple[str, ...]

    @property
    def message(self) -> str:
        if self.ok:
            return f"oracle agrees on {self.checked} wedge entries ({self.fock_checked} also compared with the Fock space)"
        return f"{len(self.mismatches)} mismatches; first: {self.mismatches[0]}"


def _window(lam: Sequence[int], s: int, r: int) -> tuple[int, ...]:
    """First r beta numbers of (λ, s); rows longer than r are truncated."""
    return tuple((lam[i] if i < len(lam) else 0) + s - i for i in range(r))


def crosscheck_KL(n: int, l: int, charge: Sequence[int], k: int, r: int) -> KLReport:
    """Compare the r-wedge transition matrices of each degree-k weight block with the Hecke oracle.

    The oracle is checked against the wedges (k_1, ..., k_r) of every row.  For rows of
    length at most r the wedge matrices are also compared with the Fock-space Δ±.
    """
    from .canonical import canonical_basis

    charge = tuple(charge)
    s = sum(charge)
    if r < 2:
        raise ValueError("window r must be at least 2")
    fock: dict[str, dict[tuple, LaurentPoly]] = {}
    for sign in ("plus", "minus"):
        fock[sign] = {}
        for blk in canonical_basis(n, l, charge, k, sign):
            for i, ri in enumerate(blk.rows):
                for j, rj in enumerate(blk.rows):
                    fock[sign][(rj.partition, ri.partition)] = blk.entries[i][j]
    mismatches: list[str] = []
    checked = fock_checked = 0
    for _, rows in weight_blocks(n, l, charge, k):
        parts = [p for _, p in rows]
        win = {p: _window(p, s, r) for p in parts}
        windows = list(dict.fromkeys(win.values()))
        wedge_side = {}
        for sign in ("plus", "minus"):
            order, d = solve_closure(windows, lambda w: bar_finite_ordered(w, n, l), sign)
            idx = {w: i for i, w in enumerate(order)}
            wedge_side[sign] = {(kk, ll): d[idx[ll]][idx[kk]] for kk in windows for ll in windows}
        data = {w: zeta_of(w, n, l) for w in windows}
        for kk in windows:
            a1, b1, xi = data[kk]
            for ll in windows:
                a2, b2, eta = data[ll]
                if (a1, b1) == (a2, b2):
                    expect = {"minus": kl_module_basis(xi, n, "minus").get(eta, ZERO), "plus": _oracle_plus(xi, eta, b1, n)}
                else:
                    expect = {"minus": ZERO, "plus": ZERO}
                for sign in ("plus", "minus"):
                    checked += 1
                    got = wedge_side[sign][(kk, ll)]
                    if got != expect[sign]:
                        mismatches.append(f"{sign} k={kk} l={ll}: wedge {got}, oracle {expect[sign]}")
        for p1 in parts:
            for p2 in parts:
                if len(p1) > r or len(p2) > r:
                    continue
                for sign in ("plus", "minus"):
                    fock_checked += 1
                    got = wedge_side[sign][(win[p1], win[p2])]
                    if got != fock[sign][(p1, p2)]:
                        mismatches.append(f"{sign} {p1}->{p2}: wedge {got}, Fock space {fock[sign][(p1, p2)]}")
    return KLReport(not mismatches, checked, fock_checked, tuple(mismatches))
