"""The semi-infinite wedge space and its structure.

Vectors are finite combinations of basis wedges |λ, s⟩ at a fixed total charge
s, keyed by the partition λ.  The same basis vector is |λ_l, s_l⟩ in the
l-pair labeling (where U_q(sl_n) acts) and |λ_n, s_n⟩ in the n-pair labeling
(where U_p(sl_l) acts, p = −q⁻¹).

The bar involution and bosons are computed on finite windows of the beta
sequence and the untouched tail is reattached.  Window sizes are documented
on each operation.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .algebra import ONE, ZERO, LaurentPoly, mono
from .combinatorics import (
    Multipartition,
    Partition,
    addable_removable,
    conjugate,
    counts,
    delta_const,
    dot_weight_of,
    hook_exponents,
    partition,
    weight_of,
)
from .indexing import beta, from_beta, from_l_pair, from_n_pair, to_l_pair, to_n_pair
from .wedge import bar_finite_ordered, boson_finite

__all__ = [
    "FockVector",
    "WindowError",
    "basis",
    "basis_l",
    "basis_n",
    "bar",
    "f_op",
    "e_op",
    "t_op",
    "d_op",
    "fdot_op",
    "edot_op",
    "tdot_op",
    "ddot_op",
    "boson",
    "component_boson",
    "em_op",
    "hm_op",
    "em_tilde_op",
    "hm_tilde_op",
    "scalar",
    "prime",
    "is_dominant",
    "gamma_m",
    "weight",
    "symmetric_op",
    "component_symmetric_op",
    "boson_split",
    "symmetric_split",
]

#: recompute bosons on a larger window and compare (set QFOCK_CHECK_WINDOWS=1)
CHECK_WINDOWS = os.environ.get("QFOCK_CHECK_WINDOWS", "") not in ("", "0")


class WindowError(AssertionError):
    """A straightened window produced an entry below the reattached tail."""


@dataclass(frozen=True)
class FockVector:
    """Σ c_λ |λ, s⟩ with parameters (n, l) and total charge s."""

    n: int
    l: int
    s: int
    terms: Mapping[Partition, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {partition(k): v for k, v in self.terms.items() if v}
        object.__setattr__(self, "terms", clean)

    # -- construction --------------------------------------------------------
    @classmethod
    def zero(cls, n: int, l: int, s: int) -> FockVector:
        return cls(n, l, s, {})

    def _same(self, terms: Mapping[Partition, LaurentPoly]) -> FockVector:
        return FockVector(self.n, self.l, self.s, terms)

    # -- linear structure ----------------------------------------------------
    def _check(self, other: FockVector) -> None:
        if (self.n, self.l, self.s) != (other.n, other.l, other.s):
            raise ValueError("vectors live in different spaces")

    def __add__(self, other: FockVector) -> FockVector:
        self._check(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, ZERO) + c
        return self._same(t)

    def __sub__(self, other: FockVector) -> FockVector:
        return self + other * -1

    def __neg__(self) -> FockVector:
        return self * -1

    def __mul__(self, c: LaurentPoly | int) -> FockVector:
        return self._same({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return (self.n, self.l, self.s) == (other.n, other.l, other.s) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.l, self.s, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Partition, LaurentPoly]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def coeff(self, lam: Sequence[int]) -> LaurentPoly:
        return self.terms.get(partition(lam), ZERO)

    def bar_coefficients(self) -> FockVector:
        return self._same({k: v.bar() for k, v in self.terms.items()})

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    # -- labelings -----------------------------------------------------------
    def l_view(self) -> dict[tuple[Multipartition, tuple[int, ...]], LaurentPoly]:
        return {_l_pair(k, self.s, self.n, self.l): c for k, c in self.terms.items()}

    def n_view(self) -> dict[tuple[Multipartition, tuple[int, ...]], LaurentPoly]:
        return {_n_pair(k, self.s, self.n, self.l): c for k, c in self.terms.items()}

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "s": self.s,
            "terms": [{"partition": list(k), "coeff": c.to_json()} for k, c in self],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> FockVector:
        terms: dict[Partition, LaurentPoly] = {}
        for t in data["terms"]:
            k = partition(t["partition"])
            terms[k] = terms.get(k, ZERO) + LaurentPoly.from_json(t["coeff"])
        return cls(int(data["n"]), int(data["l"]), int(data["s"]), terms)

    def format(self, labels: str = "l", var: str = "q") -> str:
        """One line per basis vector: coefficient then label."""
        lines = []
        for k, c in self:
            cc = c.express_in_p() if var == "p" else c
            if labels == "l":
                mp, ch = _l_pair(k, self.s, self.n, self.l)
                lab = f"|{_fmt_mp(mp)}, {list(ch)}>"
            elif labels == "n":
                mp, ch = _n_pair(k, self.s, self.n, self.l)
                lab = f"|{_fmt_mp(mp)}, {list(ch)}>"
            else:
                lab = f"|{list(k)}, {self.s}>"
            lines.append(f"({cc.format(var)}) {lab}")
        return "\n".join(lines) if lines else "0"


def _fmt_mp(mp: Multipartition) -> str:
    return "(" + ",".join("(" + ",".join(map(str, c)) + ")" if c else "()" for c in mp) + ")"


@lru_cache(maxsize=None)
def _l_pair(lam: Partition, s: int, n: int, l: int) -> tuple[Multipartition, tuple[int, ...]]:
    return to_l_pair(lam, s, n, l)


@lru_cache(maxsize=None)
def _n_pair(lam: Partition, s: int, n: int, l: int) -> tuple[Multipartition, tuple[int, ...]]:
    return to_n_pair(lam, s, n, l)


@lru_cache(maxsize=None)
def _from_l(mp: Multipartition, charge: tuple[int, ...], n: int, l: int) -> Partition:
    return from_l_pair(mp, charge, n, l)[0]


@lru_cache(maxsize=None)
def _from_n(mp: Multipartition, charge: tuple[int, ...], n: int, l: int) -> Partition:
    return from_n_pair(mp, charge, n, l)[0]


def basis(lam: Sequence[int], s: int, n: int, l: int) -> FockVector:
    """|λ, s⟩."""
    return FockVector(n, l, s, {partition(lam): ONE})


def basis_l(mp: Sequence[Sequence[int]], charge: Sequence[int], n: int) -> FockVector:
    """|λ_l, s_l⟩ with l = len(charge)."""
    l = len(charge)
    mp = tuple(partition(c) for c in mp)
    return FockVector(n, l, sum(charge), {_from_l(mp, tuple(charge), n, l): ONE})


def basis_n(mp: Sequence[Sequence[int]], charge: Sequence[int], l: int) -> FockVector:
    """|λ_n, s_n⟩ with n = len(charge)."""
    n = len(charge)
    mp = tuple(partition(c) for c in mp)
    return FockVector(n, l, sum(charge), {_from_n(mp, tuple(charge), n, l): ONE})


def _linear(v: FockVector, image: Callable[[Partition], Mapping[Partition, LaurentPoly]], semilinear: bool = False) -> FockVector:
    acc: dict[Partition, LaurentPoly] = {}
    for k, c in v.terms.items():
        if semilinear:
            c = c.bar()
        for k2, c2 in image(k).items():
            acc[k2] = acc.get(k2, ZERO) + c * c2
    return v._same(acc)


# -- bar involution -------------------------------------------------------------


@lru_cache(maxsize=None)
def _bar_basis(lam: Partition, s: int, n: int, l: int) -> tuple[tuple[Partition, LaurentPoly], ...]:
    r = sum(lam)  # any window r ≥ |λ| gives the same answer
    window = beta(lam, s, r)
    out = []
    for key, c in bar_finite_ordered(window, n, l).items():
        if key and key[-1] <= s - r:
            raise WindowError(f"bar of |{list(lam)},{s}> left the window: {key}")
        out.append((from_beta(key, s), c))
    return tuple(out)


def bar(v: FockVector) -> FockVector:
    """Semi-infinite bar involution via the degree-sized window."""
    return _linear(v, lambda k: dict(_bar_basis(k, v.s, v.n, v.l)), semilinear=True)


# -- U_q(sl_n) on the l-side, U_p(sl_l) on the n-side ----------------------------


@lru_cache(maxsize=None)
def _chevalley(lam: Partition, s: int, n: int, l: int, i: int, kind: str, side: str) -> tuple[tuple[Partition, LaurentPoly], ...]:
    if side == "l":
        mp, ch = _l_pair(lam, s, n, l)
        mod, base, back = n, mono(1), _from_l
    else:
        mp, ch = _n_pair(lam, s, n, l)
        mod, base, back = l, mono(-1, -1), _from_n
    out = []
    for g, t in addable_removable(mp, ch, mod, i):
        comp = g.comp - 1
        if kind == "f" and t == "A":
            new = list(mp[comp])
            if g.row > len(new):
                new.append(1)
            else:
                new[g.row - 1] += 1
            mu = mp[:comp] + (tuple(new),) + mp[comp + 1 :]
            above, _ = hook_exponents(mp, mu, ch, mod, i)
            out.append((back(mu, ch, n, l), base ** above))
        elif kind == "e" and t == "R":
            new = list(mp[comp])
            new[g.row - 1] -= 1
            nu = mp[:comp] + (partition(new),) + mp[comp + 1 :]
            _, below = hook_exponents(nu, mp, ch, mod, i)
            out.append((back(nu, ch, n, l), base ** (-below)))
    return tuple(out)


def _check_index(i: int, bound: int) -> None:
    if not 0 <= i < bound:
        raise ValueError(f"generator index {i} out of range 0..{bound - 1}")


def f_op(i: int, v: FockVector) -> FockVector:
    """f_i: add an i-node with coefficient q^{N_i^>}."""
    _check_index(i, v.n)
    return _linear(v, lambda k: dict(_chevalley(k, v.s, v.n, v.l, i, "f", "l")))


def e_op(i: int, v: FockVector) -> FockVector:
    """e_i: remove an i-node with coefficient q^{−N_i^<}."""
    _check_index(i, v.n)
    return _linear(v, lambda k: dict(_chevalley(k, v.s, v.n, v.l, i, "e", "l")))


def t_op(i: int, v: FockVector, power: int = 1) -> FockVector:
    """t_i^power: scale by q^{power·N_i}."""
    _check_index(i, v.n)

    def img(k: Partition) -> dict:
        mp, ch = _l_pair(k, v.s, v.n, v.l)
        return {k: mono(power * counts(mp, ch, v.n)[0][i])}

    return _linear(v, img)


def d_op(v: FockVector) -> FockVector:
    """∂: scale by −(Δ(s_l|n) + M_0)."""

    def img(k: Partition) -> dict:
        mp, ch = _l_pair(k, v.s, v.n, v.l)
        return {k: LaurentPoly(-(delta_const(ch, v.n) + counts(mp, ch, v.n)[1][0]))}

    return _linear(v, img)


def fdot_op(j: int, v: FockVector) -> FockVector:
    """ḟ_j on the n-pair labeling, base p = −q⁻¹."""
    _check_index(j, v.l)
    return _linear(v, lambda k: dict(_chevalley(k, v.s, v.n, v.l, j, "f", "n")))


def edot_op(j: int, v: FockVector) -> FockVector:
    """ė_j on the n-pair labeling, base p = −q⁻¹."""
    _check_index(j, v.l)
    return _linear(v, lambda k: dict(_chevalley(k, v.s, v.n, v.l, j, "e", "n")))


def tdot_op(j: int, v: FockVector, power: int = 1) -> FockVector:
    """ṫ_j^power: scale by p^{power·N_j(λ_n|s_n, l)}."""
    _check_index(j, v.l)

    def img(k: Partition) -> dict:
        mp, ch = _n_pair(k, v.s, v.n, v.l)
        return {k: mono(-1, -1) ** (power * counts(mp, ch, v.l)[0][j])}

    return _linear(v, img)


def ddot_op(v: FockVector) -> FockVector:
    """∂̇: scale by −(Δ(s_n|l) + M_0(λ_n|s_n, l))."""

    def img(k: Partition) -> dict:
        mp, ch = _n_pair(k, v.s, v.n, v.l)
        return {k: LaurentPoly(-(delta_const(ch, v.l) + counts(mp, ch, v.l)[1][0]))}

    return _linear(v, img)


def weight(lam: Partition, s: int, n: int, l: int):
    """(wt, dot-wt) of |λ, s⟩ read on the l-pair."""
    mp, ch = _l_pair(partition(lam), s, n, l)
    return weight_of(mp, ch, n), dot_weight_of(mp, ch, n, l)


# -- bosons ---------------------------------------------------------------------


def _boson_window(lam: Partition, s: int, n: int, l: int, m: int, r: int) -> dict[Partition, LaurentPoly]:
    window = beta(lam, s, r)
    out: dict[Partition, LaurentPoly] = {}
    for key, c in boson_finite({window: ONE}, m, n, l).items():
        if key[-1] <= s - r:
            if m > 0:
                continue  # vanishes against the tail u_{s−r} ∧ u_{s−r−1} ∧ ...
            raise WindowError(f"B_{m} of |{list(lam)},{s}> left the window: {key}")
        out[from_beta(key, s)] = c
    return out


@lru_cache(maxsize=None)
def _boson_basis(lam: Partition, s: int, n: int, l: int, m: int) -> tuple[tuple[Partition, LaurentPoly], ...]:
    r = sum(lam) + n * l * abs(m)
    res = _boson_window(lam, s, n, l, m, r)
    if CHECK_WINDOWS and res != _boson_window(lam, s, n, l, m, r + n * l):
        raise WindowError(f"B_{m} on |{list(lam)},{s}> is not stable at window {r}")
    return tuple(res.items())


def boson(m: int, v: FockVector) -> FockVector:
    """B_m on the semi-infinite space (window |λ| + nl|m|)."""
    if m == 0:
        raise ValueError("boson index must be nonzero")
    return _linear(v, lambda k: dict(_boson_basis(k, v.s, v.n, v.l, m)))


def component_boson(m: int, b: int, v: FockVector, side: str = "l") -> FockVector:
    """B_m^{(b)}[n,1] (side 'l') or B_m^{(b)}[1,l] (side 'n'): a level-1 boson on one component."""
    if side not in ("l", "n"):
        raise ValueError("side must be 'l' or 'n'")
    ncomp = v.l if side == "l" else v.n
    if not 1 <= b <= ncomp:
        raise ValueError(f"component {b} out of range 1..{ncomp}")

    def img(k: Partition) -> dict:
        if side == "l":
            mp, ch = _l_pair(k, v.s, v.n, v.l)
            inner = dict(_boson_basis(mp[b - 1], ch[b - 1], v.n, 1, m))
            back = _from_l
        else:
            mp, ch = _n_pair(k, v.s, v.n, v.l)
            inner = dict(_boson_basis(mp[b - 1], ch[b - 1], 1, v.l, m))
            back = _from_n
        return {back(mp[: b - 1] + (mu,) + mp[b:], ch, v.n, v.l): c for mu, c in inner.items()}

    return _linear(v, img)


def _newton(m: int, v: FockVector, power_sum: Callable[[int, FockVector], FockVector], sign: int) -> FockVector:
    # m·X_m = Σ_{i=1}^m sign^{i−1} X_{m−i} p_i, with X = e (sign −1) or h (sign +1)
    if m < 0:
        return FockVector.zero(v.n, v.l, v.s)
    memo: dict[int, FockVector] = {0: v}

    def X(j: int, w: FockVector) -> FockVector:
        if j == 0:
            return w
        acc = FockVector.zero(w.n, w.l, w.s)
        for i in range(1, j + 1):
            acc = acc + X(j - i, power_sum(i, w)) * (sign ** (i - 1))
        out = {}
        for k, c in acc.terms.items():
            q = {}
            for e, cc in c.items():
                if cc % j:
                    raise ArithmeticError("Newton identity produced a non-integral coefficient")
                q[e] = cc // j
            out[k] = LaurentPoly(q)
        return w._same(out)

    return X(m, v)


def em_op(m: int, v: FockVector) -> FockVector:
    """E_m = e_m(B_1, B_2, ...)."""
    return _newton(m, v, lambda i, w: boson(i, w), -1)


def hm_op(m: int, v: FockVector) -> FockVector:
    """H_m = h_m(B_1, B_2, ...)."""
    return _newton(m, v, lambda i, w: boson(i, w), 1)


def em_tilde_op(m: int, v: FockVector) -> FockVector:
    """Ẽ_m = e_m(B_−1, B_−2, ...)."""
    return _newton(m, v, lambda i, w: boson(-i, w), -1)


def hm_tilde_op(m: int, v: FockVector) -> FockVector:
    """H̃_m = h_m(B_−1, B_−2, ...)."""
    return _newton(m, v, lambda i, w: boson(-i, w), 1)


_SYMMETRIC = {"E": (1, -1), "H": (1, 1), "Et": (-1, -1), "Ht": (-1, 1)}


def symmetric_op(kind: str, m: int, v: FockVector) -> FockVector:
    """E_m, H_m, Ẽ_m or H̃_m selected by kind ∈ {E, H, Et, Ht}."""
    direction, sign = _SYMMETRIC[kind]
    return _newton(m, v, lambda i, w: boson(direction * i, w), sign)


def component_symmetric_op(kind: str, m: int, b: int, v: FockVector, side: str = "l") -> FockVector:
    """The level-1 operator E_m, H_m, Ẽ_m or H̃_m acting on component b only."""
    direction, sign = _SYMMETRIC[kind]
    return _newton(m, v, lambda i, w: component_boson(direction * i, b, w, side), sign)


def _split_base(side: str) -> LaurentPoly:
    return mono(1) if side == "l" else mono(-1, -1)


def boson_split(m: int, v: FockVector, side: str = "l") -> FockVector:
    """Σ_b base^{(b−1)|m|} B_m^{(b)}, with base q on the l-side and p on the n-side."""
    ncomp = v.l if side == "l" else v.n
    base = _split_base(side)
    acc = FockVector.zero(v.n, v.l, v.s)
    for b in range(1, ncomp + 1):
        acc = acc + component_boson(m, b, v, side) * base ** ((b - 1) * abs(m))
    return acc


def _compositions(m: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _compositions(m - first, parts - 1):
            yield (first,) + rest


def symmetric_split(kind: str, m: int, v: FockVector, side: str = "l") -> FockVector:
    """Σ_{m_1+...+m_c = m} Π_b base^{(b−1)m_b} X_{m_b}^{(b)} applied to v."""
    ncomp = v.l if side == "l" else v.n
    base = _split_base(side)
    acc = FockVector.zero(v.n, v.l, v.s)
    for comp in _compositions(m, ncomp):
        w = v
        for b, mb in enumerate(comp, start=1):
            if mb:
                w = component_symmetric_op(kind, mb, b, w, side) * base ** ((b - 1) * mb)
        acc = acc + w
    return acc


def gamma_m(m: int, n: int, l: int) -> LaurentPoly:
    """m (1 − q^{−2mn})(1 − q^{2ml}) / ((1 − q^{−2m})(1 − q^{2m}))."""
    if m <= 0:
        raise ValueError("γ_m is defined for m > 0")
    num = LaurentPoly({0: 1, -2 * m * n: -1}) * LaurentPoly({0: 1, 2 * m * l: -1})
    den = LaurentPoly({0: 1, -2 * m: -1}) * LaurentPoly({0: 1, 2 * m: -1})
    return num.exact_div(den) * m


def is_dominant(mp: Multipartition, charge: Sequence[int], m: int) -> bool:
    """s_a − s_{a+1} ≥ m + |λ| for all a."""
    tot = sum(sum(c) for c in mp)
    return all(charge[a] - charge[a + 1] >= m + tot for a in range(len(charge) - 1))


# -- scalar product and prime ------------------------------------------------------


def scalar(u: FockVector, v: FockVector) -> LaurentPoly:
    """Bilinear form with |λ, s⟩ orthonormal."""
    u._check(v)
    acc = ZERO
    for k, c in u.terms.items():
        d = v.terms.get(k)
        if d is not None:
            acc = acc + c * d
    return acc


def prime(v: FockVector) -> FockVector:
    """|λ, s⟩ ↦ |λ′, −s⟩ with coefficients barred."""
    return FockVector(v.n, v.l, -v.s, {conjugate(k): c.bar() for k, c in v.terms.items()})
