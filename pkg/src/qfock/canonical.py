"""Canonical bases G± of the level-l Fock space F_q[s_l].

The bar involution is block-diagonal with respect to the weight of
|λ_l, s_l⟩ and unitriangular with respect to the lexicographic order of the
underlying partitions.  For every weight block the coefficients Δ±_{λμ} of

    G±(λ_l, s_l) = Σ_μ Δ±_{λμ}(s_l|q) |μ_l, s_l⟩

are found column by column from Δ_μ − bar(Δ_μ) = Σ_{ν>μ} bar(Δ_ν) R_{νμ},
where R_{νμ} is the coefficient of |μ⟩ in bar|ν⟩.
"""
from __future__ import annotations

import heapq
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .algebra import ONE, ZERO, LaurentPoly, split_negative, split_positive
from .combinatorics import Multipartition, Partition, conjugate_mp, counts, delta_const, multipartitions
from .crystal import crystal_component
from .fock import _from_l, bar, basis

__all__ = [
    "RowLabel",
    "TransitionBlock",
    "weight_blocks",
    "r_matrix",
    "canonical_basis",
    "dual_basis",
    "verify_inversion",
    "InversionReport",
    "solve_triangular",
    "solve_closure",
    "weight_label",
]


@dataclass(frozen=True)
class RowLabel:
    multipartition: Multipartition
    partition: Partition
    star: bool


@dataclass(frozen=True)
class TransitionBlock:
    """One weight block; ``entries[i][j]`` is Δ_{λ_j, μ_i} (columns are G elements)."""

    n: int
    l: int
    charge: tuple[int, ...]
    k: int
    alpha: tuple[int, ...]
    rows: tuple[RowLabel, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]
    sign: str

    @property
    def size(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> dict[Multipartition, LaurentPoly]:
        return {r.multipartition: self.entries[i][j] for i, r in enumerate(self.rows) if self.entries[i][j]}

    def label(self) -> str:
        return weight_label(self.charge, self.alpha, self.n)

    def to_json(self) -> dict:
        return {
            "weight_alpha": list(self.alpha),
            "weight": self.label(),
            "rows": [
                {"multipartition": [list(c) for c in r.multipartition], "partition": list(r.partition), "star": r.star}
                for r in self.rows
            ],
            "columns": [[self.entries[i][j].to_json() for i in range(self.size)] for j in range(self.size)],
        }


def weight_label(charge: Sequence[int], alpha: Sequence[int], n: int) -> str:
    """'2Λ_0 - α_0 - α_1' style label (the δ part is printed only when non-zero)."""
    fund = [0] * n
    for s in charge:
        fund[s % n] += 1
    parts: list[str] = []
    for i, c in enumerate(fund):
        if c:
            parts.append(("" if c == 1 else str(c)) + f"Λ_{i}")
    out = " + ".join(parts)
    for i, m in enumerate(alpha):
        if m:
            out += " - " + ("" if m == 1 else str(m)) + f"α_{i}"
    d = delta_const(charge, n)
    if d:
        coef = "" if abs(d) == 1 else str(abs(d))
        out += f" - {coef}δ" if d > 0 else f" + {coef}δ"
    return out


# -- blocks ---------------------------------------------------------------------


def weight_blocks(n: int, l: int, charge: Sequence[int], k: int) -> list[tuple[tuple[int, ...], list[tuple[Multipartition, Partition]]]]:
    """Degree-k multipartitions grouped by α-counts, rows in descending lex order of partitions.

    Blocks are listed in descending lex order of their leading partition.
    """
    charge = tuple(charge)
    if len(charge) != l:
        raise ValueError("charge length must equal l")
    groups: dict[tuple[int, ...], list[tuple[Multipartition, Partition]]] = {}
    for mp in multipartitions(k, l):
        alpha = counts(mp, charge, n)[1]
        groups.setdefault(alpha, []).append((mp, _from_l(mp, charge, n, l)))
    out = []
    for alpha, rows in groups.items():
        rows.sort(key=lambda r: r[1], reverse=True)
        out.append((alpha, rows))
    out.sort(key=lambda b: b[1][0][1], reverse=True)
    return out


def _block_bar_matrix(n: int, l: int, s: int, parts: Sequence[Partition]) -> list[list[LaurentPoly]]:
    index = {p: i for i, p in enumerate(parts)}
    mat = [[ZERO] * len(parts) for _ in parts]
    for i, p in enumerate(parts):
        for q_, c in bar(basis(p, s, n, l)).terms.items():
            if q_ not in index:
                raise AssertionError(f"bar of {p} leaves its weight block: {q_}")
            mat[i][index[q_]] = c
    return mat


def r_matrix(n: int, l: int, charge: Sequence[int], k: int) -> list[tuple[tuple[int, ...], list[Partition], list[list[LaurentPoly]]]]:
    """Per weight block (alpha, row partitions, R) with R[i][j] = coefficient of row j in bar(row i)."""
    charge = tuple(charge)
    out = []
    for alpha, rows in weight_blocks(n, l, charge, k):
        parts = [p for _, p in rows]
        out.append((alpha, parts, _block_bar_matrix(n, l, sum(charge), parts)))
    return out


def solve_triangular(
    r: Sequence[Sequence[LaurentPoly]],
    sign: str,
    labels: Sequence[object] | None = None,
    columns: Sequence[int] | None = None,
) -> list[list[LaurentPoly]]:
    """Columnwise solve; r[i][j] is the coefficient of basis j in bar(basis i), upper unitriangular.

    Returns D with D[i][j] = coefficient of basis i in the canonical element indexed by j.
    Only the listed columns are computed when ``columns`` is given (the others stay zero).
    """
    if sign not in ("plus", "minus"):
        raise ValueError("sign must be 'plus' or 'minus'")
    split = split_positive if sign == "plus" else split_negative
    size = len(r)
    for i in range(size):
        if r[i][i] != ONE or any(r[i][j] for j in range(i)):
            raise AssertionError("bar matrix is not unitriangular in the given order")
    d = [[ZERO] * size for _ in range(size)]
    for j in range(size) if columns is None else columns:
        col = [ZERO] * size
        col[j] = ONE
        barred = [ZERO] * size
        barred[j] = ONE
        for mu in range(j + 1, size):
            rho = ZERO
            for nu in range(j, mu):
                if barred[nu] and r[nu][mu]:
                    rho = rho + barred[nu] * r[nu][mu]
            try:
                col[mu] = split(rho)
            except ValueError as exc:
                where = f" at ({labels[j]}, {labels[mu]})" if labels is not None else ""
                raise AssertionError(f"bar-antisymmetry fails{where}: {rho}") from exc
            barred[mu] = col[mu].bar()
        for i in range(size):
            d[i][j] = col[i]
    return d


def _solve_block(args: tuple) -> tuple[tuple[int, ...], list[tuple[Multipartition, Partition]], list[list[LaurentPoly]]]:
    n, l, charge, alpha, rows, sign = args
    mat = _block_bar_matrix(n, l, sum(charge), [p for _, p in rows])
    return alpha, rows, solve_triangular(mat, sign, [mp for mp, _ in rows])


def canonical_basis(
    n: int, l: int, charge: Sequence[int], k: int, sign: str = "plus", jobs: int = 1, check_positivity: bool = False
) -> list[TransitionBlock]:
    """Transition matrices Δ± for all degree-k weight blocks of F_q[s_l]."""
    charge = tuple(charge)
    if sign not in ("plus", "minus"):
        raise ValueError("sign must be 'plus' or 'minus'")
    if k < 0:
        raise ValueError("size must be non-negative")
    members, _ = crystal_component(n, l, charge, k)
    tasks = [(n, l, charge, alpha, rows, sign) for alpha, rows in weight_blocks(n, l, charge, k)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            solved = list(ex.map(_solve_block, tasks))
    else:
        solved = [_solve_block(t) for t in tasks]
    blocks = []
    for alpha, rows, d in solved:
        labels = tuple(RowLabel(mp, p, mp in members) for mp, p in rows)
        block = TransitionBlock(n, l, charge, k, alpha, labels, tuple(map(tuple, d)), sign)
        if check_positivity:
            _warn_positivity(block)
        blocks.append(block)
    return blocks


def _warn_positivity(block: TransitionBlock) -> None:
    for row in block.entries:
        for c in row:
            if c.is_zero():
                continue
            poly = c if block.sign == "plus" else c.express_in_p()
            if any(c < 0 or e < 0 for e, c in poly.items()):
                warnings.warn(f"non-positive entry {c} in block {block.label()}", stacklevel=3)
                return


# -- dual basis and inversion -----------------------------------------------------


def _inverse_unitriangular(d: Sequence[Sequence[LaurentPoly]]) -> list[list[LaurentPoly]]:
    """Exact inverse of a lower unitriangular matrix (d[i][j] = 0 for i < j)."""
    size = len(d)
    inv = [[ZERO] * size for _ in range(size)]
    for j in range(size):
        inv[j][j] = ONE
        for i in range(j + 1, size):
            acc = ZERO
            for t in range(j, i):
                if d[i][t] and inv[t][j]:
                    acc = acc + d[i][t] * inv[t][j]
            inv[i][j] = -acc
    return inv


def dual_basis(block: TransitionBlock) -> TransitionBlock:
    """Δ*: the transposed inverse of Δ⁺, with the same row labels."""
    if block.sign != "plus":
        raise ValueError("dual_basis expects a plus block")
    inv = _inverse_unitriangular(block.entries)
    size = block.size
    star = tuple(tuple(inv[j][i] for j in range(size)) for i in range(size))
    return TransitionBlock(block.n, block.l, block.charge, block.k, block.alpha, block.rows, star, "star")


def _as_dict(blocks: Sequence[TransitionBlock]) -> dict[tuple[Multipartition, Multipartition], LaurentPoly]:
    """(λ, μ) ↦ Δ_{λμ} over all blocks."""
    out = {}
    for b in blocks:
        for i, ri in enumerate(b.rows):
            for j, rj in enumerate(b.rows):
                if b.entries[i][j]:
                    out[(rj.multipartition, ri.multipartition)] = b.entries[i][j]
    return out


@dataclass(frozen=True)
class InversionReport:
    ok: bool
    checked: int
    message: str


def verify_inversion(n: int, l: int, charge: Sequence[int], k: int) -> InversionReport:
    """Check Σ_ν Δ⁻_{λ′,ν′}(s′|q⁻¹) Δ⁺_{μ,ν}(s|q) = δ_{λμ} on all degree-k pairs."""
    charge = tuple(charge)
    plus = canonical_basis(n, l, charge, k, "plus")
    _, charge_c = conjugate_mp(tuple(() for _ in charge), charge)
    minus = _as_dict(canonical_basis(n, l, charge_c, k, "minus"))
    dplus = _as_dict(plus)
    mps = [r.multipartition for b in plus for r in b.rows]
    conj = {mp: conjugate_mp(mp, charge)[0] for mp in mps}
    by_mu: dict[Multipartition, list[tuple[Multipartition, LaurentPoly]]] = {}
    for (mu, nu), c in dplus.items():
        by_mu.setdefault(mu, []).append((nu, c))
    checked = 0
    for lam in mps:
        for mu in mps:
            acc = ZERO
            for nu, c in by_mu.get(mu, []):
                m = minus.get((conj[lam], conj[nu]))
                if m:
                    acc = acc + m.bar() * c
            want = ONE if lam == mu else ZERO
            checked += 1
            if acc != want:
                return InversionReport(False, checked, f"pair {lam}, {mu}: got {acc}, expected {want}")
    return InversionReport(True, checked, f"inversion holds on {checked} pairs")


@dataclass(frozen=True)
class _Desc:
    key: object

    def __lt__(self, other: _Desc) -> bool:
        return self.key > other.key  # type: ignore[operator]


def solve_closure(
    seeds: Sequence[object], bar_of: Callable[[object], Mapping[object, LaurentPoly]], sign: str
) -> tuple[list[object], list[list[LaurentPoly]]]:
    """Canonical elements indexed by the seeds, for a bar involution given on basis keys.

    The basis is the bar-closure of the seeds, ordered topologically (a key precedes
    everything in the support of its bar).  Returns (order, D) with D as in
    :func:`solve_triangular`; only the seed columns are filled.
    """
    images: dict[object, Mapping[object, LaurentPoly]] = {}
    todo = list(seeds)
    while todo:
        key = todo.pop()
        if key in images:
            continue
        images[key] = bar_of(key)
        todo.extend(k for k in images[key] if k not in images)
    below = {k: {t for t in img if t != k} for k, img in images.items()}
    indeg = {k: 0 for k in images}
    for k in images:
        for t in below[k]:
            indeg[t] += 1
    # keys must be mutually comparable; ties are broken by the largest key first
    ready = [_Desc(k) for k, d in indeg.items() if d == 0]
    heapq.heapify(ready)
    order: list[object] = []
    while ready:
        k = heapq.heappop(ready).key
        order.append(k)
        for t in below[k]:
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(ready, _Desc(t))
    if len(order) != len(images):
        raise AssertionError("bar involution is not triangular on this closure")
    index = {k: i for i, k in enumerate(order)}
    mat = [[ZERO] * len(order) for _ in order]
    for k, img in images.items():
        for t, c in img.items():
            mat[index[k]][index[t]] = c
    return order, solve_triangular(mat, sign, order, sorted({index[k] for k in seeds}))
