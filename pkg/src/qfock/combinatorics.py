"""Partitions, charged multipartitions, nodes and the counts N_i, M_i.

Partitions are plain tuples of positive integers in weakly decreasing order.
Multipartitions are tuples of partitions; components are numbered from 1 in
node labels (as in the mathematical convention) but indexed from 0 in Python
containers.  Charges are never reduced modulo n; residues and fundamental
weight indices are.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "Partition",
    "Multipartition",
    "ChargedMultipartition",
    "Node",
    "AffineWeight",
    "partition",
    "partitions",
    "multipartitions",
    "size",
    "conjugate",
    "conjugate_mp",
    "dominance_leq",
    "format_partition",
    "format_multipartition",
    "content",
    "node_key",
    "node_less",
    "addable_nodes",
    "removable_nodes",
    "addable_removable",
    "counts",
    "hook_exponents",
    "delta_const",
    "weight_of",
    "dot_weight_of",
    "alpha_counts",
]

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


def partition(parts: Sequence[int]) -> Partition:
    """Validate and normalize a partition (trailing zeros are dropped)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {list(parts)}")
    return p


def size(mp: Partition | Multipartition) -> int:
    """|λ| for a partition or the total size of a multipartition."""
    if mp and isinstance(mp[0], tuple):
        return sum(sum(c) for c in mp)
    return sum(mp)  # type: ignore[arg-type]


def partitions(k: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of k in descending lexicographic order."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


def multipartitions(k: int, r: int) -> Iterator[Multipartition]:
    """All r-multipartitions of total size k."""
    if r == 0:
        if k == 0:
            yield ()
        return
    for k0 in range(k, -1, -1):
        for p in partitions(k0):
            for rest in multipartitions(k - k0, r - 1):
                yield (p,) + rest


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def conjugate_mp(mp: Multipartition, charge: Sequence[int]) -> tuple[Multipartition, tuple[int, ...]]:
    """Reverse the components, conjugate each, and map s to (-s_r, ..., -s_1)."""
    return (
        tuple(conjugate(c) for c in reversed(mp)),
        tuple(-s for s in reversed(charge)),
    )


def format_partition(lam: Sequence[int]) -> str:
    """Exponential notation: (2,1^2); the empty partition prints as ∅."""
    lam = partition(lam)
    if not lam:
        return "∅"
    out = []
    for part, run in itertools.groupby(lam):
        mult = len(list(run))
        out.append(str(part) if mult == 1 else f"{part}^{mult}")
    return "(" + ",".join(out) + ")"


def format_multipartition(mp: Sequence[Sequence[int]]) -> str:
    return "(" + ",".join(format_partition(c) for c in mp) + ")"


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff λ ⊴ μ in dominance order (equal sizes required)."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance order compares partitions of equal size only")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


@dataclass(frozen=True)
class ChargedMultipartition:
    """An r-tuple of partitions with an r-tuple of integer charges."""

    components: Multipartition
    charge: tuple[int, ...]

    def __post_init__(self) -> None:
        comps = tuple(partition(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "charge", tuple(int(s) for s in self.charge))
        if len(comps) != len(self.charge):
            raise ValueError("components and charge must have equal length")

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    def conjugate(self) -> ChargedMultipartition:
        return ChargedMultipartition(*conjugate_mp(self.components, self.charge))


class Node(NamedTuple):
    """A cell (row, col, comp) with 1-based row, column and component."""

    row: int
    col: int
    comp: int


def content(node: Node, charge: Sequence[int]) -> int:
    """The charged content s_b + j - i."""
    return charge[node.comp - 1] + node.col - node.row


def node_key(node: Node, charge: Sequence[int]) -> tuple[int, int]:
    """Sort key realizing the total order on nodes: content, then component."""
    return (content(node, charge), node.comp)


def node_less(g: Node, h: Node, charge: Sequence[int]) -> bool:
    return node_key(g, charge) < node_key(h, charge)


def addable_nodes(mp: Multipartition) -> list[Node]:
    out = []
    for b, lam in enumerate(mp, start=1):
        for i in range(len(lam) + 1):
            cur = lam[i] if i < len(lam) else 0
            if i == 0 or lam[i - 1] > cur:
                out.append(Node(i + 1, cur + 1, b))
    return out


def removable_nodes(mp: Multipartition) -> list[Node]:
    out = []
    for b, lam in enumerate(mp, start=1):
        for i, x in enumerate(lam):
            nxt = lam[i + 1] if i + 1 < len(lam) else 0
            if x > nxt:
                out.append(Node(i + 1, x, b))
    return out


def addable_removable(mp: Multipartition, charge: Sequence[int], n: int, i: int) -> list[tuple[Node, str]]:
    """Addable ('A') and removable ('R') i-nodes sorted ascending by the node order."""
    if not 0 <= i < n:
        raise ValueError(f"residue {i} out of range for n={n}")
    marked = [(g, "A") for g in addable_nodes(mp) if content(g, charge) % n == i]
    marked += [(g, "R") for g in removable_nodes(mp) if content(g, charge) % n == i]
    marked.sort(key=lambda t: node_key(t[0], charge))
    return marked


def counts(mp: Multipartition, charge: Sequence[int], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(N_0..N_{n-1}, M_0..M_{n-1}): addable minus removable, and node counts by residue."""
    N = [0] * n
    M = [0] * n
    for g in addable_nodes(mp):
        N[content(g, charge) % n] += 1
    for g in removable_nodes(mp):
        N[content(g, charge) % n] -= 1
    for b, lam in enumerate(mp):
        s = charge[b]
        for r, x in enumerate(lam):
            for c in range(x):
                M[(s + c - r) % n] += 1
    return tuple(N), tuple(M)


def alpha_counts(mp: Multipartition, charge: Sequence[int], n: int) -> tuple[int, ...]:
    """M_0..M_{n-1} only."""
    return counts(mp, charge, n)[1]


def _single_cell_diff(lam: Multipartition, mu: Multipartition) -> Node:
    if len(lam) != len(mu):
        raise ValueError("multipartitions of different lengths")
    diff: list[Node] = []
    for b, (x, y) in enumerate(zip(lam, mu), start=1):
        if x == y:
            continue
        if len(y) < len(x) or any(y[r] < (x[r] if r < len(x) else 0) for r in range(len(y))):
            raise ValueError("second multipartition does not contain the first")
        for r in range(len(y)):
            for c in range(x[r] if r < len(x) else 0, y[r]):
                diff.append(Node(r + 1, c + 1, b))
    if len(diff) != 1:
        raise ValueError("multipartitions differ by more than one cell")
    return diff[0]


def hook_exponents(
    lam: Multipartition, mu: Multipartition, charge: Sequence[int], n: int, i: int
) -> tuple[int, int]:
    """(N_i^>, N_i^<) for the single i-node γ = μ \\ λ."""
    g = _single_cell_diff(lam, mu)
    if content(g, charge) % n != i:
        raise ValueError(f"added cell {g} is not an {i}-node")
    key = node_key(g, charge)
    above = below = 0
    for h, kind in addable_removable(lam, charge, n, i):
        sign = 1 if kind == "A" else -1
        hk = node_key(h, charge)
        if hk > key:
            above += sign
        elif hk < key:
            below += sign
    return above, below


def delta_const(charge: Sequence[int], n: int) -> int:
    """Δ(s|n) = ½Σ|Λ_{s_b}|² + ½Σ(s_b²/n − s_b), asserted integral."""
    total = Fraction(0)
    for s in charge:
        i = s % n
        total += Fraction(i) - Fraction(i * i, n)  # |Λ_i|² = i − i²/n
        total += Fraction(s * s, n) - s
    total /= 2
    if total.denominator != 1:
        raise ArithmeticError(f"Δ({list(charge)}|{n}) is not integral: {total}")
    return int(total)


@dataclass(frozen=True)
class AffineWeight:
    """Σ fund[i] Λ_i + delta·δ in the fundamental-weight coordinates."""

    fund: tuple[int, ...]
    delta: int

    def level(self) -> int:
        return sum(self.fund)

    def __str__(self) -> str:
        parts = [f"{c}L{i}" for i, c in enumerate(self.fund) if c]
        if self.delta:
            parts.append(f"{self.delta}d")
        return " + ".join(parts) or "0"


def _alpha_in_fund(i: int, n: int) -> list[int]:
    v = [0] * n
    v[i] += 2
    v[(i - 1) % n] -= 1
    v[(i + 1) % n] -= 1
    return v


def weight_of(mp: Multipartition, charge: Sequence[int], n: int) -> AffineWeight:
    """wt = −Δδ + ΣΛ_{s_b} − ΣM_iα_i, with α_i = 2Λ_i − Λ_{i−1} − Λ_{i+1} + [i=0]δ."""
    M = alpha_counts(mp, charge, n)
    fund = [0] * n
    for s in charge:
        fund[s % n] += 1
    for i, m in enumerate(M):
        if m:
            for j, a in enumerate(_alpha_in_fund(i, n)):
                fund[j] -= m * a
    return AffineWeight(tuple(fund), -delta_const(charge, n) - M[0])


def dot_weight_of(mp: Multipartition, charge: Sequence[int], n: int, l: int) -> AffineWeight:
    """The U_p(sl_l) weight of |λ_l, s_l⟩ read on the l-side labels."""
    if len(charge) != l:
        raise ValueError("charge length must equal l")
    M0 = alpha_counts(mp, charge, n)[0]
    fund = [0] * l
    fund[0] += n - charge[0] + charge[-1]
    for j in range(1, l):
        fund[j] += charge[j - 1] - charge[j]
    return AffineWeight(tuple(fund), -(delta_const(charge, n) + M0))
