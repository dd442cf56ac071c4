"""Beta sequences and the three labelings of the ordered-wedge basis.

A charged partition (λ, s) encodes the semi-infinite beta sequence
k_i = λ_i + s − i + 1.  Writing k = c + n(d − 1) − nl·m with c ∈ 1..n and
d ∈ 1..l splits the sequence by level d into an l-multipartition with charge
(the l-pair) or, with the roles of n and l exchanged, into an n-pair.

All conversions work on a finite window of the sequence that ends exactly at
a complete block of nl consecutive integers; below such a window every level
receives a run of consecutive values, so the tails decode literally.
"""
from __future__ import annotations

from typing import NamedTuple, Sequence

from .combinatorics import Multipartition, Partition, addable_nodes, partition, removable_nodes

__all__ = [
    "SlotDecomposition",
    "decompose",
    "beta",
    "from_beta",
    "to_l_pair",
    "from_l_pair",
    "to_n_pair",
    "from_n_pair",
    "sigma_s",
    "charge_core_relation",
]


class SlotDecomposition(NamedTuple):
    c: int
    d: int
    m: int


def decompose(k: int, n: int, l: int) -> SlotDecomposition:
    """The unique (c, d, m) with k = c + n(d − 1) − nl·m, c ∈ 1..n, d ∈ 1..l."""
    nl = n * l
    e = (k - 1) % nl + 1
    return SlotDecomposition((e - 1) % n + 1, (e - 1) // n + 1, (e - k) // nl)


def beta(lam: Partition, s: int, r: int) -> tuple[int, ...]:
    """The first r entries of the beta sequence of (λ, s)."""
    if r < len(lam):
        raise ValueError(f"window {r} shorter than the partition length {len(lam)}")
    return tuple((lam[i] if i < len(lam) else 0) + s - i for i in range(r))


def from_beta(k: Sequence[int], s: int) -> Partition:
    """Decode a strictly decreasing window whose continuation is the tail of charge s."""
    r = len(k)
    lam = [k[i] - s + i for i in range(r)]
    if any(lam[i] < lam[i + 1] for i in range(r - 1)) or (lam and lam[-1] < 0):
        raise ValueError(f"window {list(k)} is not compatible with charge {s}")
    return partition(lam)


def _block_window(lam: Partition, s: int, nl: int) -> tuple[tuple[int, ...], int]:
    """All beta entries k ≥ T, where T = 1 − nl·M is the largest block start with every k < T in the tail."""
    # the tail is k = s − len(λ), s − len(λ) − 1, ...; need T − 1 ≤ s − len(λ)
    bound = s - len(lam) + 1
    M = -((bound - 1) // nl)
    T = 1 - nl * M
    return beta(lam, s, bound - T + len(lam)), M


def _split(lam: Partition, s: int, n: int, l: int, side: str) -> tuple[Multipartition, tuple[int, ...]]:
    # side "l": group by d with values c − n·m; side "n": group by c with values d − l·m
    window, M = _block_window(lam, s, n * l)
    ngroups, step = (l, n) if side == "l" else (n, l)
    groups: list[list[int]] = [[] for _ in range(ngroups)]
    for k in window:
        c, d, m = decompose(k, n, l)
        if side == "l":
            groups[d - 1].append(c - n * m)
        else:
            groups[c - 1].append(d - l * m)
    top_tail = -step * M  # largest group value contributed by the blocks below the window
    comps, charges = [], []
    for vals in groups:
        sd = top_tail + len(vals)
        comps.append(partition([v - sd + i for i, v in enumerate(vals)]))
        charges.append(sd)
    return tuple(comps), tuple(charges)


def _merge(
    comps: Sequence[Sequence[int]], charges: Sequence[int], n: int, l: int, side: str
) -> tuple[Partition, int]:
    ngroups, step = (l, n) if side == "l" else (n, l)
    if len(comps) != ngroups or len(charges) != ngroups:
        raise ValueError(f"expected {ngroups} components and charges")
    comps = [partition(c) for c in comps]
    nl = n * l
    # choose M so that every group's non-trivial part lies above −step·M
    M = max(1, max(-((sd - len(c)) // step) + 1 for c, sd in zip(comps, charges)))
    floor = -step * M
    ks: list[int] = []
    for g, (c, sd) in enumerate(zip(comps, charges), start=1):
        i = 0
        while True:
            v = (c[i] if i < len(c) else 0) + sd - i
            if v <= floor:
                break
            r = (v - 1) % step + 1
            m = (r - v) // step
            cc, dd = (r, g) if side == "l" else (g, r)
            ks.append(cc + n * (dd - 1) - nl * m)
            i += 1
    ks.sort(reverse=True)
    if len(set(ks)) != len(ks):
        raise ValueError("merged beta sequence has repeated entries")
    return from_beta(ks, sum(charges)), sum(charges)


def to_l_pair(lam: Sequence[int], s: int, n: int, l: int) -> tuple[Multipartition, tuple[int, ...]]:
    """τ_l^s: (λ, s) -> (λ_l, s_l), grouping beta entries by level d with values c − n·m."""
    return _split(partition(lam), s, n, l, "l")


def from_l_pair(comps: Sequence[Sequence[int]], charges: Sequence[int], n: int, l: int) -> tuple[Partition, int]:
    """Inverse of :func:`to_l_pair`."""
    return _merge(comps, charges, n, l, "l")


def to_n_pair(lam: Sequence[int], s: int, n: int, l: int) -> tuple[Multipartition, tuple[int, ...]]:
    """τ_n^s: (λ, s) -> (λ_n, s_n), grouping by c with values d − l·m (the n-quotient)."""
    return _split(partition(lam), s, n, l, "n")


def from_n_pair(comps: Sequence[Sequence[int]], charges: Sequence[int], n: int, l: int) -> tuple[Partition, int]:
    """Inverse of :func:`to_n_pair`."""
    return _merge(comps, charges, n, l, "n")


def sigma_s(lam: Sequence[int], s: int, n: int, l: int) -> Partition:
    """Relabel beta slots e = c + n(d − 1) to d + l(c − 1), keeping the block index."""
    lam = partition(lam)
    nl = n * l
    window, _ = _block_window(lam, s, nl)
    out = []
    for k in window:
        c, d, m = decompose(k, n, l)
        out.append(d + l * (c - 1) - nl * m)
    out.sort(reverse=True)
    return from_beta(out, s)


def charge_core_relation(lam: Sequence[int], s: int, n: int) -> tuple[int, ...]:
    """Charges s_n recovered from s_c − s_{c+1} = N_c(λ|s, n) and Σ s_c = s."""
    mp = (partition(lam),)
    N = [0] * n
    for g in addable_nodes(mp):
        N[(s + g.col - g.row) % n] += 1
    for g in removable_nodes(mp):
        N[(s + g.col - g.row) % n] -= 1
    num = s - sum(j * N[j] for j in range(1, n))
    if num % n:
        raise ArithmeticError("charge relation has no integral solution")
    last = num // n
    return tuple(last + sum(N[j] for j in range(c, n)) for c in range(1, n + 1))
