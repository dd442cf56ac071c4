"""Good nodes and the crystal graph of the Fock space.

For a fixed color i, the addable (A) and removable (R) i-nodes are listed in
increasing node order and adjacent RA pairs are cancelled until the word has
the shape A...AR...R.  The good nodes sit at the A/R boundary of the reduced
word: the rightmost surviving A is the good addable node and the leftmost
surviving R the good removable node.  This is the reading whose connected
component of the empty multipartition matches the canonical-basis tables
and the weight multiplicities of U_q(sl_n)|∅⟩.

``pick="extreme"`` selects the opposite ends (leftmost A, rightmost R)
instead; the two readings agree whenever at most one A and one R survive.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import Multipartition, Node, addable_removable, partition

__all__ = ["CrystalArrow", "reduced_word", "good_nodes", "f_tilde", "e_tilde", "crystal_component", "to_dot"]


@dataclass(frozen=True)
class CrystalArrow:
    source: Multipartition
    target: Multipartition
    color: int


def reduced_word(word: Sequence[tuple[Node, str]]) -> list[tuple[Node, str]]:
    """Cancel adjacent RA pairs recursively in one stack pass (an A pops a pending R)."""
    stack: list[tuple[Node, str]] = []
    for item in word:
        if item[1] == "A" and stack and stack[-1][1] == "R":
            stack.pop()
        else:
            stack.append(item)
    return stack


def good_nodes(
    mp: Sequence[Sequence[int]], charge: Sequence[int], n: int, i: int, pick: str = "boundary"
) -> tuple[Node | None, Node | None]:
    """(good addable, good removable) i-nodes, or None where absent."""
    if pick not in ("boundary", "extreme"):
        raise ValueError("pick must be 'boundary' or 'extreme'")
    mp = tuple(partition(c) for c in mp)
    red = reduced_word(addable_removable(mp, charge, n, i))
    adds = [g for g, t in red if t == "A"]
    rems = [g for g, t in red if t == "R"]
    if pick == "boundary":
        return (adds[-1] if adds else None, rems[0] if rems else None)
    return (adds[0] if adds else None, rems[-1] if rems else None)


def _with_node(mp: Multipartition, g: Node, delta: int) -> Multipartition:
    comp = list(mp[g.comp - 1])
    if delta > 0 and g.row > len(comp):
        comp.append(1)
    else:
        comp[g.row - 1] += delta
    return mp[: g.comp - 1] + (partition(comp),) + mp[g.comp :]


def f_tilde(mp: Sequence[Sequence[int]], charge: Sequence[int], n: int, i: int, pick: str = "boundary") -> Multipartition | None:
    """Add the good addable i-node, if any."""
    mp = tuple(partition(c) for c in mp)
    g, _ = good_nodes(mp, charge, n, i, pick)
    return None if g is None else _with_node(mp, g, 1)


def e_tilde(mp: Sequence[Sequence[int]], charge: Sequence[int], n: int, i: int, pick: str = "boundary") -> Multipartition | None:
    """Remove the good removable i-node, if any."""
    mp = tuple(partition(c) for c in mp)
    _, g = good_nodes(mp, charge, n, i, pick)
    return None if g is None else _with_node(mp, g, -1)


def crystal_component(
    n: int, l: int, charge: Sequence[int], max_size: int, pick: str = "boundary"
) -> tuple[set[Multipartition], list[CrystalArrow]]:
    """Breadth-first closure of the empty multipartition under the f̃_i, up to max_size."""
    if len(charge) != l:
        raise ValueError("charge length must equal l")
    if max_size < 0:
        raise ValueError("max_size must be non-negative")
    start: Multipartition = tuple(() for _ in range(l))
    seen = {start}
    arrows: list[CrystalArrow] = []
    queue = deque([start])
    while queue:
        mp = queue.popleft()
        if sum(sum(c) for c in mp) >= max_size:
            continue
        for i in range(n):
            t = f_tilde(mp, charge, n, i, pick)
            if t is None:
                continue
            arrows.append(CrystalArrow(mp, t, i))
            if t not in seen:
                seen.add(t)
                queue.append(t)
    arrows.sort(key=lambda a: (sum(map(sum, a.source)), a.source, a.color))
    return seen, arrows


def to_dot(members: set[Multipartition], arrows: Sequence[CrystalArrow]) -> str:
    """A DOT digraph with one edge color per residue."""
    palette = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]

    def name(mp: Multipartition) -> str:
        return "(" + ",".join("(" + ",".join(map(str, c)) + ")" if c else "()" for c in mp) + ")"

    lines = ["digraph crystal {", "  node [shape=box];"]
    for mp in sorted(members, key=lambda m: (sum(map(sum, m)), m)):
        lines.append(f'  "{name(mp)}";')
    for a in arrows:
        col = palette[a.color % len(palette)]
        lines.append(f'  "{name(a.source)}" -> "{name(a.target)}" [label="{a.color}", color={col}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
