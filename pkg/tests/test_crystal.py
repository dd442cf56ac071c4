from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from qfock.combinatorics import Node, addable_removable, alpha_counts, multipartitions
from qfock.crystal import crystal_component, e_tilde, f_tilde, good_nodes, reduced_word, to_dot
from qfock.fock import basis_l, f_op

AR_MP = ((5, 3, 3, 1), (3, 2), (4, 3, 1), (2, 2, 2, 1))
AR_CHARGE = (5, 0, 2, 1)
E = ()


def test_ex_ar_good_nodes():
    add, rem = good_nodes(AR_MP, AR_CHARGE, 3, 0)
    assert add == Node(5, 1, 4)  # A_{-3,4}
    assert rem == Node(1, 5, 1)  # R_{9,1}
    # the canceled word has a single A and a single R, so both selection rules agree here
    assert good_nodes(AR_MP, AR_CHARGE, 3, 0, pick="extreme") == (add, rem)
    red = reduced_word(addable_removable(AR_MP, AR_CHARGE, 3, 0))
    assert [t for _, t in red] == ["A", "R"]


def test_reduced_word_shapes():
    a, b = Node(1, 1, 1), Node(1, 2, 1)
    assert reduced_word([(a, "R"), (b, "A")]) == []
    assert reduced_word([(a, "A"), (b, "R")]) == [(a, "A"), (b, "R")]
    for text, left in [("RRAARA", ""), ("ARRAAR", "AR"), ("RARAA", "A"), ("RRA", "R")]:
        word = [(Node(1, i, 1), t) for i, t in enumerate(text, start=1)]
        assert "".join(t for _, t in reduced_word(word)) == left


def test_empty_multipartition():
    add, rem = good_nodes((E, E), (0, 1), 2, 0)
    assert add is not None and rem is None
    members, arrows = crystal_component(2, 2, (0, 0), 0)
    assert members == {(E, E)} and arrows == []


def test_n3_l2_members():
    members, _ = crystal_component(3, 2, (1, -1), 3)
    assert ((), (3,)) in members and ((1,), (2,)) in members
    # ((2),(1)) spans a weight space of its own; it lies in the component
    assert ((2,), (1,)) in members


def test_n2_l2_small_stars():
    members, _ = crystal_component(2, 2, (0, 0), 2)
    assert {mp for mp in members if sum(map(sum, mp)) == 1} == {(E, (1,))}
    assert {mp for mp in members if sum(map(sum, mp)) == 2} == {(E, (2,)), ((1,), (1,))}


def test_stars_on_every_n2_l2_block(golden_n2_l2):
    members, _ = crystal_component(2, 2, (0, 0), 6)
    for g in golden_n2_l2["blocks"]:
        for r in g["rows"]:
            mp = tuple(tuple(c) for c in r["multipartition"])
            assert (mp in members) == r["star"], (g["weight"], mp)


def rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows if any(r)]
    rk, col = 0, 0
    width = len(rows[0]) if rows else 0
    while rk < len(rows) and col < width:
        piv = next((i for i in range(rk, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(len(rows)):
            if i != rk and rows[i][col]:
                f = rows[i][col] / rows[rk][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rk])]
        rk += 1
        col += 1
    return rk


@pytest.mark.parametrize("n,l,charge,k", [(2, 2, (0, 0), 5), (3, 2, (1, -1), 4), (2, 3, (0, 1, 0), 3)])
def test_component_matches_weight_multiplicities(n, l, charge, k):
    """dim of the U_q-orbit of the vacuum in each weight space, at q = 7/3, equals the component count."""
    x = Fraction(7, 3)
    members, _ = crystal_component(n, l, charge, k)
    vac = basis_l(((),) * l, charge, n)
    for size in range(k + 1):
        spaces: dict = {}
        for word in itertools.product(range(n), repeat=size):
            v = vac
            for i in word:
                v = f_op(i, v)
            if v:
                spaces.setdefault(tuple(sorted(word)), []).append(v)
        for key, vecs in spaces.items():
            support = sorted({lam for v in vecs for lam in v.terms})
            mat = [[v.coeff(lam).evaluate(x) for lam in support] for v in vecs]
            alpha = tuple(key.count(i) for i in range(n))
            expected = sum(1 for mp in members if sum(map(sum, mp)) == size and alpha_counts(mp, charge, n) == alpha)
            assert rank(mat) == expected, (size, alpha)


@pytest.mark.parametrize("n,l,charge", [(2, 2, (0, 0)), (3, 2, (1, -1)), (3, 3, (0, 2, 1))])
def test_crystal_axioms(n, l, charge):
    for k in range(5):
        for mp in multipartitions(k, l):
            for i in range(n):
                add, rem = good_nodes(mp, charge, n, i)
                t = f_tilde(mp, charge, n, i)
                assert (t is None) == (add is None)
                if t is not None:
                    assert e_tilde(t, charge, n, i) == mp
                s = e_tilde(mp, charge, n, i)
                if s is not None:
                    assert f_tilde(s, charge, n, i) == mp


def test_arrows_and_dot():
    members, arrows = crystal_component(2, 2, (0, 0), 2)
    for a in arrows:
        assert a.target == f_tilde(a.source, (0, 0), 2, a.color)
        assert a.source in members and a.target in members
    dot = to_dot(members, arrows)
    assert dot.startswith("digraph crystal {")
    assert '"((),())" -> "((),(1))" [label="0", color=red];' in dot


def test_errors():
    with pytest.raises(ValueError):
        good_nodes((E,), (0,), 2, 0, pick="middle")
    with pytest.raises(ValueError):
        crystal_component(2, 2, (0,), 2)
    with pytest.raises(ValueError):
        crystal_component(2, 2, (0, 0), -1)
