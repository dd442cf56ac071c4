from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qfock.algebra import ONE, LaurentPoly
from qfock.indexing import beta, from_beta
from qfock.wedge import (
    bar_finite,
    bar_finite_ordered,
    boson_finite,
    is_ordered,
    kappa,
    pair_rule,
    straighten,
    straighten_naive,
    wedge_geq,
)

q = LaurentPoly({1: 1})
qi = LaurentPoly({-1: 1})


def perm_sign(seq):
    inv = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] < seq[j])
    return -1 if inv % 2 else 1


def random_wedges(count: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        n, l = rng.randint(1, 3), rng.randint(1, 3)
        r = rng.randint(0, 5)
        yield n, l, tuple(rng.randint(-6, 6) for _ in range(r))


def check_normal_form(seq, n, l, out):
    for key, c in out.items():
        assert is_ordered(key) and c
        assert len(key) == len(seq)
        assert sum(key) == sum(seq)
        if seq:
            assert min(seq) <= min(key) and max(key) <= max(seq)


def test_trivial_cases():
    assert straighten((), 2, 2) == {(): ONE}
    assert straighten((5,), 2, 2) == {(5,): ONE}
    assert straighten((5, 2, -1), 3, 2) == {(5, 2, -1): ONE}
    for k in range(-3, 4):
        assert straighten((k, k), 2, 3) == {}


def test_single_r2_application():
    assert straighten((0, 1), 2, 1) == {(1, 0): -qi}


def test_pair_rule_outputs_ordered():
    for n, l in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        for k1, k2 in itertools.product(range(-6, 7), repeat=2):
            if k1 < k2:
                for (x, y), c in pair_rule(k1, k2, n, l):
                    assert x > y and x + y == k1 + k2 and c


@given(st.lists(st.integers(-5, 5), max_size=5))
def test_level_one_is_antisymmetric(seq):
    out = straighten(seq, 1, 1)
    if len(set(seq)) < len(seq):
        assert out == {}
    else:
        assert out == {tuple(sorted(seq, reverse=True)): LaurentPoly({0: perm_sign(seq)})}


def test_confluence_and_window_invariants():
    """500 randomized wedges: strategy independence, idempotence, sum and window preservation."""
    for n, l, seq in random_wedges(500, seed=20261016):
        left = straighten_naive(seq, n, l, "left")
        right = straighten_naive(seq, n, l, "right")
        fast = straighten(seq, n, l)
        assert left == right == fast, (n, l, seq)
        check_normal_form(seq, n, l, fast)
        for key, c in fast.items():
            assert straighten(key, n, l) == {key: ONE}


def test_kappa():
    assert kappa([1, 1, 2, 1]) == 3
    assert kappa([]) == 0


def test_bar_length_one():
    assert bar_finite({(4,): q}, 2, 2) == {(4,): qi}


@pytest.mark.parametrize("n,l", [(2, 1), (2, 2), (3, 2)])
def test_bar_involution_and_unitriangularity(n, l):
    rng = random.Random(n * 10 + l)
    for _ in range(40):
        r = rng.randint(1, 4)
        k = tuple(sorted(rng.sample(range(-5, 6), r), reverse=True))
        b = bar_finite_ordered(k, n, l)
        assert b.get(k) == ONE
        assert all(wedge_geq(k, key) for key in b)
        assert bar_finite(b, n, l) == {k: ONE}
        w = {k: LaurentPoly({rng.randint(-2, 2): 1})}
        assert bar_finite(bar_finite(w, n, l), n, l) == w


def test_boson_finite_split_example():
    # B_{-2} on the 4-prefix of |∅, 0⟩ at n = 2, l = 1, decoded with the tail reattached
    out = boson_finite({beta((), 0, 4): ONE}, -2, 2, 1)
    decoded = {from_beta(key, 0): c for key, c in out.items()}
    assert decoded == {
        (4,): ONE,
        (3, 1): -qi,
        (2, 2): LaurentPoly({-2: 1, 0: -1}),
        (2, 1, 1): qi,
        (1, 1, 1, 1): LaurentPoly({-2: -1}),
    }


def test_boson_finite_bookkeeping():
    assert boson_finite({}, 1, 2, 2) == {}
    w = {(3, 1, -2): ONE}
    for m in (-1, 1, 2):
        for key in boson_finite(w, m, 2, 2):
            assert sum(key) == 2 - 4 * m
    with pytest.raises(ValueError):
        boson_finite(w, 0, 2, 2)
