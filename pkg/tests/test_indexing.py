from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qfock.combinatorics import conjugate, conjugate_mp, partitions
from qfock.indexing import (
    beta,
    charge_core_relation,
    decompose,
    from_beta,
    from_l_pair,
    from_n_pair,
    sigma_s,
    to_l_pair,
    to_n_pair,
)

from conftest import small_partitions

E = ()
# λ, σ^s(λ), λ_l, s_l, λ_n, s_n for n = 3, l = 2, s = 0 (σ of (3^2,1) corrected, see test below)
TABLE = [
    ((7,), (7,), ((3,), E), (1, -1), ((2,), E, E), (1, 0, -1)),
    ((6, 1), (6, 1, 1), (E, (3, 1)), (0, 0), (E, E, (1,)), (0, -1, 1)),
    ((5, 2), (4, 2, 1), (E, (3,)), (1, -1), (E, (2,), E), (1, 0, -1)),
    ((5, 1, 1), (4, 1, 1, 1, 1), (E, (2, 1, 1)), (0, 0), (E, (1,), E), (-1, 1, 0)),
    ((4, 3), (3, 3, 1), ((1,), (2,)), (1, -1), ((1,), (1,), E), (1, 0, -1)),
    ((4, 2, 1), (2, 2, 1, 1, 1), (E, (2, 1)), (1, -1), ((1, 1), E, E), (1, 0, -1)),
    ((4, 1, 1, 1), (2, 1), (E, E), (-1, 1), ((1,), E, (1,)), (1, 0, -1)),
    ((3, 3, 1), (5, 4, 1, 1, 1), ((1, 1), (1,)), (2, -2), (E, E, (1,)), (-1, 1, 0)),
    ((3, 2, 2), (5, 2, 2, 2, 1), ((1,), (2,)), (2, -2), ((1,), E, E), (0, -1, 1)),
    ((3, 2, 1, 1), (5, 2), ((2, 1), E), (1, -1), (E, E, (2,)), (1, 0, -1)),
    ((3, 1, 1, 1, 1), (5, 1, 1, 1), ((3, 1), E), (0, 0), (E, (1,), E), (0, -1, 1)),
    ((2, 2, 2, 1), (3, 2, 2), ((1, 1), (1,)), (1, -1), (E, (1,), (1,)), (1, 0, -1)),
    ((2, 2, 1, 1, 1), (3, 2, 1, 1), ((1, 1, 1), E), (1, -1), (E, (1, 1), E), (1, 0, -1)),
    ((2, 1, 1, 1, 1, 1), (3, 1, 1, 1, 1, 1), ((2, 1, 1), E), (0, 0), ((1,), E, E), (-1, 1, 0)),
    ((1,) * 7, (1,) * 7, (E, (1, 1, 1)), (1, -1), (E, E, (1, 1)), (1, 0, -1)),
]


def classical_quotient(lam, s, n):
    """n-quotient by residue-class extraction from a long beta window."""
    window = beta(lam, s, len(lam) + 4 * n + 4)
    comps, charges = [], []
    for c in range(1, n + 1):
        vals = [(k - c) // n + 1 for k in window if (k - c) % n == 0]
        # the last entry sits on the consecutive tail: s_c = v_j + j - 1
        sc = vals[-1] + len(vals) - 1
        comps.append(from_beta(vals, sc))
        charges.append(sc)
    return tuple(comps), tuple(charges)


def test_decompose():
    assert decompose(7, 3, 2) == (1, 1, -1)
    assert decompose(-1, 3, 2) == (2, 2, 1)
    for n in range(1, 4):
        for l in range(1, 4):
            assert decompose(1, n, l) == (1, 1, 0)


@given(st.integers(-200, 200), st.integers(1, 4), st.integers(1, 4))
def test_decompose_reconstructs(k, n, l):
    c, d, m = decompose(k, n, l)
    assert 1 <= c <= n and 1 <= d <= l
    assert c + n * (d - 1) - n * l * m == k


@pytest.mark.parametrize("row", TABLE, ids=lambda r: str(r[0]))
def test_table_row(row):
    lam, sig, lam_l, s_l, lam_n, s_n = row
    assert to_l_pair(lam, 0, 3, 2) == (lam_l, s_l)
    assert to_n_pair(lam, 0, 3, 2) == (lam_n, s_n)
    assert sigma_s(lam, 0, 3, 2) == sig
    assert charge_core_relation(lam, 0, 3) == s_n


def test_sigma_table_cell_correction():
    # σ^s(λ)'s l-quotient must give back λ_l; (5,4,1^3) does, the printed (5,4,1^2) does not
    lam_l = to_l_pair((3, 3, 1), 0, 3, 2)
    assert to_n_pair((5, 4, 1, 1, 1), 0, 2, 3) == lam_l
    assert to_n_pair((5, 4, 1, 1), 0, 2, 3) != lam_l


def test_empty_partition():
    for s in range(-3, 4):
        mp, ch = to_l_pair((), s, 3, 2)
        assert mp == (E, E) and sum(ch) == s
        assert from_l_pair(mp, ch, 3, 2) == ((), s)
    assert charge_core_relation((), 0, 2) == (0, 0)


@pytest.mark.parametrize("n,l", [(1, 1), (2, 1), (1, 3), (2, 2), (3, 2), (2, 3)])
def test_roundtrips_and_oracles(n, l):
    seen: dict = {}
    for k in range(9):
        for lam in partitions(k):
            for s in range(-2, 3):
                lp = to_l_pair(lam, s, n, l)
                np_ = to_n_pair(lam, s, n, l)
                assert sum(lp[1]) == s and sum(np_[1]) == s
                assert from_l_pair(*lp, n, l) == (lam, s)
                assert from_n_pair(*np_, n, l) == (lam, s)
                assert np_ == classical_quotient(lam, s, n)
                assert charge_core_relation(lam, s, n) == np_[1]
                sig = sigma_s(lam, s, n, l)
                # σ^s(λ) read with n and l exchanged gives back the l-pair
                assert to_n_pair(sig, s, l, n) == lp
                assert seen.setdefault((sig, s), lam) == lam  # injective
                # prime compatibility
                assert to_l_pair(conjugate(lam), -s, n, l) == conjugate_mp(*lp)


def test_from_l_pair_rejects_mismatch():
    with pytest.raises(ValueError):
        from_l_pair(((1,),), (0, 0), 2, 2)


@given(small_partitions(6), st.integers(-3, 3))
def test_beta_roundtrip(lam, s):
    r = len(lam) + 3
    k = beta(lam, s, r)
    assert all(a > b for a, b in zip(k, k[1:]))
    assert from_beta(k, s) == lam
