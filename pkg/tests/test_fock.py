from __future__ import annotations

import random

import pytest

from qfock import fock
from qfock.algebra import ONE, ZERO, LaurentPoly
from qfock.combinatorics import multipartitions, partitions
from qfock.fock import (
    FockVector,
    bar,
    basis,
    basis_l,
    basis_n,
    boson,
    boson_split,
    component_boson,
    e_op,
    edot_op,
    f_op,
    fdot_op,
    gamma_m,
    is_dominant,
    prime,
    scalar,
    symmetric_op,
    symmetric_split,
    t_op,
    tdot_op,
)

q = LaurentPoly({1: 1})
qi = LaurentPoly({-1: 1})
p = LaurentPoly({-1: -1})
pi = LaurentPoly({1: -1})


def random_vector(rng: random.Random, n: int, l: int, s: int, k: int) -> FockVector:
    acc = FockVector.zero(n, l, s)
    for lam in partitions(k):
        if rng.random() < 0.7:
            c = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3), rng.randint(-2, 2): rng.randint(-3, 3)})
            acc = acc + basis(lam, s, n, l) * c
    return acc


def all_basis(n: int, l: int, s: int, max_k: int):
    for k in range(max_k + 1):
        for lam in partitions(k):
            yield basis(lam, s, n, l)


def l_expansion(v: FockVector) -> dict:
    return {mp: c for (mp, _), c in v.l_view().items()}


# -- bosons -------------------------------------------------------------------------

E = ()
SPLIT_LEVEL1 = {(4,): ONE, (3, 1): -qi, (2, 2): qi * qi - 1, (2, 1, 1): qi, (1, 1, 1, 1): -qi * qi}


def test_boson_level_one_example():
    for s in (-2, 0, 2):
        v = boson(-2, basis((), s, 2, 1))
        assert dict(v.terms) == SPLIT_LEVEL1


def test_boson_dominant_example():
    v = boson(-2, basis_l((E, E), (2, -2), 2))
    expected = {(lam, E): c for lam, c in SPLIT_LEVEL1.items()}
    expected.update({(E, lam): c * q * q for lam, c in SPLIT_LEVEL1.items()})
    assert l_expansion(v) == expected
    assert len(expected) == 10


def test_boson_non_dominant_example():
    v = boson(-2, basis_l((E, E), (0, 0), 2))
    expected = {
        ((4,), E): q,
        ((3, 1), E): -ONE,
        ((2, 2), E): 1 - q * q,
        ((2, 1, 1), E): q,
        ((1, 1, 1, 1), E): -ONE,
        (E, (4,)): ONE,
        (E, (3, 1)): -qi,
        (E, (2, 2)): qi * qi - 1,
        (E, (2, 1, 1)): ONE,
        (E, (1, 1, 1, 1)): -qi,
    }
    expected.update({
        ((2,), (2,)): q * q - 1,
        ((1,), (2, 1)): qi - q,
        ((2, 1), (1,)): qi - q,
        ((1, 1), (1, 1)): 1 - qi * qi,
    })
    assert l_expansion(v) == expected
    assert len(expected) == 14


def test_component_boson_example():
    v = basis_l((E, E), (2, -2), 2)
    assert l_expansion(component_boson(-2, 1, v)) == {(lam, E): c for lam, c in SPLIT_LEVEL1.items()}
    assert l_expansion(component_boson(-2, 2, v)) == {(E, lam): c for lam, c in SPLIT_LEVEL1.items()}
    assert boson(-2, v) == component_boson(-2, 1, v) + component_boson(-2, 2, v) * q * q
    with pytest.raises(ValueError):
        component_boson(-2, 3, v)


@pytest.mark.parametrize("n,l", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_heisenberg(n, l):
    for m in (1, 2):
        vac = basis((), 0, n, l)
        comm = boson(m, boson(-m, vac)) - boson(-m, boson(m, vac))
        assert comm == vac * gamma_m(m, n, l)
    pairs = [(1, 2), (-1, -2), (1, -2), (2, -1), (1, 1), (-2, -2)]
    for v in all_basis(n, l, 0, 3):
        for a, b in pairs:
            assert boson(a, boson(b, v)) == boson(b, boson(a, v))


def test_gamma_closed_form():
    assert gamma_m(1, 1, 1) == ONE
    assert gamma_m(2, 2, 1) == LaurentPoly({-4: 2, 0: 2})
    with pytest.raises(ValueError):
        gamma_m(0, 2, 2)


# -- dominance splittings -----------------------------------------------------------


def dominant_instances(count: int, seed: int):
    """Random (side, n, l, m, mp, charge) with the charge gaps required for B_{-m}."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n, l, m = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 2)
        side = rng.choice("ln")
        r, scale = (l, n) if side == "l" else (n, l)
        k = rng.randint(0, 3)
        mp = rng.choice(list(multipartitions(k, r)))
        gaps = [scale * m + k + rng.randint(0, 2) for _ in range(r - 1)]
        top = rng.randint(-2, 2)
        charge = [top]
        for g in gaps:
            charge.append(charge[-1] - g)
        assert is_dominant(mp, charge, scale * m)
        out.append((side, n, l, m, mp, tuple(charge)))
    return out


@pytest.mark.parametrize("inst", dominant_instances(50, seed=7), ids=lambda t: f"{t[0]}{t[1]}{t[2]}m{t[3]}")
def test_dominant_splits(inst):
    side, n, l, m, mp, charge = inst
    v = basis_l(mp, charge, n) if side == "l" else basis_n(mp, charge, l)
    assert boson(-m, v) == boson_split(-m, v, side)
    assert boson(m, v) == boson_split(m, v, side)
    for kind in ("Et", "Ht", "E", "H"):
        assert symmetric_op(kind, m, v) == symmetric_split(kind, m, v, side)


def test_non_dominant_counterexample_fails():
    v = basis_l((E, E), (0, 0), 2)
    assert not is_dominant((E, E), (0, 0), 4)
    assert boson(-2, v) != boson_split(-2, v, "l")


def test_symmetric_function_conventions():
    v = basis((2, 1), 0, 2, 2)
    assert symmetric_op("E", 0, v) == v
    assert symmetric_op("Et", -1, v) == FockVector.zero(2, 2, 0)
    assert symmetric_op("Et", 1, v) == boson(-1, v) == symmetric_op("Ht", 1, v)
    # Ẽ_2 = (B_{-1}^2 − B_{-2}) / 2 with integral output
    twice = boson(-1, boson(-1, v)) - boson(-2, v)
    assert symmetric_op("Et", 2, v) * 2 == twice
    assert symmetric_op("Ht", 2, v) * 2 == boson(-1, boson(-1, v)) + boson(-2, v)


# -- quantum-algebra actions --------------------------------------------------------


def test_f0_on_vacuum():
    v = f_op(0, basis_l((E, E), (0, 0), 2))
    assert l_expansion(v) == {(E, (1,)): ONE, ((1,), E): q}
    for i in range(2):
        assert not e_op(i, basis_l((E, E), (0, 0), 2))


def test_fdot_on_vacuum():
    # n-side vacuum with s_n = (1, 0, -1), l = 2: ḟ_j adds one cell to components with s_c ≡ j mod 2
    v0 = basis_n((E, E, E), (1, 0, -1), 2)
    for j in range(2):
        keys = {mp for (mp, _), c in fdot_op(j, v0).n_view().items()}
        comps = {c for c, s in enumerate((1, 0, -1)) if s % 2 == j}
        assert keys == {tuple((1,) if a == c else () for a in range(3)) for c in comps}


def test_dot_weight_example():
    lam = basis_l((E, E), (6, 5), 5)
    (key,) = lam.terms
    _, dwt = fock.weight(key, 11, 5, 2)
    assert dwt.fund == (4, 1) and dwt.delta == -1


def cartan(i: int, j: int, n: int) -> int:
    if n == 1:
        return 0
    if n == 2:
        return 2 if i == j else -2
    return 2 if i == j else (-1 if (i - j) % n in (1, n - 1) else 0)


@pytest.mark.parametrize("n,l", [(2, 2), (3, 2), (2, 3)])
def test_quantum_group_relations(n, l):
    qq = q - qi
    pp = p - pi
    for v in all_basis(n, l, 1, 3):
        for i in range(n):
            for j in range(n):
                comm = e_op(i, f_op(j, v)) - f_op(j, e_op(i, v))
                if i == j:
                    assert comm * qq == t_op(i, v) - t_op(i, v, -1)
                else:
                    assert not comm
                # f lowers the weight: t_i f_j t_i^-1 = q^-a_ij f_j, t_i e_j t_i^-1 = q^a_ij e_j
                assert t_op(i, f_op(j, t_op(i, v, -1))) == f_op(j, v) * q ** -cartan(i, j, n)
                assert t_op(i, e_op(j, t_op(i, v, -1))) == e_op(j, v) * q ** cartan(i, j, n)
        for i in range(l):
            comm = edot_op(i, fdot_op(i, v)) - fdot_op(i, edot_op(i, v))
            assert comm * pp == tdot_op(i, v) - tdot_op(i, v, -1)


@pytest.mark.parametrize("n,l", [(2, 2), (3, 2)])
def test_actions_commute(n, l):
    ups = [lambda v, i=i: f_op(i, v) for i in range(n)] + [lambda v, i=i: e_op(i, v) for i in range(n)]
    dots = [lambda v, j=j: fdot_op(j, v) for j in range(l)] + [lambda v, j=j: edot_op(j, v) for j in range(l)]
    bos = [lambda v, m=m: boson(m, v) for m in (-2, -1, 1, 2)]
    for v in all_basis(n, l, 0, 3):
        for a in ups:
            for b in dots + bos:
                assert a(b(v)) == b(a(v))
        for a in dots:
            for b in bos:
                assert a(b(v)) == b(a(v))


# -- involution suite ---------------------------------------------------------------


@pytest.mark.parametrize("n,l", [(2, 2), (3, 2)])
def test_bar_identities(n, l):
    rng = random.Random(31 * n + l)
    for s in (0, 1):
        for k in range(4):
            u = random_vector(rng, n, l, s, k)
            bu = bar(u)
            assert bar(bu) == u
            assert set(bu.terms) <= {lam for lam in partitions(k)}
            for i in range(n):
                assert bar(f_op(i, u)) == f_op(i, bu)
                assert bar(e_op(i, u)) == e_op(i, bu)
            for j in range(l):
                assert bar(fdot_op(j, u)) == fdot_op(j, bu)
                assert bar(edot_op(j, u)) == edot_op(j, bu)
            for m in (1, 2):
                assert bar(boson(-m, u)) == boson(-m, bu)
                assert bar(boson(m, u)) == boson(m, bu) * q ** (2 * m * (n - l))


def test_bar_on_vacuum():
    v = basis_l((E, E), (3, -1), 2)
    assert bar(v) == v


def test_bar_preserves_weight_blocks():
    n, l = 3, 2
    for lam in partitions(4):
        wts = {fock.weight(k, 0, n, l) for k in bar(basis(lam, 0, n, l)).terms}
        assert wts == {fock.weight(lam, 0, n, l)}


@pytest.mark.parametrize("n,l", [(2, 2), (3, 2)])
def test_adjointness(n, l):
    rng = random.Random(97 * n + l)
    for k in range(3):
        u = random_vector(rng, n, l, 0, k)
        v1 = random_vector(rng, n, l, 0, k + 1)
        for i in range(n):
            assert scalar(e_op(i, v1), u) == scalar(v1, t_op(i, f_op(i, u), -1) * qi)
            assert scalar(f_op(i, u), v1) == scalar(u, t_op(i, e_op(i, v1)) * qi)
        for m in (1, 2):
            w = random_vector(rng, n, l, 0, k + n * l * m)
            assert scalar(boson(-m, u), w) == scalar(u, boson(m, w))


def test_scalar_basics():
    a, b = basis((2,), 0, 2, 2), basis((1, 1), 0, 2, 2)
    assert scalar(a, a) == ONE and scalar(a, b) == ZERO
    with pytest.raises(ValueError):
        scalar(a, basis((2,), 1, 2, 2))


@pytest.mark.parametrize("n,l", [(2, 2), (3, 2)])
def test_symmetry_and_prime(n, l):
    rng = random.Random(53 * n + l)
    assert prime(basis((), 0, n, l)) == basis((), 0, n, l)
    for k in range(4):
        for s in (0, 1):
            u = random_vector(rng, n, l, s, k)
            v = random_vector(rng, n, l, s, k)
            assert prime(prime(u)) == u
            assert scalar(bar(u), v) == scalar(prime(u), bar(prime(v)))


@pytest.mark.parametrize("n,l", [(2, 2), (3, 2)])
def test_prime_intertwiners(n, l):
    rng = random.Random(71 * n + l)
    for k in range(3):
        u = random_vector(rng, n, l, 0, k)
        up = prime(u)
        for i in range(n):
            mi = (-i) % n
            assert prime(e_op(i, u)) == t_op(mi, e_op(mi, up)) * qi
            assert prime(f_op(i, u)) == t_op(mi, f_op(mi, up), -1) * qi
        for j in range(l):
            mj = (-j) % l
            assert prime(edot_op(j, u)) == tdot_op(mj, edot_op(mj, up)) * pi
            assert prime(fdot_op(j, u)) == tdot_op(mj, fdot_op(mj, up), -1) * pi
        for m in (1, 2):
            factor = (-q) ** (m * (n - 1)) * (-p) ** (m * (l - 1))
            assert prime(symmetric_op("Et", m, u)) == symmetric_op("Ht", m, up) * factor
            assert prime(symmetric_op("E", m, u)) == symmetric_op("H", m, up) * factor
