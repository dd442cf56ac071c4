"""Boson operators, their Heisenberg relations and dominance splittings.

B_m acts on semi-infinite wedges by shifting indices by nl*m.  Here it is
applied to vacuum vectors and expanded in the level-l basis.  When the
charge gaps are large enough (dominance), B_{-m} splits into a sum over the
components, each acting as a level-one boson.
"""
from __future__ import annotations

from qfock import basis, basis_l, boson, gamma_m
from qfock.fock import boson_split, is_dominant

E = ()

print("B_-2 on the level-one vacuum, n=2:")
print(boson(-2, basis((), 0, 2, 1)).format(labels="l"))
print()

for charge in ((2, -2), (0, 0)):
    v = basis_l((E, E), charge, 2)
    dom = is_dominant((E, E), charge, 4)
    split_ok = boson(-2, v) == boson_split(-2, v, "l")
    print(f"B_-2 |(∅,∅), {charge}>   4-dominant={dom}   split holds={split_ok}")
    print(boson(-2, v).format(labels="l"))
    print()

# the Heisenberg constant [B_m, B_-m] on the vacuum
for n, l in ((1, 1), (2, 2), (3, 2)):
    vac = basis((), 0, n, l)
    for m in (1, 2):
        comm = boson(m, boson(-m, vac)) - boson(-m, boson(m, vac))
        assert comm == vac * gamma_m(m, n, l)
        print(f"n={n} l={l} m={m}: gamma = {gamma_m(m, n, l)}")
