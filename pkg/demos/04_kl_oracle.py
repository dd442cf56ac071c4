"""Cross-checking the Fock-space computation against Kazhdan-Lusztig theory.

The oracle builds the parabolic module of the affine Hecke algebra
directly, computes its bar-invariant basis C+ by descent recursion, and
compares the coefficients with the Fock-space transition matrices on
truncated wedges.
"""
from __future__ import annotations

from qfock import crosscheck_KL, kl_module_basis

# a 2x2 example: the basis vector indexed by (2,1) in the module induced from the trivial rep
for key, c in sorted(kl_module_basis((2, 1), 2, "minus").items()):
    print(f"  {c}  {key}")
print()

for n, l, charge, k, r in [(2, 2, (0, 0), 2, 4), (2, 2, (0, 0), 3, 5), (3, 2, (1, -1), 3, 5)]:
    rep = crosscheck_KL(n, l, charge, k, r)
    print(f"n={n} l={l} s={charge} k={k} r={r}: {'ok' if rep.ok else 'MISMATCH'}  ({rep.message})")
