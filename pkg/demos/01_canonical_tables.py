"""Transition matrices of G+ and G- for a level-2 Fock space of ŝl_2.

Each weight block of size-k multipartitions gets its own unitriangular
matrix.  Rows marked * lie in the crystal of the highest-weight module
generated by the vacuum.  The last part checks the inversion formula,
which relates G+ at charge s to G- at the conjugate charge.
"""
from __future__ import annotations

from qfock import canonical_basis, dual_basis, verify_inversion
from qfock.cli import format_block

N, L, CHARGE = 2, 2, (0, 0)

for k in range(1, 4):
    print(f"--- size {k}")
    for block in canonical_basis(N, L, CHARGE, k, "plus"):
        print(format_block(block, "q"))
        print()

# G- entries read more naturally in p = -q^-1
print("--- G- at size 3, in p")
for block in canonical_basis(N, L, CHARGE, 3, "minus"):
    print(format_block(block, "p"))
    print()

# the dual basis (transposed inverse) of the largest block at size 4
big = max(canonical_basis(N, L, CHARGE, 4, "plus"), key=lambda b: b.size)
print("--- dual basis of the", big.size, "row block at size 4")
print(format_block(dual_basis(big), "q"))
print()

for k in range(5):
    rep = verify_inversion(N, L, CHARGE, k)
    print(f"inversion k={k}: {'ok' if rep.ok else 'FAILED'}")
