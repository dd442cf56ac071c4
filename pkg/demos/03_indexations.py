"""Three ways to label the same wedge: l-pairs, n-pairs and sigma.

A charged partition |λ, s> of the semi-infinite wedge space can be read as
an l-multipartition (through the nl-abacus grouped by d) or as an
n-multipartition (grouped by residue class c).  sigma swaps the two roles.
"""
from __future__ import annotations

from qfock import partitions, sigma_s, to_l_pair, to_n_pair
from qfock.combinatorics import format_multipartition, format_partition

N, L, S = 3, 2, 0

print(f"{'λ':<12} {'σ(λ)':<14} {'λ_l':<16} {'s_l':<9} {'λ_n':<16} s_n")
for lam in partitions(7):
    lam_l, s_l = to_l_pair(lam, S, N, L)
    lam_n, s_n = to_n_pair(lam, S, N, L)
    print(
        f"{format_partition(lam):<12} {format_partition(sigma_s(lam, S, N, L)):<14} "
        f"{format_multipartition(lam_l):<16} {str(s_l):<9} {format_multipartition(lam_n):<16} {s_n}"
    )
