"""Good nodes and the crystal graph of the vacuum module.

For each residue i the addable (A) and removable (R) i-nodes are listed in
increasing order; adjacent RA pairs cancel.  The surviving boundary A is
the good addable node, which is where the crystal operator adds a box.
"""
from __future__ import annotations

from qfock import crystal_component, good_nodes
from qfock.combinatorics import addable_removable, format_multipartition

MP = ((5, 3, 3, 1), (3, 2), (4, 3, 1), (2, 2, 2, 1))
CHARGE = (5, 0, 2, 1)

word = addable_removable(MP, CHARGE, 3, 0)
print("0-word:", " ".join(f"{t}{node.comp}" for node, t in word))
add, rem = good_nodes(MP, CHARGE, 3, 0)
print("good addable:", add, "  good removable:", rem)
print()

members, arrows = crystal_component(2, 2, (0, 0), 3)
for mp in sorted(members, key=lambda m: (sum(map(sum, m)), m)):
    print(sum(map(sum, mp)), format_multipartition(mp))
print(len(arrows), "arrows")
