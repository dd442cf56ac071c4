"""Canonical bases of higher-level q-deformed Fock spaces.

Exact Laurent-polynomial arithmetic, semi-infinite wedges and their
straightening, the level-l Fock space with its quantum-algebra, boson and bar
actions, the transition matrices of the canonical bases G±, crystal graphs,
and an independent parabolic Kazhdan-Lusztig oracle used for cross-checking.
"""
from __future__ import annotations

from .algebra import ONE, ZERO, LaurentPoly, split_negative, split_positive
from .canonical import (
    TransitionBlock,
    canonical_basis,
    dual_basis,
    verify_inversion,
)
from .combinatorics import conjugate, conjugate_mp, dominance_leq, multipartitions, partition, partitions
from .crystal import crystal_component, e_tilde, f_tilde, good_nodes
from .fock import FockVector, bar, basis, basis_l, basis_n, boson, gamma_m, prime, scalar
from .hecke_oracle import crosscheck_KL, kl_module_basis
from .indexing import from_l_pair, from_n_pair, sigma_s, to_l_pair, to_n_pair
from .wedge import straighten

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "split_positive",
    "split_negative",
    "partition",
    "partitions",
    "multipartitions",
    "conjugate",
    "conjugate_mp",
    "dominance_leq",
    "to_l_pair",
    "from_l_pair",
    "to_n_pair",
    "from_n_pair",
    "sigma_s",
    "straighten",
    "FockVector",
    "basis",
    "basis_l",
    "basis_n",
    "bar",
    "boson",
    "gamma_m",
    "scalar",
    "prime",
    "TransitionBlock",
    "canonical_basis",
    "dual_basis",
    "verify_inversion",
    "good_nodes",
    "f_tilde",
    "e_tilde",
    "crystal_component",
    "kl_module_basis",
    "crosscheck_KL",
]
