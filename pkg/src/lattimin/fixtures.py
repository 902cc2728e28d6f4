"""Small named lattices and orders used throughout the test suite."""

from __future__ import annotations

import numpy as np

from .lattice import Lattice, Poset, build_lattice, downset_lattice, lattice_from_order
from .preference import WeakOrder


def chain(k: int, labels=None) -> Lattice:
    """Totally ordered lattice on k elements: meet=min, join=max."""
    meet = [[min(i, j) for j in range(k)] for i in range(k)]
    join = [[max(i, j) for j in range(k)] for i in range(k)]
    return build_lattice(meet, join, 0, k - 1, labels)


CHAIN2 = chain(2, ("0", "1"))
CHAIN3 = chain(3, ("0", "1/2", "1"))

# Boolean algebras with 1..3 atoms, via down-sets of antichains.
B1 = downset_lattice(Poset(1))
B2 = downset_lattice(Poset(2))
B3 = downset_lattice(Poset(3))

# B2 element indices, for readability in tests.
B2_BOT, B2_A, B2_B, B2_TOP = 0, 1, 2, 3


def _order_matrix(n, strict_pairs):
    rel = np.eye(n, dtype=bool)
    for a, b in strict_pairs:
        rel[a, b] = True
    for _ in range(n):
        rel = rel | (rel @ rel)
    return rel


# Three-atom diamond: modular but not distributive.  0 < a,b,c < 1.
M3 = lattice_from_order(
    _order_matrix(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]),
    labels=("0", "a", "b", "c", "1"),
    validate=False,
)

# Pentagon: not modular.  0 < a < c < 1 and 0 < b < 1.
N5 = lattice_from_order(
    _order_matrix(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]),
    labels=("0", "a", "c", "b", "1"),
    validate=False,
)

# Weak order on CHAIN3: 0 most preferred, then 1/2, then 1.
W3 = WeakOrder((0, 1, 2))
