import numpy as np


def same_tables(L1, L2):
    """Equality of lattices as labeled structures (labels ignored)."""
    return (
        L1.n == L2.n
        and L1.bottom == L2.bottom
        and L1.top == L2.top
        and np.array_equal(L1.meet, L2.meet)
        and np.array_equal(L1.join, L2.join)
    )
