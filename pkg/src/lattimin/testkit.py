"""Deterministic generators and exhaustive enumerators for oracle tests.

Everything is a pure function of (parameters, seed); identical seeds
reproduce identical outputs bit for bit.
"""

from __future__ import annotations

import itertools
import random

from .errors import TooLarge
from .lattice import Lattice, Poset, downset_lattice
from .preference import WeakOrder
from .representation import Representation, derive_pref_from_rep
from .spectrum import enumerate_prime_filters

EDGE_PROB = 0.4  # mixes chains and antichains well at size <= 6


def random_poset(size: int, rng: random.Random, edge_prob: float = EDGE_PROB) -> Poset:
    """Random poset via upper-triangular edge inclusion + transitive closure."""
    rel = [[False] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            rel[i][j] = rng.random() < edge_prob
    for k in range(size):
        for i in range(size):
            if rel[i][k]:
                for j in range(size):
                    if rel[k][j]:
                        rel[i][j] = True
    covers = [
        (i, j)
        for i in range(size)
        for j in range(i + 1, size)
        if rel[i][j] and not any(rel[i][k] and rel[k][j] for k in range(size))
    ]
    return Poset(size, tuple(covers))


def random_distributive_lattice(max_poset_size: int, seed: int) -> Lattice:
    """Down-set lattice of a random poset; distributive by construction."""
    if max_poset_size > 6:
        raise TooLarge("random lattice generation capped at poset size 6")
    rng = random.Random(seed)
    size = rng.randint(1, max_poset_size)
    return downset_lattice(random_poset(size, rng))


def _dense_ranks(values):
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return tuple(order[v] for v in values)


def enumerate_weak_orders(k: int):
    """All rank vectors over k items up to rank relabeling (ordered Bell
    count many).  Capped at k <= 5 (541 orders)."""
    if k > 5:
        raise TooLarge(f"weak-order enumeration capped at 5 items, got {k}")
    if k == 0:
        yield ()
        return
    seen = set()
    for ranks in itertools.product(range(k), repeat=k):
        dense = _dense_ranks(ranks)
        if dense not in seen:
            seen.add(dense)
            yield dense


def random_weak_order(k: int, rng: random.Random) -> tuple[int, ...]:
    """Uniform-ish dense rank vector over k items."""
    if k == 0:
        return ()
    return _dense_ranks(tuple(rng.randrange(k) for _ in range(k)))


def random_representation(L: Lattice, seed: int) -> Representation:
    """Random non-empty subset of L's prime filters, sigma restricted to it,
    random rank function on the chosen outcomes."""
    rng = random.Random(seed)
    S = enumerate_prime_filters(L)
    p = len(S.points)
    if p == 0:  # one-element lattice
        return Representation(0, (frozenset(),) * L.n, ())
    chosen = [i for i in range(p) if rng.random() < 0.5]
    if not chosen:
        chosen = [rng.randrange(p)]
    reindex = {old: new for new, old in enumerate(chosen)}
    sigma_map = tuple(
        frozenset(reindex[i] for i in S.sigma(a) if i in reindex) for a in range(L.n)
    )
    ranks = random_weak_order(len(chosen), rng)
    return Representation(len(chosen), sigma_map, ranks)


def derived_weak_order(L: Lattice, seed: int) -> WeakOrder:
    """Axiom-1/2-satisfying weak order obtained from a random representation."""
    return derive_pref_from_rep(random_representation(L, seed))


def duplicate_outcome(R: Representation, outcome: int) -> Representation:
    """Alternative representation with one outcome duplicated; preserves the
    induced preference, so it must factor through the minimal one."""
    new = R.outcome_count
    sigma_map = tuple(
        s | {new} if outcome in s else s for s in R.sigma_map
    )
    return Representation(new + 1, sigma_map, R.outcome_ranks + (R.outcome_ranks[outcome],))


def all_posets(size: int):
    """Every labeled strict partial order on `size` elements, as Posets."""
    pairs = [(i, j) for i in range(size) for j in range(size) if i != j]
    for bits in itertools.product((False, True), repeat=len(pairs)):
        rel = {p for p, b in zip(pairs, bits) if b}
        if any((j, i) in rel for i, j in rel):
            continue
        if any(
            (i, k) in rel and (k, j) in rel and (i, j) not in rel
            for i in range(size)
            for j in range(size)
            for k in range(size)
            if i != j and i != k and j != k
        ):
            continue
        covers = [
            (i, j)
            for i, j in rel
            if not any((i, k) in rel and (k, j) in rel for k in range(size))
        ]
        yield Poset(size, tuple(covers))
