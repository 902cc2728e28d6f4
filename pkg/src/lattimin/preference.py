"""Weak orders on lattice elements and the three preference axioms.

Rank encoding: lower rank = more preferred, so the impossible description
(bottom) sits at rank 0 whenever Axiom 1 holds.  Completeness and
transitivity hold by construction of the encoding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AxiomsNotSatisfied, NotAnIdeal
from .lattice import Lattice
from .spectrum import classify_subset


@dataclass(frozen=True)
class WeakOrder:
    """Complete transitive relation encoded as a rank per element."""

    ranks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))

    @property
    def n(self) -> int:
        return len(self.ranks)

    def weakly_prefers(self, a: int, b: int) -> bool:
        return self.ranks[a] <= self.ranks[b]

    def strictly_prefers(self, a: int, b: int) -> bool:
        return self.ranks[a] < self.ranks[b]

    def indifferent(self, a: int, b: int) -> bool:
        return self.ranks[a] == self.ranks[b]

    @staticmethod
    def dense(values) -> "WeakOrder":
        """Relabel arbitrary comparable scores to dense ranks 0..m-1."""
        values = list(values)
        order = {v: i for i, v in enumerate(sorted(set(values)))}
        return WeakOrder(tuple(order[v] for v in values))


def _domain_mask(L: Lattice, domain) -> np.ndarray:
    if domain is None:
        return np.ones(L.n, dtype=bool)
    mask = np.zeros(L.n, dtype=bool)
    for a in domain:
        mask[a] = True
    return mask


def check_axiom1(L: Lattice, W: WeakOrder, domain=None) -> list:
    """Violating pairs (a, b) with a <= b in the lattice but a not >= b in W."""
    r = np.asarray(W.ranks)
    dom = _domain_mask(L, domain)
    bad = L.leq_table & (r[:, None] > r[None, :]) & dom[:, None] & dom[None, :]
    return [tuple(int(v) for v in w) for w in np.argwhere(bad)]


def check_axiom2(L: Lattice, W: WeakOrder, domain=None) -> list:
    """Violating triples (a, a', b): a > b and a' > b but (a | a') not > b."""
    r = np.asarray(W.ranks)
    dom = _domain_mask(L, domain)
    strict = r[:, None] < r[None, :]
    rj = r[L.join]
    bad = (
        strict[:, None, :]
        & strict[None, :, :]
        & (rj[:, :, None] >= r[None, None, :])
        & dom[:, None, None]
        & dom[None, :, None]
        & dom[None, None, :]
    )
    return [tuple(int(v) for v in w) for w in np.argwhere(bad)]


def trivializer_set(L: Lattice, W: WeakOrder, a: int) -> frozenset:
    """{b : a & b ~ bottom}, the set of descriptions trivializing a."""
    r0 = W.ranks[L.bottom]
    return frozenset(b for b in range(L.n) if W.ranks[int(L.meet[a, b])] == r0)


def check_axiom3(L: Lattice, W: WeakOrder) -> list:
    """Violating pairs (a, a') with identical trivializer sets but a !~ a'."""
    keys = [trivializer_set(L, W, a) for a in range(L.n)]
    out = []
    for a in range(L.n):
        for a2 in range(a + 1, L.n):
            if keys[a] == keys[a2] and not W.indifferent(a, a2):
                out.append((a, a2))
    return out


def axioms12_hold(L: Lattice, W: WeakOrder, domain=None) -> bool:
    return not check_axiom1(L, W, domain) and not check_axiom2(L, W, domain)


@dataclass(frozen=True)
class ContourReport:
    members: frozenset
    is_ideal: bool
    proper: bool


def strict_upper_contour(
    L: Lattice, W: WeakOrder, a: int, assert_axioms: bool = False
) -> ContourReport:
    """{c : c > a} together with bottom, flagged for proper-ideal-hood."""
    if assert_axioms and not axioms12_hold(L, W):
        raise AxiomsNotSatisfied("Axioms 1-2 asserted but refuted by scan")
    members = frozenset(
        c for c in range(L.n) if W.strictly_prefers(c, a)
    ) | {L.bottom}
    cls = classify_subset(L, members)
    return ContourReport(members, cls.is_ideal, len(members) < L.n)


@dataclass(frozen=True)
class ZeroClassReport:
    members: frozenset
    maximum: int
    proper: bool


def zero_class(L: Lattice, W: WeakOrder) -> ZeroClassReport:
    """The ideal I = {a : a ~ bottom}; NotAnIdeal with a witness if the
    axioms fail and I is not actually an ideal."""
    members = frozenset(a for a in range(L.n) if W.indifferent(a, L.bottom))
    cls = classify_subset(L, members)
    if not cls.is_ideal:
        witness = None
        for a in sorted(members):
            for b in range(L.n):
                if L.leq(b, a) and b not in members:
                    witness = (a, b, "down-closure")
                    break
                if b in members and int(L.join[a, b]) not in members:
                    witness = (a, b, "join-closure")
                    break
            if witness:
                break
        raise NotAnIdeal("indifference-to-bottom class is not an ideal", witness)
    maximum = L.bottom
    for a in members:
        maximum = int(L.join[maximum, a])
    return ZeroClassReport(members, maximum, len(members) < L.n)
