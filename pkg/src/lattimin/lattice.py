"""Finite bounded distributive lattices given by explicit meet/join tables.

Elements are dense integer indices 0..n-1; labels are display metadata only.
The canonical order is ``a <= b`` iff ``meet[a][b] == a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .errors import LawViolation, NotALattice, PosetCyclic, TooLarge


def _freeze(table) -> np.ndarray:
    arr = np.ascontiguousarray(table, dtype=np.intp)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class LawIssue:
    """One violated lattice law with its lexicographically minimal witness."""

    law: str
    witness: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Poset:
    """Finite poset given by cover pairs (lower, upper)."""

    n: int
    covers: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "covers", tuple((int(a), int(b)) for a, b in self.covers)
        )
        for a, b in self.covers:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"cover ({a},{b}) out of range for n={self.n}")
            if a == b:
                raise PosetCyclic(f"self-cover on element {a}")
        self.leq  # force cycle detection at construction time

    @cached_property
    def leq(self) -> np.ndarray:
        """Reflexive-transitive closure of the cover relation (bool matrix)."""
        rel = np.eye(self.n, dtype=bool)
        for a, b in self.covers:
            rel[a, b] = True
        for _ in range(self.n):
            new = rel | (rel @ rel)
            if np.array_equal(new, rel):
                break
            rel = new
        strict_cycle = rel & rel.T & ~np.eye(self.n, dtype=bool)
        if strict_cycle.any():
            a, b = map(int, np.argwhere(strict_cycle)[0])
            raise PosetCyclic(f"elements {a} and {b} lie on a cycle")
        return rel

    def downset_masks(self) -> list[int]:
        """All down-closed subsets as bitmasks, sorted by (size, mask)."""
        if self.n > 16:
            raise TooLarge(f"down-set enumeration capped at 16 elements, got {self.n}")
        down = [0] * self.n
        for i in range(self.n):
            for j in range(self.n):
                if self.leq[j, i]:
                    down[i] |= 1 << j
        masks = []
        for mask in range(1 << self.n):
            closed = True
            for i in range(self.n):
                if mask >> i & 1 and down[i] & mask != down[i]:
                    closed = False
                    break
            if closed:
                masks.append(mask)
        masks.sort(key=lambda m: (bin(m).count("1"), m))
        return masks


@dataclass(frozen=True, eq=False)
class Lattice:
    """Bounded lattice over indices 0..n-1 with explicit operation tables.

    Construction performs shape/range sanity checks only; use
    :func:`build_lattice` to get a law-validated instance.  Values are
    immutable after construction, so concurrent reads are safe.
    """

    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "meet", _freeze(self.meet))
        object.__setattr__(self, "join", _freeze(self.join))
        object.__setattr__(self, "bottom", int(self.bottom))
        object.__setattr__(self, "top", int(self.top))
        n = self.meet.shape[0]
        if self.meet.shape != (n, n) or self.join.shape != (n, n):
            raise ValueError("meet and join must be square tables of equal size")
        for name, t in (("meet", self.meet), ("join", self.join)):
            if t.size and (int(t.min()) < 0 or int(t.max()) >= n):
                raise ValueError(f"{name} table entries out of range 0..{n - 1}")
        if not (0 <= self.bottom < n and 0 <= self.top < n):
            raise ValueError("bottom/top out of range")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != n:
                raise ValueError("labels length must equal element count")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.meet.shape[0]

    @cached_property
    def leq_table(self) -> np.ndarray:
        return self.meet == np.arange(self.n)[:, None]

    def leq(self, a: int, b: int) -> bool:
        """a <= b in the canonical order, i.e. a == a meet b."""
        return bool(self.meet[a, b] == a)

    def upset(self, a: int) -> frozenset:
        return frozenset(int(x) for x in np.flatnonzero(self.leq_table[a]))

    def downset(self, a: int) -> frozenset:
        return frozenset(int(x) for x in np.flatnonzero(self.leq_table[:, a]))

    def elements(self) -> range:
        return range(self.n)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)


def validate_laws(L: Lattice) -> list[LawIssue]:
    """Scan all pairs/triples for lattice-law violations.

    Empty result iff L is a bounded distributive lattice.  Violations are
    data, not errors; each carries the lexicographically first witness.
    """
    M, J = L.meet, L.join
    n = L.n
    idx = np.arange(n)
    issues: list[LawIssue] = []

    def record(law, bad):
        where = np.argwhere(bad)
        if where.size:
            issues.append(LawIssue(law, tuple(int(v) for v in where[0])))

    record("meet-commutativity", M != M.T)
    record("join-commutativity", J != J.T)
    # T[T][a,b,c] == T[T[a,b],c];  T[:, T][a,b,c] == T[a, T[b,c]]
    record("meet-associativity", M[M] != M[:, M])
    record("join-associativity", J[J] != J[:, J])
    record("join-absorption", J[idx[:, None], M] != idx[:, None])
    record("meet-absorption", M[idx[:, None], J] != idx[:, None])
    record("meet-over-join-distributivity", M[:, J] != J[M[:, :, None], M[:, None, :]])
    record("join-over-meet-distributivity", J[:, M] != M[J[:, :, None], J[:, None, :]])
    record("bottom-bound", M[L.bottom] != L.bottom)
    record("top-bound", J[L.top] != L.top)
    return issues


def build_lattice(meet_table, join_table, bottom, top, labels=None) -> Lattice:
    """Construct and fully validate a bounded distributive lattice.

    Raises LawViolation naming the first broken law and its witness.
    """
    L = Lattice(meet_table, join_table, bottom, top, labels)
    issues = validate_laws(L)
    if issues:
        raise LawViolation(issues[0].law, issues[0].witness, issues)
    return L


def leq(L: Lattice, a: int, b: int) -> bool:
    return L.leq(a, b)


def lattice_from_order(order, labels=None, validate=True) -> Lattice:
    """Compute meet/join tables from a <=-matrix; NotALattice if some pair
    lacks a unique greatest lower / least upper bound."""
    rel = np.asarray(order, dtype=bool)
    n = rel.shape[0]
    if rel.shape != (n, n):
        raise ValueError("order matrix must be square")
    if not rel.diagonal().all():
        raise NotALattice("order is not reflexive")
    if (rel & rel.T & ~np.eye(n, dtype=bool)).any():
        raise NotALattice("order is not antisymmetric")
    meet = np.zeros((n, n), dtype=np.intp)
    join = np.zeros((n, n), dtype=np.intp)
    for a in range(n):
        for b in range(n):
            lower = np.flatnonzero(rel[:, a] & rel[:, b])
            glb = [int(g) for g in lower if all(rel[x, g] for x in lower)]
            upper = np.flatnonzero(rel[a] & rel[b])
            lub = [int(u) for u in upper if all(rel[u, x] for x in upper)]
            if len(glb) != 1:
                raise NotALattice(f"pair ({a},{b}) lacks a greatest lower bound")
            if len(lub) != 1:
                raise NotALattice(f"pair ({a},{b}) lacks a least upper bound")
            meet[a, b] = glb[0]
            join[a, b] = lub[0]
    bottoms = [a for a in range(n) if rel[a].all()]
    tops = [a for a in range(n) if rel[:, a].all()]
    if len(bottoms) != 1 or len(tops) != 1:
        raise NotALattice("order lacks global bounds")
    if validate:
        return build_lattice(meet, join, bottoms[0], tops[0], labels)
    return Lattice(meet, join, bottoms[0], tops[0], labels)


def lattice_from_poset(P: Poset, labels=None) -> Lattice:
    """Hasse-diagram converter: poset elements become lattice elements."""
    return lattice_from_order(P.leq, labels=labels)


def downset_lattice(P: Poset) -> Lattice:
    """Lattice of down-closed subsets of P, ordered by inclusion.

    Meet is intersection and join is union, so the result is distributive by
    construction (and is re-validated anyway).
    """
    masks = P.downset_masks()
    index = {m: i for i, m in enumerate(masks)}
    k = len(masks)
    meet = [[index[masks[i] & masks[j]] for j in range(k)] for i in range(k)]
    join = [[index[masks[i] | masks[j]] for j in range(k)] for i in range(k)]
    labels = tuple(
        "{" + ",".join(str(e) for e in range(P.n) if m >> e & 1) + "}" for m in masks
    )
    return build_lattice(meet, join, 0, k - 1, labels)


def relative_complements(L: Lattice, a: int, a_prime: int) -> tuple[int, ...]:
    """All c with a | c == a | a' and a & c == bottom, ascending by index."""
    target = int(L.join[a, a_prime])
    return tuple(
        c
        for c in range(L.n)
        if int(L.join[a, c]) == target and int(L.meet[a, c]) == L.bottom
    )


def relative_complement(L: Lattice, a: int, a_prime: int) -> Optional[int]:
    """The <=-least relative complement of a with respect to a', or None.

    The witness set is meet-closed in a distributive lattice, so the fold-meet
    of all witnesses is itself the least witness.
    """
    cands = relative_complements(L, a, a_prime)
    if not cands:
        return None
    least = cands[0]
    for c in cands[1:]:
        least = int(L.meet[least, c])
    if least not in cands:  # only reachable on non-distributive input
        raise NotALattice("relative complements are not meet-closed")
    return least


def is_boolean(L: Lattice) -> bool:
    """True iff every element has a (global) complement."""
    return all(
        any(
            int(L.meet[a, c]) == L.bottom and int(L.join[a, c]) == L.top
            for c in range(L.n)
        )
        for a in range(L.n)
    )


@dataclass(frozen=True, eq=False)
class LatticeHom:
    """A map between lattices, candidate for being a bounded-lattice hom."""

    source: Lattice
    target: Lattice
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(x) for x in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if len(mapping) != self.source.n:
            raise ValueError("mapping must be total on the source")
        if any(not 0 <= x < self.target.n for x in mapping):
            raise ValueError("mapping image out of range")

    def __call__(self, a: int) -> int:
        return self.mapping[a]


def check_hom(h: LatticeHom) -> bool:
    """True iff h preserves bottom, top, and all meets and joins."""
    m = np.asarray(h.mapping, dtype=np.intp)
    s, t = h.source, h.target
    if m[s.bottom] != t.bottom or m[s.top] != t.top:
        return False
    if not np.array_equal(t.meet[m[:, None], m[None, :]], m[s.meet]):
        return False
    return bool(np.array_equal(t.join[m[:, None], m[None, :]], m[s.join]))


def compose(outer: LatticeHom, inner: LatticeHom) -> LatticeHom:
    if inner.target is not outer.source and inner.target.n != outer.source.n:
        raise ValueError("homs do not compose")
    return LatticeHom(
        inner.source, outer.target, tuple(outer.mapping[x] for x in inner.mapping)
    )


def kernel_classes(h: LatticeHom) -> tuple[int, ...]:
    """Partition of the source by equal image, class ids ordered by least
    representative."""
    ids: dict[int, int] = {}
    out = []
    for a in range(h.source.n):
        key = h.mapping[a]
        if key not in ids:
            ids[key] = len(ids)
        out.append(ids[key])
    return tuple(out)
