"""Filters, ideals, prime-filter spectra, and the finite spectral topology."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import TooLarge
from .lattice import Lattice


def point_mask(points) -> int:
    """Canonical bitmask key for a set of indices (bit i = index i)."""
    m = 0
    for i in points:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class SubsetClassification:
    is_filter: bool
    proper_filter: bool
    prime_filter: bool
    is_ideal: bool
    proper_ideal: bool
    prime_ideal: bool


def classify_subset(L: Lattice, S) -> SubsetClassification:
    """Full filter/ideal classification flags for a subset of elements."""
    S = frozenset(int(x) for x in S)
    members = sorted(S)
    nonempty = bool(S)
    proper = len(S) < L.n

    up_closed = all(b in S for a in members for b in range(L.n) if L.leq(a, b))
    meet_closed = all(int(L.meet[a, b]) in S for a in members for b in members)
    is_filter = nonempty and up_closed and meet_closed
    proper_filter = is_filter and proper
    prime_filter = proper_filter and all(
        a in S or b in S
        for a in range(L.n)
        for b in range(L.n)
        if int(L.join[a, b]) in S
    )

    down_closed = all(b in S for a in members for b in range(L.n) if L.leq(b, a))
    join_closed = all(int(L.join[a, b]) in S for a in members for b in members)
    is_ideal = nonempty and down_closed and join_closed
    proper_ideal = is_ideal and proper
    prime_ideal = proper_ideal and all(
        a in S or b in S
        for a in range(L.n)
        for b in range(L.n)
        if int(L.meet[a, b]) in S
    )
    return SubsetClassification(
        is_filter, proper_filter, prime_filter, is_ideal, proper_ideal, prime_ideal
    )


@dataclass(frozen=True, eq=False)
class SpectralSpace:
    """Prime filters of a lattice plus the map sigma, in canonical order."""

    lattice: Lattice
    points: tuple  # of frozenset[int] (lattice element indices)

    @cached_property
    def sigma_table(self) -> tuple:
        return tuple(
            frozenset(i for i, F in enumerate(self.points) if a in F)
            for a in range(self.lattice.n)
        )

    def sigma(self, a: int) -> frozenset:
        """The set of points (prime-filter indices) whose filter contains a."""
        return self.sigma_table[a]

    @cached_property
    def basis(self) -> tuple:
        """Distinct sigma-images, the base of the finite spectral topology."""
        return tuple(sorted(set(self.sigma_table), key=lambda s: (len(s), point_mask(s))))


def enumerate_prime_filters(L: Lattice) -> SpectralSpace:
    """All prime filters, sorted by bitset value for determinism.

    Every filter of a finite lattice is the up-set of its minimum, so it
    suffices to classify principal up-sets.
    """
    pts = []
    for m in range(L.n):
        F = L.upset(m)
        if classify_subset(L, F).prime_filter:
            pts.append(F)
    pts.sort(key=point_mask)
    return SpectralSpace(L, tuple(pts))


def prime_filters_bruteforce(L: Lattice) -> list:
    """Independent oracle: scan all 2^n subsets.  Capped at n <= 20."""
    if L.n > 20:
        raise TooLarge(f"brute-force filter scan capped at 20 elements, got {L.n}")
    out = []
    for mask in range(1, 1 << L.n):
        S = frozenset(i for i in range(L.n) if mask >> i & 1)
        if classify_subset(L, S).prime_filter:
            out.append(S)
    out.sort(key=point_mask)
    return out


def join_irreducibles(L: Lattice) -> frozenset:
    """Non-bottom elements j with j == x | y implying j in {x, y}."""
    out = set()
    for j in range(L.n):
        if j == L.bottom:
            continue
        if all(
            x == j or y == j
            for x in range(L.n)
            for y in range(L.n)
            if int(L.join[x, y]) == j
        ):
            out.add(j)
    return frozenset(out)


def sigma(S: SpectralSpace, a: int) -> frozenset:
    return S.sigma(a)


def check_sigma_isomorphism(S: SpectralSpace) -> bool:
    """True iff sigma is injective and sends meet/join/bounds to
    intersection/union/empty/full."""
    L = S.lattice
    st = S.sigma_table
    if len(set(st)) != L.n:
        return False
    full = frozenset(range(len(S.points)))
    if st[L.bottom] != frozenset() or st[L.top] != full:
        return False
    for a in range(L.n):
        for b in range(L.n):
            if st[int(L.meet[a, b])] != st[a] & st[b]:
                return False
            if st[int(L.join[a, b])] != st[a] | st[b]:
                return False
    return True


@dataclass(frozen=True)
class TopologyReport:
    open_sets: tuple  # frozensets of point indices, sorted by (size, mask)
    hausdorff: bool
    basis_sets: tuple  # distinct basis sets in canonical order
    basis_closed: tuple  # parallel bools: complement is open


def finite_topology_report(S: SpectralSpace) -> TopologyReport:
    """Materialize the topology generated by the sigma-image.

    Closure under union is exponential in the point count, so this is capped
    at 16 points.
    """
    p = len(S.points)
    if p > 16:
        raise TooLarge(f"topology materialization capped at 16 points, got {p}")
    full = (1 << p) - 1
    base = sorted({point_mask(b) for b in S.basis})
    opens = {0} | set(base)
    frontier = list(opens)
    while frontier:
        u = frontier.pop()
        for v in list(opens):
            w = u | v
            if w not in opens:
                opens.add(w)
                frontier.append(w)

    def separated(i, j):
        return any(
            u >> i & 1 and not u >> j & 1 and v >> j & 1 and not v >> i & 1 and not u & v
            for u in opens
            for v in opens
        )

    hausdorff = all(separated(i, j) for i in range(p) for j in range(p) if i != j)
    open_sets = tuple(
        frozenset(i for i in range(p) if m >> i & 1)
        for m in sorted(opens, key=lambda m: (bin(m).count("1"), m))
    )
    closed = tuple((full ^ point_mask(b)) in opens for b in S.basis)
    return TopologyReport(open_sets, hausdorff, S.basis, closed)
