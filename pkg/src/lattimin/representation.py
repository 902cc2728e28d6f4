"""Congruences, quotients, and the minimal maximin representation.

The synthesis pipeline quotients by the indifference-to-bottom ideal using
the coarse trivializer congruence when Axiom 3 holds, and falls back to the
fine bounded-perturbation congruence when it does not; both paths yield
verifiable representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import (
    AxiomViolation,
    IncompatiblePartition,
    NotAnIdeal,
    NotARepresentation,
)
from .lattice import Lattice, LatticeHom, build_lattice, kernel_classes
from .preference import WeakOrder, check_axiom1, check_axiom2, check_axiom3, zero_class
from .spectrum import classify_subset, enumerate_prime_filters, point_mask


@dataclass(frozen=True)
class Congruence:
    """Meet/join-compatible partition: element index -> class id.

    Class ids are canonical: ordered by least representative.
    """

    classes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(int(c) for c in self.classes))

    @property
    def num_classes(self) -> int:
        return max(self.classes) + 1 if self.classes else 0

    def cls(self, a: int) -> int:
        return self.classes[a]

    @property
    def representatives(self) -> tuple[int, ...]:
        reps = {}
        for a, c in enumerate(self.classes):
            reps.setdefault(c, a)
        return tuple(reps[c] for c in range(self.num_classes))

    def members(self, c: int) -> frozenset:
        return frozenset(a for a, k in enumerate(self.classes) if k == c)


def _canonical_classes(keys) -> tuple[int, ...]:
    ids: dict = {}
    out = []
    for key in keys:
        if key not in ids:
            ids[key] = len(ids)
        out.append(ids[key])
    return tuple(out)


def congruence_from_classes(L: Lattice, classes) -> Congruence:
    """Validate compatibility of a partition; IncompatiblePartition with a
    witness quadruple (a, b, a', b') on failure."""
    classes = _canonical_classes(tuple(classes))
    for op, table in (("meet", L.meet), ("join", L.join)):
        seen: dict = {}
        for a in range(L.n):
            for b in range(L.n):
                key = (classes[a], classes[b])
                val = classes[int(table[a, b])]
                if key in seen:
                    prev_val, (a0, b0) = seen[key]
                    if prev_val != val:
                        raise IncompatiblePartition(op, (a0, b0, a, b))
                else:
                    seen[key] = (val, (a, b))
    return Congruence(classes)


def _require_ideal(L: Lattice, I) -> frozenset:
    Iset = frozenset(int(x) for x in I)
    cls = classify_subset(L, Iset)
    if not cls.is_ideal:
        raise NotAnIdeal(f"{sorted(Iset)} is not an ideal")
    return Iset


def congruence_beta_prime(L: Lattice, I) -> Congruence:
    """Fine congruence: a ~ b iff each is below the other joined with some
    ideal member.  With a finite ideal this reduces to a | max(I) == b | max(I).
    """
    Iset = _require_ideal(L, I)
    m = L.bottom
    for a in Iset:
        m = int(L.join[m, a])
    C = congruence_from_classes(L, (int(L.join[a, m]) for a in range(L.n)))
    if C.members(C.cls(L.bottom)) != Iset:
        raise NotAnIdeal("bottom class does not equal the ideal")
    return C


def congruence_beta_dprime(L: Lattice, I) -> Congruence:
    """Coarse congruence: a ~ b iff a and b are trivialized into the ideal by
    exactly the same elements."""
    Iset = _require_ideal(L, I)
    keys = [
        frozenset(c for c in range(L.n) if int(L.meet[a, c]) in Iset)
        for a in range(L.n)
    ]
    C = congruence_from_classes(L, _canonical_classes(keys))
    if C.members(C.cls(L.bottom)) != Iset:
        raise NotAnIdeal("bottom class does not equal the ideal")
    return C


def quotient(L: Lattice, C: Congruence) -> tuple[Lattice, LatticeHom]:
    """Quotient lattice over class representatives plus the projection hom."""
    C = congruence_from_classes(L, C.classes)
    reps = C.representatives
    k = C.num_classes
    qmeet = [[C.cls(int(L.meet[reps[i], reps[j]])) for j in range(k)] for i in range(k)]
    qjoin = [[C.cls(int(L.join[reps[i], reps[j]])) for j in range(k)] for i in range(k)]
    labels = None
    if L.labels is not None:
        labels = tuple(
            "|".join(L.labels[a] for a in sorted(C.members(c))) for c in range(k)
        )
    Q = build_lattice(qmeet, qjoin, C.cls(L.bottom), C.cls(L.top), labels)
    h = LatticeHom(L, Q, C.classes)
    return Q, h


def kernel(h: LatticeHom) -> Congruence:
    return Congruence(kernel_classes(h))


@dataclass(frozen=True)
class Representation:
    """Triple <X, sigma, outcome order>: outcomes 0..outcome_count-1,
    sigma_map per lattice element, ranks over outcomes."""

    outcome_count: int
    sigma_map: tuple  # frozenset[int] per element
    outcome_ranks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "sigma_map", tuple(frozenset(int(x) for x in s) for s in self.sigma_map)
        )
        object.__setattr__(
            self, "outcome_ranks", tuple(int(r) for r in self.outcome_ranks)
        )
        if len(self.outcome_ranks) != self.outcome_count:
            raise ValueError("outcome_ranks length must equal outcome_count")
        for s in self.sigma_map:
            if any(not 0 <= x < self.outcome_count for x in s):
                raise ValueError("sigma_map outcome out of range")


def check_representation_hom(L: Lattice, R: Representation) -> bool:
    """sigma_map must be a bounded-lattice hom into the powerset of X."""
    if len(R.sigma_map) != L.n:
        return False
    sm = R.sigma_map
    full = frozenset(range(R.outcome_count))
    if sm[L.bottom] != frozenset() or sm[L.top] != full:
        return False
    for a in range(L.n):
        for b in range(L.n):
            if sm[int(L.meet[a, b])] != sm[a] & sm[b]:
                return False
            if sm[int(L.join[a, b])] != sm[a] | sm[b]:
                return False
    return True


def derive_pref_from_rep(R: Representation) -> WeakOrder:
    """Preference on descriptions induced by worst-outcome comparison.

    Empty sigma scores strictly better than everything (vacuous domination).
    The literal quantifier evaluation is checked against the score reduction
    on every call.
    """
    n = len(R.sigma_map)
    scores = [
        (0, 0) if not s else (1, max(R.outcome_ranks[x] for x in s))
        for s in R.sigma_map
    ]
    for a in range(n):
        for b in range(n):
            literal = all(
                any(R.outcome_ranks[x] <= R.outcome_ranks[y] for y in R.sigma_map[b])
                for x in R.sigma_map[a]
            )
            if literal != (scores[a] <= scores[b]):
                raise RuntimeError(
                    f"worst-rank fast path disagrees with literal formula at ({a},{b})"
                )
    return WeakOrder.dense(scores)


def derived_relation_literal(R: Representation) -> list:
    """rel[a][b] by the literal forall/exists formula; fast-path oracle."""
    return [
        [
            all(
                any(R.outcome_ranks[x] <= R.outcome_ranks[y] for y in R.sigma_map[b])
                for x in R.sigma_map[a]
            )
            for b in range(len(R.sigma_map))
        ]
        for a in range(len(R.sigma_map))
    ]


def verify_representation(
    L: Lattice, W: WeakOrder, R: Representation
) -> tuple[bool, Optional[tuple[int, int]]]:
    """True iff the derived preference equals W on all of the carrier."""
    derived = derive_pref_from_rep(R)
    for a in range(L.n):
        for b in range(L.n):
            if (W.ranks[a] <= W.ranks[b]) != (derived.ranks[a] <= derived.ranks[b]):
                return False, (a, b)
    return True, None


def minimal_representation(L: Lattice, W: WeakOrder) -> Representation:
    """Build the canonical minimal representation of an axiom-satisfying W.

    Axioms 1-2 are mandatory (AxiomViolation otherwise).  Axiom 3 selects the
    coarse trivializer congruence; when it fails the fine congruence is used
    instead, which still yields a verifiable representation.
    """
    from .duality import dual_forward  # local import to avoid a cycle

    v1 = check_axiom1(L, W)
    v2 = check_axiom2(L, W)
    if v1 or v2:
        raise AxiomViolation({"axiom1": v1, "axiom2": v2})
    I = zero_class(L, W).members
    v3 = check_axiom3(L, W)
    if v3:
        C = congruence_beta_prime(L, I)
    else:
        C = congruence_beta_dprime(L, I)
    Q, h = quotient(L, C)
    reps = C.representatives
    for a in range(L.n):
        if W.ranks[a] != W.ranks[reps[C.cls(a)]]:
            raise AxiomViolation({"congruence-indifference": [(a, reps[C.cls(a)])]})
    WQ = WeakOrder(tuple(W.ranks[reps[c]] for c in range(C.num_classes)))
    S = enumerate_prime_filters(Q)
    fwd = dual_forward(Q, S, WQ)
    sigma_map = tuple(S.sigma(h.mapping[a]) for a in range(L.n))
    return Representation(len(S.points), sigma_map, fwd.ranks)


@dataclass(frozen=True)
class Refutation:
    """Witness that a factoring homomorphism is ill-defined."""

    witness: tuple[int, int]


def _image_lattice(R: Representation) -> tuple[Lattice, dict]:
    sets = sorted(set(R.sigma_map), key=lambda s: (len(s), point_mask(s)))
    index = {s: i for i, s in enumerate(sets)}
    k = len(sets)
    meet = [[index[sets[i] & sets[j]] for j in range(k)] for i in range(k)]
    join = [[index[sets[i] | sets[j]] for j in range(k)] for i in range(k)]
    bottom = index[frozenset()]
    top = index[frozenset(range(R.outcome_count))]
    return build_lattice(meet, join, bottom, top), index


def factor_check(
    L: Lattice, W: WeakOrder, R_other: Representation, R_min: Representation
) -> Union[LatticeHom, Refutation]:
    """Factor R_min's sigma through R_other's on the image lattices.

    Returns the surjective homomorphism when the kernel inclusion holds, or a
    Refutation with the first witness pair when it does not.
    """
    for R in (R_other, R_min):
        if not check_representation_hom(L, R):
            raise NotARepresentation("sigma_map is not a bounded-lattice hom")
        ok, _ = verify_representation(L, W, R)
        if not ok:
            raise NotARepresentation("representation does not reproduce W")
    for a in range(L.n):
        for b in range(a + 1, L.n):
            if (
                R_other.sigma_map[a] == R_other.sigma_map[b]
                and R_min.sigma_map[a] != R_min.sigma_map[b]
            ):
                return Refutation((a, b))
    src, src_index = _image_lattice(R_other)
    dst, dst_index = _image_lattice(R_min)
    mapping = [0] * src.n
    for a in range(L.n):
        mapping[src_index[R_other.sigma_map[a]]] = dst_index[R_min.sigma_map[a]]
    hom = LatticeHom(src, dst, tuple(mapping))
    if set(hom.mapping) != set(range(dst.n)):
        raise NotARepresentation("factoring hom is not surjective")
    return hom
