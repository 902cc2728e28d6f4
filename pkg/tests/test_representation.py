import random

import pytest

from lattimin import (
    AxiomViolation,
    Congruence,
    IncompatiblePartition,
    LatticeHom,
    NotAnIdeal,
    Refutation,
    Representation,
    WeakOrder,
    check_axiom1,
    check_axiom2,
    check_hom,
    congruence_beta_dprime,
    congruence_beta_prime,
    derive_pref_from_rep,
    factor_check,
    minimal_representation,
    quotient,
    verify_representation,
)
from lattimin.fixtures import B2, B2_A, B2_B, CHAIN2, CHAIN3, W3
from lattimin.representation import (
    check_representation_hom,
    congruence_from_classes,
    kernel,
)
from lattimin.testkit import (
    duplicate_outcome,
    random_distributive_lattice,
    random_representation,
)

from conftest import same_tables


class TestBetaPrime:
    def test_chain3_trivial_ideal_gives_identity(self):
        assert congruence_beta_prime(CHAIN3, {0}).classes == (0, 1, 2)

    def test_chain3_half_ideal_merges(self):
        assert congruence_beta_prime(CHAIN3, {0, 1}).classes == (0, 0, 1)

    def test_b2_atom_ideal(self):
        C = congruence_beta_prime(B2, {0, B2_A})
        assert C.members(C.cls(0)) == {0, B2_A}
        assert C.members(C.cls(B2.top)) == {B2_B, B2.top}

    def test_non_ideal_rejected(self):
        with pytest.raises(NotAnIdeal):
            congruence_beta_prime(B2, {0, B2.top})


class TestBetaDoublePrime:
    def test_chain3_trivial_ideal_merges_nonzero(self):
        # 1/2 and 1 share the trivializer set {0}, so the coarse congruence
        # collapses them even for the smallest ideal
        assert congruence_beta_dprime(CHAIN3, {0}).classes == (0, 1, 1)

    def test_b2_trivial_ideal_identity(self):
        assert congruence_beta_dprime(B2, {0}).classes == (0, 1, 2, 3)

    def test_whole_lattice_is_its_own_ideal(self):
        C = congruence_beta_dprime(B2, set(B2.elements()))
        assert C.num_classes == 1

    def test_beta_prime_refines_beta_dprime(self):
        rng = random.Random(5)
        for seed in range(60):
            L = random_distributive_lattice(4, seed)
            x = rng.randrange(L.n)
            I = L.downset(x)
            fine = congruence_beta_prime(L, I)
            coarse = congruence_beta_dprime(L, I)
            for a in L.elements():
                for b in L.elements():
                    if fine.cls(a) == fine.cls(b):
                        assert coarse.cls(a) == coarse.cls(b)

    def test_bottom_class_equals_ideal_on_random_input(self):
        for seed in range(60):
            L = random_distributive_lattice(4, seed)
            x = random.Random(seed).randrange(L.n)
            I = L.downset(x)
            for C in (congruence_beta_prime(L, I), congruence_beta_dprime(L, I)):
                assert C.members(C.cls(L.bottom)) == I


class TestQuotient:
    def test_identity_congruence(self):
        Q, h = quotient(CHAIN3, Congruence((0, 1, 2)))
        assert same_tables(Q, CHAIN3) and h.mapping == (0, 1, 2)

    def test_chain3_collapse(self):
        Q, h = quotient(CHAIN3, Congruence((0, 0, 1)))
        assert same_tables(Q, CHAIN2)

    def test_b2_collapse(self):
        Q, _ = quotient(B2, Congruence((0, 0, 1, 1)))
        assert same_tables(Q, CHAIN2)

    def test_incompatible_partition_rejected(self):
        # merging bottom with an atom but not the other pair breaks joins
        with pytest.raises(IncompatiblePartition) as ei:
            quotient(B2, Congruence((0, 0, 1, 2)))
        assert len(ei.value.witness) == 4

    def test_kernel_of_projection_is_congruence(self):
        C = Congruence((0, 0, 1))
        Q, h = quotient(CHAIN3, C)
        assert kernel(h).classes == C.classes


class TestMinimalRepresentation:
    def test_chain3_w3(self):
        R = minimal_representation(CHAIN3, W3)
        assert R.outcome_count == 2
        assert sorted(R.sigma_map[1]) == [1]
        assert sorted(R.sigma_map[2]) == [0, 1]
        assert R.outcome_ranks == (1, 0)  # richer filter strictly preferred

    def test_chain2(self):
        R = minimal_representation(CHAIN2, WeakOrder((0, 1)))
        assert R.outcome_count == 1 and R.sigma_map[1] == {0}

    def test_zero_class_collapse(self):
        R = minimal_representation(CHAIN3, WeakOrder((0, 0, 1)))
        assert R.outcome_count == 1
        assert R.sigma_map[1] == frozenset()
        assert R.sigma_map[2] == {0}

    def test_axiom_violation_rejected(self):
        with pytest.raises(AxiomViolation):
            minimal_representation(CHAIN3, WeakOrder((2, 1, 0)))

    def test_total_indifference_collapses_to_empty_outcome_set(self):
        R = minimal_representation(B2, WeakOrder((0, 0, 0, 0)))
        assert R.outcome_count == 0
        ok, _ = verify_representation(B2, WeakOrder((0, 0, 0, 0)), R)
        assert ok


class TestDerivePref:
    def test_roundtrip_through_minimal_rep(self):
        R = minimal_representation(CHAIN3, W3)
        derived = derive_pref_from_rep(R)
        assert derived.ranks == W3.ranks

    def test_equal_images_are_indifferent(self):
        R = Representation(2, (frozenset(), {0}, {0}, {0, 1}), (0, 1))
        derived = derive_pref_from_rep(R)
        assert derived.indifferent(1, 2)

    def test_worst_element_comparison(self):
        R = Representation(2, (frozenset(), {0}, {1}, {0, 1}), (0, 1))
        derived = derive_pref_from_rep(R)
        assert derived.strictly_prefers(1, 2)
        assert derived.indifferent(2, 3)


class TestVerifyRepresentation:
    def test_minimal_rep_verifies(self):
        R = minimal_representation(CHAIN3, W3)
        assert verify_representation(CHAIN3, W3, R) == (True, None)

    def test_reversed_outcome_order_fails(self):
        R = minimal_representation(CHAIN3, W3)
        flipped = Representation(
            R.outcome_count, R.sigma_map, tuple(reversed(R.outcome_ranks))
        )
        ok, counterexample = verify_representation(CHAIN3, W3, flipped)
        assert not ok and counterexample is not None

    def test_constant_order_with_constant_sigma(self):
        # the empty image is strictly best under worst-case comparison, so a
        # totally indifferent order needs the same image everywhere
        W = WeakOrder((0, 0, 0, 0))
        R = Representation(1, ({0}, {0}, {0}, {0}), (0,))
        ok, _ = verify_representation(B2, W, R)
        assert ok
        bad = Representation(1, (frozenset(), {0}, {0}, {0}), (0,))
        ok, counterexample = verify_representation(B2, W, bad)
        assert not ok and counterexample is not None


class TestFactorCheck:
    def test_identity_factoring(self):
        R = minimal_representation(CHAIN3, W3)
        hom = factor_check(CHAIN3, W3, R, R)
        assert isinstance(hom, LatticeHom) and check_hom(hom)
        assert hom.mapping == tuple(range(hom.source.n))

    def test_duplicated_outcome_factors(self):
        R = minimal_representation(CHAIN3, W3)
        R_hat = duplicate_outcome(R, 0)
        assert check_representation_hom(CHAIN3, R_hat)
        hom = factor_check(CHAIN3, W3, R_hat, R)
        assert isinstance(hom, LatticeHom) and check_hom(hom)
        assert set(hom.mapping) == set(range(hom.target.n))

    def test_finer_representation_merges_into_minimal(self):
        # under 1/2 ~ 1 the minimal rep has one point, but the full spectral
        # rep still distinguishes the two descriptions
        W = WeakOrder((0, 1, 1))
        R_min = minimal_representation(CHAIN3, W)
        assert R_min.outcome_count == 1
        R_hat = Representation(2, (frozenset(), {1}, {0, 1}), (0, 0))
        hom = factor_check(CHAIN3, W, R_hat, R_min)
        assert isinstance(hom, LatticeHom) and check_hom(hom)
        assert hom.source.n == 3 and hom.target.n == 2

    def test_refutation_when_kernel_not_included(self):
        W = WeakOrder((0, 1, 1))
        R_min = minimal_representation(CHAIN3, W)
        R_coarse = Representation(1, (frozenset(), {0}, {0}), (0,))
        R_fine = Representation(2, (frozenset(), {1}, {0, 1}), (0, 0))
        result = factor_check(CHAIN3, W, R_coarse, R_fine)
        assert isinstance(result, Refutation)
        assert result.witness == (1, 2)


class TestDerivedOrderAxioms:
    def test_random_representations_satisfy_axioms(self):
        for seed in range(200):
            L = random_distributive_lattice(5, seed)
            R = random_representation(L, seed)
            assert check_representation_hom(L, R)
            derived = derive_pref_from_rep(R)
            assert check_axiom1(L, derived) == []
            assert check_axiom2(L, derived) == []
