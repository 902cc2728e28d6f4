from lattimin import (
    PointOrder,
    WeakOrder,
    dual_backward,
    dual_forward,
    enumerate_prime_filters,
    filter_witness,
    roundtrip_check,
    duality_equivalence_report,
)
from lattimin.duality import (
    backward_relation_literal,
    forward_relation_literal,
    nonzero_elements,
    point_best_ranks,
)
from lattimin.fixtures import B2, B2_A, B2_B, CHAIN2, CHAIN3, W3
from lattimin.testkit import enumerate_weak_orders, random_distributive_lattice


class TestDualForward:
    def test_chain3_w3(self):
        S = enumerate_prime_filters(CHAIN3)
        fwd = dual_forward(CHAIN3, S, W3)
        # point 0 = {1}, point 1 = {1/2, 1}; the richer filter wins
        assert fwd.ranks == (1, 0)

    def test_chain2_single_point_reflexive(self):
        S = enumerate_prime_filters(CHAIN2)
        fwd = dual_forward(CHAIN2, S, WeakOrder((0, 0)))
        assert fwd.ranks == (0,)
        assert forward_relation_literal(S, WeakOrder((0, 0))) == [[True]]

    def test_b2_atom_ranking(self):
        S = enumerate_prime_filters(B2)
        W = WeakOrder((0, 0, 1, 1))  # a better than b and top
        fwd = dual_forward(B2, S, W)
        assert fwd.ranks[0] < fwd.ranks[1]  # F_a strictly above F_b


class TestDualBackward:
    def test_chain3_recovers_strict(self):
        S = enumerate_prime_filters(CHAIN3)
        back = dual_backward(CHAIN3, S, PointOrder((1, 0)))  # y above x
        assert back[1] < back[2]

    def test_chain2_total_indifference(self):
        S = enumerate_prime_filters(CHAIN2)
        assert dual_backward(CHAIN2, S, PointOrder((0,))) == {1: 0}

    def test_b2_top_ties_with_worse_atom(self):
        S = enumerate_prime_filters(B2)
        back = dual_backward(B2, S, PointOrder((0, 1)))  # F_a above F_b
        assert back[B2_A] < back[B2_B]
        assert back[B2.top] == back[B2_B]


class TestRoundtrip:
    def test_w3_agrees(self):
        cert = roundtrip_check(CHAIN3, W3)
        assert cert.agreement and cert.counterexample is None

    def test_axiom1_violation_forces_disagreement(self):
        cert = roundtrip_check(CHAIN3, WeakOrder((0, 2, 1)))  # 1 above 1/2
        assert not cert.agreement
        assert cert.counterexample == (1, 2)

    def test_chain2_trivial(self):
        assert roundtrip_check(CHAIN2, WeakOrder((0, 0))).agreement


class TestFilterWitness:
    def test_half_over_one(self):
        S = enumerate_prime_filters(CHAIN3)
        assert filter_witness(CHAIN3, S, W3, 1, 2) == {2}

    def test_one_over_half_absent(self):
        S = enumerate_prime_filters(CHAIN3)
        assert filter_witness(CHAIN3, S, W3, 2, 1) is None

    def test_reflexive_witness_exists(self):
        for L in (CHAIN3, B2):
            S = enumerate_prime_filters(L)
            for ranks in enumerate_weak_orders(L.n):
                W = WeakOrder(ranks)
                rep = duality_equivalence_report(L, W)
                if rep.axioms_hold:
                    for a in nonzero_elements(L):
                        assert filter_witness(L, S, W, a, a) is not None


class TestDualityEquivalence:
    def test_exhaustive_on_small_fixtures(self):
        for L in (CHAIN2, CHAIN3, B2):
            for ranks in enumerate_weak_orders(L.n):
                rep = duality_equivalence_report(L, WeakOrder(ranks))
                assert rep.equivalent

    def test_forward_always_total_preorder(self):
        for seed in range(40):
            L = random_distributive_lattice(4, seed)
            S = enumerate_prime_filters(L)
            for ranks in enumerate_weak_orders(min(L.n, 4)):
                W = WeakOrder(tuple(ranks[i % len(ranks)] for i in range(L.n)))
                best = point_best_ranks(S, W)
                rel = forward_relation_literal(S, W)
                p = len(S.points)
                for i in range(p):
                    assert rel[i][i]
                    for j in range(p):
                        assert rel[i][j] or rel[j][i]
                        assert rel[i][j] == (best[i] <= best[j])
