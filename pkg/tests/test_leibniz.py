"""Pushout product, pullback cotensor, and the adjunction on universal
lifting problems."""

import pytest

from fiblift.corpus import random_codomain_vertical, rng_for
from fiblift.fibrations import TotalMor
from fiblift.kernel import FinMap, FinSet, identity
from fiblift.leibniz import (
    check_pushout_product_reindex,
    fiber_pushout_product,
    generating_family,
    hom_count_adjunction,
    pullback_cotensor,
    pushout_product,
    ulp_adjunction_check,
)


def _vert(cod, dom_size, cod_size, base, dom_disp, cod_disp, table):
    one = base
    dom = FinMap(FinSet(dom_size), one, dom_disp)
    codm = FinMap(FinSet(cod_size), one, cod_disp)
    return cod.vertical(dom, codm, TotalMor(dom, codm, identity(one),
                                            FinMap(FinSet(dom_size), FinSet(cod_size), table)))


class TestPushoutProduct:
    def test_delta0_squared(self, cod, delta0):
        pp = pushout_product(cod, delta0, delta0)
        assert pp.corner.dom.size == 3
        assert pp.map.cod.dom.size == 4
        assert pp.certificate_ok

    def test_empty_domain_gives_product(self, cod, empty_point, delta0):
        # f with empty upstairs makes the corner the plain product V x X
        pp = pushout_product(cod, empty_point, delta0)
        assert pp.corner.dom.size == empty_point.cod.dom.size * delta0.dom.dom.size
        assert pp.certificate_ok

    def test_iso_factor_gives_iso(self, cod, delta0):
        one = FinSet(1)
        Y = FinMap(FinSet(2), one, (0, 0))
        giso = cod.vertical(Y, Y, cod.fiber_id(Y))
        pp = pushout_product(cod, delta0, giso)
        assert pp.map.map.data.is_iso()

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_reindex_commutes(self, cod, seed):
        r = rng_for(200 + seed)
        f = random_codomain_vertical(r, cod, 2, 2)
        g = random_codomain_vertical(r, cod, 2, 2)
        for n in range(2):
            for s in cod.all_base_maps(FinSet(n), f.over):
                for t in cod.all_base_maps(FinSet(n), g.over):
                    assert check_pushout_product_reindex(cod, f, g, s, t)


class TestPullbackCotensor:
    def test_iso_target_gives_iso(self, cod, delta0):
        one = FinSet(1)
        Y = FinMap(FinSet(2), one, (0, 0))
        giso = cod.vertical(Y, Y, cod.fiber_id(Y))
        cot = pullback_cotensor(cod, delta0, giso)
        assert cot.map.map.data.is_iso()
        assert cot.certificate_ok

    def test_hom_count_adjunction_over_point(self, cod, delta0, empty_point, two_to_one):
        one = FinSet(1)
        X = FinMap(FinSet(2), one, (0, 0))
        Y = FinMap(FinSet(2), one, (0, 0))
        g = cod.vertical(X, Y, TotalMor(X, Y, identity(one),
                                        FinMap(FinSet(2), FinSet(2), (0, 1))))
        for a in (delta0, empty_point, two_to_one):
            assert hom_count_adjunction(cod, a, delta0, g)
            assert hom_count_adjunction(cod, a, empty_point, g)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_hom_count_random_triples(self, cod, seed):
        r = rng_for(300 + seed)
        one = FinSet(1)

        def rnd():
            while True:
                m = random_codomain_vertical(r, cod, 1, 2)
                if m.over.size == 1:
                    return m
        a, f, g = rnd(), rnd(), rnd()
        assert hom_count_adjunction(cod, a, f, g)


class TestUlpAdjunction:
    def test_identity_m0_gives_singletons(self, cod, delta0, two_to_one):
        # an invertible m0 makes both corners invertible: one solution each
        one = FinSet(1)
        pt = FinMap(FinSet(1), one, (0,))
        m0id = cod.vertical(pt, pt, cod.fiber_id(pt))
        rep = ulp_adjunction_check(cod, m0id, delta0, two_to_one)
        assert rep.bijection_ok
        assert rep.left_count == rep.right_count == 1

    def test_unit_m0_reduces_to_plain_ulp(self, cod, empty_point, delta0, two_to_one):
        # the unit of the pushout product is (empty -> point): both sides
        # count exactly the plain universal problem's solutions
        rep = ulp_adjunction_check(cod, empty_point, delta0, two_to_one)
        from fiblift.lifting import enumerate_solutions, universal_lifting_problem
        plain = universal_lifting_problem(cod, delta0, two_to_one)
        assert rep.bijection_ok
        assert rep.left_count == len(
            enumerate_solutions(cod, delta0, two_to_one, plain).fillers)

    def test_empty_point_m0(self, cod, empty_point, delta0, two_to_one):
        rep = ulp_adjunction_check(cod, empty_point, delta0, two_to_one)
        assert rep.left_count == rep.right_count and rep.bijection_ok

    def test_delta0_against_classifier(self, cod, delta0, classifier2, two_to_one):
        rep = ulp_adjunction_check(cod, delta0, classifier2, two_to_one)
        assert rep.left_count == rep.right_count and rep.bijection_ok

    @pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
    def test_random_triples(self, cod, delta0, seed):
        r = rng_for(400 + seed)
        m = random_codomain_vertical(r, cod, 2, 2)
        f = random_codomain_vertical(r, cod, 1, 2)
        rep = ulp_adjunction_check(cod, delta0, m, f)
        assert rep.bijection_ok


class TestGeneratingFamily:
    def test_toy_interval_sizes(self, cod):
        # interval = 2, classifier base I = 2: domain 3, codomain 4 over I
        one = FinSet(1)
        I2 = FinSet(2)
        d0dom = FinMap(FinSet(1), one, (0,))
        d0cod = FinMap(FinSet(2), one, (0, 0))
        delta = cod.vertical(d0dom, d0cod,
                             TotalMor(d0dom, d0cod, identity(one),
                                      FinMap(FinSet(1), FinSet(2), (0,))))
        Uc = FinMap(FinSet(1), I2, (0,))
        cls = cod.vertical(Uc, identity(I2),
                           TotalMor(Uc, identity(I2), identity(I2),
                                    FinMap(FinSet(1), FinSet(2), (0,))))
        gen = generating_family(cod, delta, cls)
        assert gen.map.dom.dom.size == 3
        assert gen.map.cod.dom.size == 4
        assert gen.map.over == I2
