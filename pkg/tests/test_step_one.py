"""Step-one: factorization, algebra/solution bijection, comonad laws,
coalgebra on the generator, fibredness, oracles."""

import pytest

from fiblift.corpus import (
    random_codomain_vertical,
    random_famcat_vertical,
    random_famset_vertical,
    rng_for,
)
from fiblift.fibrations import FamObj, TotalMor
from fiblift.kernel import Diagram, FinMap, FinSet, identity, terminal_cat
from fiblift.lifting import enumerate_solutions
from fiblift.step_one import (
    algebra_maps,
    algebra_solution_bijection,
    check_coalgebra_laws,
    check_fibred,
    check_sigma_formula,
    check_strongly_fibred,
    coalgebra_on_generator,
    comonad,
    factor,
    factor_square,
    is_classifier_shaped,
    oracle_matches,
)
from fiblift.fibrations.vertical import Square


class TestFactor:
    def test_empty_point_generator_gives_coproduct(self, cod, empty_point, two_to_one):
        fact = factor(cod, empty_point, two_to_one)
        assert fact.K1.dom.size == 3  # X ⨿ Y
        # R1 = [f, id]
        assert fact.R1.data.table == (0, 0, 0)
        assert cod.fiber_compose(fact.R1, fact.L1) == two_to_one.map

    def test_identity_generator_factors_trivially(self, cod, two_to_one):
        one = FinSet(1)
        V = FinMap(FinSet(1), one, (0,))
        mid = cod.vertical(V, V, cod.fiber_id(V))
        fact = factor(cod, mid, two_to_one)
        assert cod.fiber_mor_is_iso(fact.L1)

    def test_famcat_factor_over_terminal(self, fam_cat):
        r = rng_for(11)
        m = random_famcat_vertical(r, fam_cat, 2)
        T = terminal_cat()
        tX = Diagram(T, (FinSet(2),), (identity(FinSet(2)),))
        tY = Diagram(T, (FinSet(1),), (identity(FinSet(1)),))
        f = fam_cat.vertical(tX, tY, fam_cat.fiber_mors(tX, tY)[0])
        fact = factor(fam_cat, m, f)
        assert fam_cat.fiber_compose(fact.R1, fact.L1) == f.map


class TestAlgebraSolutionBijection:
    def test_counts_two(self, cod, empty_point, two_to_one):
        algs, sols, ok = algebra_solution_bijection(cod, empty_point, two_to_one)
        assert len(algs) == 2 and len(sols.fillers) == 2 and ok

    def test_iso_target(self, cod, empty_point):
        one = FinSet(1)
        Y = FinMap(FinSet(2), one, (0, 0))
        fiso = cod.vertical(Y, Y, cod.fiber_id(Y))
        algs, sols, ok = algebra_solution_bijection(cod, empty_point, fiso)
        assert len(algs) == 1 and len(sols.fillers) == 1 and ok

    def test_identity_generator_unique_algebra(self, cod, two_to_one):
        one = FinSet(1)
        V = FinMap(FinSet(1), one, (0,))
        mid = cod.vertical(V, V, cod.fiber_id(V))
        algs, sols, ok = algebra_solution_bijection(cod, mid, two_to_one)
        assert len(algs) == 1 and ok

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_random_codomain_pairs(self, cod, seed):
        r = rng_for(seed)
        m = random_codomain_vertical(r, cod, 2, 2)
        f = random_codomain_vertical(r, cod, 2, 2)
        algs, sols, ok = algebra_solution_bijection(cod, m, f)
        assert ok

    @pytest.mark.parametrize("seed", [4, 5])
    def test_random_famset_pairs(self, fam_set, seed):
        r = rng_for(seed)
        m = random_famset_vertical(r, fam_set, 2, 2)
        f = random_famset_vertical(r, fam_set, 2, 2)
        algs, sols, ok = algebra_solution_bijection(fam_set, m, f)
        assert ok


class TestComonadLaws:
    def test_codomain_laws(self, cod, empty_point, two_to_one):
        cm = comonad(cod, empty_point)
        assert cm.check_counit_laws(two_to_one)
        assert cm.check_coassociativity(two_to_one)

    def test_famset_laws(self, fam_set):
        r = rng_for(21)
        m = random_famset_vertical(r, fam_set, 2, 2)
        f = random_famset_vertical(r, fam_set, 2, 2)
        cm = comonad(fam_set, m)
        assert cm.check_counit_laws(f)
        assert cm.check_coassociativity(f)

    def test_coalgebra_on_generator(self, cod, empty_point, delta0, classifier2):
        for m in (empty_point, delta0, classifier2):
            assert check_coalgebra_laws(cod, m)

    def test_coalgebra_famset_pointwise(self, fam_set):
        I = FinSet(2)
        mU = FamObj(I, (FinSet(0), FinSet(1)))
        mV = FamObj(I, (FinSet(1), FinSet(1)))
        m = fam_set.vertical(mU, mV, fam_set.fiber_mors(mU, mV)[0])
        assert check_coalgebra_laws(fam_set, m)


class TestFibredness:
    def test_codomain_reindex_commutes(self, cod, empty_point):
        J = FinSet(2)
        X = FinMap(FinSet(3), J, (0, 0, 1))
        Y = FinMap(FinSet(2), J, (0, 1))
        f = cod.vertical(X, Y, TotalMor(X, Y, identity(J),
                                        FinMap(FinSet(3), FinSet(2), (0, 0, 1))))
        cm = comonad(cod, empty_point)
        for n in range(3):
            for t in cod.all_base_maps(FinSet(n), J):
                rf = cod.reindex_vert(t, f)
                assert check_fibred(cod, empty_point, rf, f,
                                    cod.cartesian_lift(t, f.dom),
                                    cod.cartesian_lift(t, f.cod), cm=cm)

    def test_identity_square_trivially_fibred(self, cod, empty_point, two_to_one):
        t = identity(two_to_one.over)
        rf = cod.reindex_vert(t, two_to_one)
        assert check_fibred(cod, empty_point, rf, two_to_one,
                            cod.cartesian_lift(t, two_to_one.dom),
                            cod.cartesian_lift(t, two_to_one.cod))

    def test_famcat_reindex_along_functor(self, fam_cat):
        from fiblift.kernel import arrow_cat, functor_to_terminal
        r = rng_for(31)
        T = terminal_cat()
        m = random_famcat_vertical(r, fam_cat, 2, shape=T)
        tX = Diagram(T, (FinSet(2),), (identity(FinSet(2)),))
        tY = Diagram(T, (FinSet(2),), (identity(FinSet(2)),))
        f = fam_cat.vertical(tX, tY, fam_cat.fiber_mors(tX, tY)[0])
        F = functor_to_terminal(arrow_cat())
        rf = fam_cat.reindex_vert(F, f)
        assert check_fibred(fam_cat, m, rf, f,
                            fam_cat.cartesian_lift(F, f.dom),
                            fam_cat.cartesian_lift(F, f.cod))


class TestStrongFibredness:
    def test_v_iso_generators_strongly_fibred(self, cod, empty_point, classifier2):
        J = FinSet(1)
        X = FinMap(FinSet(2), J, (0, 0))
        Y = FinMap(FinSet(2), J, (0, 0))
        f = cod.vertical(X, Y, TotalMor(X, Y, identity(J),
                                        FinMap(FinSet(2), FinSet(2), (0, 1))))
        for m in (empty_point, classifier2):
            for yp_size in range(3):
                Yp = FinMap(FinSet(yp_size), J, tuple(0 for _ in range(yp_size)))
                for g in cod.fiber_mors(Yp, Y):
                    assert check_strongly_fibred(cod, m, f, g)

    def test_delta0_can_fail_strong_fibredness(self, cod, delta0):
        J = FinSet(1)
        X = FinMap(FinSet(2), J, (0, 0))
        Y = FinMap(FinSet(2), J, (0, 0))
        f = cod.vertical(X, Y, TotalMor(X, Y, identity(J),
                                        FinMap(FinSet(2), FinSet(2), (0, 1))))
        Yp = FinMap(FinSet(1), J, (0,))
        g = TotalMor(Yp, Y, identity(J), FinMap(FinSet(1), FinSet(2), (1,)))
        assert not check_strongly_fibred(cod, delta0, f, g)

    def test_sigma_formula(self, cod, empty_point, classifier2):
        J = FinSet(1)
        X = FinMap(FinSet(2), J, (0, 0))
        Y = FinMap(FinSet(2), J, (0, 0))
        f = cod.vertical(X, Y, TotalMor(X, Y, identity(J),
                                        FinMap(FinSet(2), FinSet(2), (0, 1))))
        assert check_sigma_formula(cod, empty_point, f) == (True, True, True)
        assert is_classifier_shaped(classifier2)
        assert check_sigma_formula(cod, classifier2, f) == (True, True, True)


class TestOracle:
    @pytest.mark.parametrize("seed", list(range(6)))
    def test_colimit_then_pushout_matches(self, fam_cat, seed):
        r = rng_for(100 + seed)
        m = random_famcat_vertical(r, fam_cat, 2)
        T = terminal_cat()
        size_x = FinSet(r.randint(1, 2))
        size_y = FinSet(r.randint(1, 2))
        tX = Diagram(T, (size_x,), (identity(size_x),))
        tY = Diagram(T, (size_y,), (identity(size_y),))
        mors = fam_cat.fiber_mors(tX, tY)
        if not mors:
            pytest.skip("no map between sampled sets")
        f = fam_cat.vertical(tX, tY, mors[r.randrange(len(mors))])
        assert oracle_matches(fam_cat, m, f)


class TestFactorSquare:
    def test_degenerate_square_agrees_with_plain_factor(self, cod, delta0, two_to_one):
        ident = TotalMor(delta0, delta0, cod.base_id(delta0.over),
                         Square(cod.fiber_id(delta0.dom), cod.fiber_id(delta0.cod)))
        fact_sq = factor_square(cod, delta0, delta0, ident, two_to_one)
        fact = factor(cod, delta0, two_to_one)
        assert fact_sq.K1.dom.size == fact.K1.dom.size
        assert fact_sq.R1.data.table == fact.R1.data.table

    def test_right_leg_iso_single_algebra(self, cod, delta0):
        one = FinSet(1)
        Y = FinMap(FinSet(2), one, (0, 0))
        giso = cod.vertical(Y, Y, cod.fiber_id(Y))
        ident = TotalMor(delta0, delta0, cod.base_id(delta0.over),
                         Square(cod.fiber_id(delta0.dom), cod.fiber_id(delta0.cod)))
        fact = factor_square(cod, delta0, delta0, ident, giso)
        algs = cod.fiber_fillers(fact.L1, giso.map, cod.fiber_id(giso.dom), fact.R1)
        assert len(algs) == 1
