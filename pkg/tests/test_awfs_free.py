"""Free-algebra chains, free monads, algebra composition, awfs assembly."""

import pytest

from fiblift.awfs_free import (
    assemble_awfs,
    compose_algebras,
    free_algebras_isomorphic,
    free_monad,
    free_monad_swapped,
    initial_seed,
    iterate_chain,
    step_endofunctor,
    verify_initiality,
)
from fiblift.corpus import random_codomain_vertical, rng_for
from fiblift.fibrations import FamObj, TotalMor
from fiblift.kernel import FinMap, FinSet, identity
from fiblift.step_one import algebra_maps, factor


class TestStepEndofunctor:
    def test_apply_unfolds_factor(self, cod, empty_point, two_to_one):
        endo = step_endofunctor(cod, empty_point, two_to_one)
        tg, point, cp, fact = endo.apply(two_to_one)
        # T(f) carrier = X + K1 f = 2 + 3
        assert tg.dom.dom.size == 5

    def test_algebras_match_under_category(self, cod, empty_point, two_to_one):
        # T-algebras on g = slice maps under f carrying R1-algebras
        endo = step_endofunctor(cod, empty_point, two_to_one)
        one = FinSet(1)
        Z = FinMap(FinSet(2), one, (0, 0))
        gmors = cod.fiber_mors(Z, two_to_one.cod)
        g = cod.vertical(Z, two_to_one.cod, gmors[0])
        algs = endo.algebras_on(g)
        fact_g = factor(cod, empty_point, g)
        r1_algs = algebra_maps(cod, fact_g)
        unders = [u for u in cod.total_mors_over(two_to_one.dom, Z, identity(one))
                  if cod.fiber_compose(g.map, u) == two_to_one.map]
        assert len(algs) == len(r1_algs) * len(unders)


class TestIterateChain:
    def test_f_identity_stabilizes_at_one(self, cod, empty_point):
        one = FinSet(1)
        Y = FinMap(FinSet(2), one, (0, 0))
        fid = cod.vertical(Y, Y, cod.fiber_id(Y))
        endo = step_endofunctor(cod, empty_point, fid)
        chain = iterate_chain(endo, initial_seed(cod, fid))
        assert chain.status == "stabilized"
        assert chain.stabilized_at == 1

    def test_classifier_generator_stabilizes_at_one(self, cod, classifier2, two_to_one):
        endo = step_endofunctor(cod, classifier2, two_to_one)
        chain = iterate_chain(endo, initial_seed(cod, two_to_one))
        assert chain.status == "stabilized"
        assert chain.stabilized_at == 1

    def test_cap_exhaustion_reports_undetermined(self, cod, delta0):
        # the endpoint inclusion against a nontrivial map forces strict
        # growth: every stage adds fresh lifts whose endpoints need lifting
        one = FinSet(1)
        X = FinMap(FinSet(2), one, (0, 0))
        Y = FinMap(FinSet(2), one, (0, 0))
        f = cod.vertical(X, Y, TotalMor(X, Y, identity(one),
                                        FinMap(FinSet(2), FinSet(2), (0, 1))))
        endo = step_endofunctor(cod, delta0, f)
        chain = iterate_chain(endo, initial_seed(cod, f), stage_cap=5)
        assert chain.status == "undetermined"
        assert chain.stabilized_at is None
        sizes = chain.carrier_sizes
        assert all(b > a for a, b in zip(sizes[1:], sizes[2:]))


class TestFreeMonad:
    def test_empty_point_free_algebra(self, cod, empty_point, two_to_one):
        fm = free_monad(cod, empty_point, two_to_one)
        assert fm.status == "ok"
        assert fm.free.obj.dom.dom.size == 3  # X ⨿ Y
        assert fm.algebra_bijection_ok

    def test_f_iso_free_is_f(self, cod, empty_point):
        one = FinSet(1)
        X = FinMap(FinSet(2), one, (0, 0))
        fiso = cod.vertical(X, X, cod.fiber_id(X))
        fm = free_monad(cod, empty_point, fiso)
        assert fm.status == "ok" and fm.algebra_bijection_ok
        # exactly one monad algebra and one R1-algebra
        fact = factor(cod, empty_point, fiso)
        assert len(algebra_maps(cod, fact)) == 1

    def test_initiality_by_enumeration(self, cod, empty_point, two_to_one):
        fm = free_monad(cod, empty_point, two_to_one, check_bijection=False)
        one = FinSet(1)
        targets = []
        for n in (1, 2, 3):
            Z = FinMap(FinSet(n), one, tuple(0 for _ in range(n)))
            for t in cod.fiber_mors(Z, two_to_one.cod):
                targets.append(cod.vertical(Z, two_to_one.cod, t))
        assert verify_initiality(cod, empty_point, two_to_one, fm, targets)

    def test_swapped_runs_isomorphic(self, cod, empty_point, classifier2, two_to_one):
        for m in (empty_point, classifier2):
            fm = free_monad(cod, m, two_to_one, check_bijection=False)
            other = free_monad_swapped(cod, m, two_to_one)
            assert other is not None
            assert free_algebras_isomorphic(cod, m, fm.free, other)

    def test_famset_free_monad(self, fam_set):
        I = FinSet(1)
        mU = FamObj(I, (FinSet(0),))
        mV = FamObj(I, (FinSet(1),))
        m = fam_set.vertical(mU, mV, fam_set.fiber_mors(mU, mV)[0])
        fX = FamObj(I, (FinSet(2),))
        fY = FamObj(I, (FinSet(1),))
        f = fam_set.vertical(fX, fY, fam_set.fiber_mors(fX, fY)[0])
        fm = free_monad(fam_set, m, f)
        assert fm.status == "ok" and fm.algebra_bijection_ok


class TestComposeAlgebras:
    def test_composed_algebra_is_enumerated(self, cod, empty_point):
        one = FinSet(1)
        A = FinMap(FinSet(2), one, (0, 0))
        B = FinMap(FinSet(2), one, (0, 0))
        C = FinMap(FinSet(1), one, (0,))
        f = cod.vertical(A, B, TotalMor(A, B, identity(one),
                                        FinMap(FinSet(2), FinSet(2), (0, 1))))
        g = cod.vertical(B, C, TotalMor(B, C, identity(one),
                                        FinMap(FinSet(2), FinSet(1), (0, 0))))
        algs_f = algebra_maps(cod, factor(cod, empty_point, f))
        algs_g = algebra_maps(cod, factor(cod, empty_point, g))
        gf = cod.vertical(A, C, cod.fiber_compose(g.map, f.map))
        algs_gf = algebra_maps(cod, factor(cod, empty_point, gf))
        for af in algs_f:
            for ag in algs_g:
                comp = compose_algebras(cod, empty_point, f, af, g, ag)
                assert comp in algs_gf

    def test_identity_factors(self, cod, empty_point, two_to_one):
        one = FinSet(1)
        Y = two_to_one.cod
        gid = cod.vertical(Y, Y, cod.fiber_id(Y))
        algs_f = algebra_maps(cod, factor(cod, empty_point, two_to_one))
        algs_id = algebra_maps(cod, factor(cod, empty_point, gid))
        comp = compose_algebras(cod, empty_point, two_to_one, algs_f[0], gid, algs_id[0])
        gf = cod.vertical(two_to_one.dom, Y,
                          cod.fiber_compose(gid.map, two_to_one.map))
        assert comp in algebra_maps(cod, factor(cod, empty_point, gf))


class TestAssembleAwfs:
    def test_empty_point_generator(self, cod, empty_point, two_to_one):
        one = FinSet(1)
        Y = FinMap(FinSet(1), one, (0,))
        fid = cod.vertical(Y, Y, cod.fiber_id(Y))
        data = assemble_awfs(cod, empty_point, [fid, two_to_one])
        assert data.status == "ok"
        assert data.monad_laws_ok and data.comonad_laws_ok
        assert data.distributive_laws_ok and data.lawfs_morphism_ok
        assert all(stage == 1 for stage in data.stabilized_stages.values())

    def test_classifier_generator(self, cod, classifier2, two_to_one):
        data = assemble_awfs(cod, classifier2, [two_to_one])
        assert data.status == "ok"
        assert data.stabilized_stages == {0: 1}

    def test_undetermined_contract(self, cod, delta0):
        one = FinSet(1)
        X = FinMap(FinSet(2), one, (0, 0))
        Y = FinMap(FinSet(2), one, (0, 0))
        f = cod.vertical(X, Y, TotalMor(X, Y, identity(one),
                                        FinMap(FinSet(2), FinSet(2), (0, 1))))
        data = assemble_awfs(cod, delta0, [f], stage_cap=4)
        assert data.status == "undetermined"
