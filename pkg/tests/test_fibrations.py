"""Instance-level checks: cleavage, opcleavage, hom objects, verifiers."""

import pytest

from fiblift.corpus import (
    random_codomain_vertical,
    random_famcat_vertical,
    random_famset_vertical,
    rng_for,
)
from fiblift.fibrations import (
    FamObj,
    PresheafCodomainFibration,
    TotalMor,
    VerticalArrowFibration,
    is_cartesian,
    is_opcartesian,
    verify_hom_universal,
)
from fiblift.fibrations.checks import transported_universal
from fiblift.kernel import (
    Diagram,
    FinMap,
    FinSet,
    NatTransData,
    arrow_cat,
    functor_to_terminal,
    identity,
    terminal_cat,
)


class TestCodomainInstance:
    def test_cartesian_lift_is_cartesian(self, cod):
        I, J = FinSet(1), FinSet(2)
        Y = FinMap(FinSet(3), J, (0, 0, 1))
        for t in cod.all_base_maps(I, J):
            lift = cod.cartesian_lift(t, Y)
            assert is_cartesian(cod, lift, budget=2).is_true

    def test_identity_is_cartesian(self, cod):
        Y = FinMap(FinSet(2), FinSet(1), (0, 0))
        assert is_cartesian(cod, cod.total_id(Y), budget=2).is_true

    def test_enlarged_apex_not_cartesian(self, cod):
        # a square with a junk point upstairs admits two factorizations
        I, J = FinSet(1), FinSet(1)
        Y = FinMap(FinSet(2), J, (0, 0))
        X = FinMap(FinSet(3), I, (0, 0, 0))
        t = FinMap(I, J, (0,))
        bad = TotalMor(X, Y, t, FinMap(FinSet(3), FinSet(2), (0, 1, 1)))
        assert is_cartesian(cod, bad, budget=2).is_false

    def test_opcartesian_by_composition(self, cod):
        I, J = FinSet(2), FinSet(1)
        X = FinMap(FinSet(2), I, (0, 1))
        u = FinMap(I, J, (0, 0))
        oc = cod.opcart_vert(u, X)
        assert is_opcartesian(cod, oc.unit, budget=2).is_true

    def test_hom_object_is_exponential_over_point(self, cod):
        I = FinSet(1)
        X = FinMap(FinSet(2), I, (0, 0))
        Y = FinMap(FinSet(3), I, (0, 0, 0))
        hom = cod.hom_object(X, Y)
        assert hom.K.size == 9
        assert verify_hom_universal(cod, hom, budget=2).is_true

    def test_hom_universal_rejects_junk(self, cod):
        # replacing K by the empty set loses the universal property
        I = FinSet(1)
        X = FinMap(FinSet(1), I, (0,))
        Y = FinMap(FinSet(2), I, (0, 0))
        hom = cod.hom_object(X, Y)
        from fiblift.fibrations.base import HomObject
        broken = HomObject(FinSet(0), FinMap(FinSet(0), I, ()),
                           FinMap(FinSet(0), I, ()), X, Y,
                           cod.reindex(FinMap(FinSet(0), I, ()), X),
                           cod.reindex(FinMap(FinSet(0), I, ()), Y),
                           cod.reindex_fmor(FinMap(FinSet(0), I, ()),
                                            cod.fiber_mors(X, Y)[0]))
        out = verify_hom_universal(cod, broken, budget=1)
        assert out.is_false


class TestFamSetInstance:
    def test_hom_is_disjoint_union_of_function_sets(self, fam_set):
        I = FinSet(2)
        X = FamObj(I, (FinSet(1), FinSet(2)))
        Y = FamObj(I, (FinSet(2), FinSet(1)))
        hom = fam_set.hom_object(X, Y)
        expected = sum(Y.fibers[j].size ** X.fibers[i].size
                       for i in range(2) for j in range(2))
        assert hom.K.size == expected
        assert verify_hom_universal(fam_set, hom, budget=2).is_true

    def test_cartesian_lifts(self, fam_set):
        r = rng_for(5)
        for _ in range(3):
            m = random_famset_vertical(r, fam_set, 2, 2)
            t = fam_set.all_base_maps(FinSet(1), m.over)[0]
            assert is_cartesian(fam_set, fam_set.cartesian_lift(t, m.dom), budget=2).is_true

    def test_opcartesian_lifts(self, fam_set):
        I = FinSet(2)
        X = FamObj(I, (FinSet(1), FinSet(2)))
        u = FinMap(I, FinSet(1), (0, 0))
        oc = fam_set.opcart_vert(u, X)
        assert oc.obj.fibers[0].size == 3
        assert is_opcartesian(fam_set, oc.unit, budget=2).is_true


class TestFamCatInstance:
    def test_hom_is_comma_category(self, fam_cat):
        shape = arrow_cat()
        d1 = Diagram(shape, (FinSet(1), FinSet(2)),
                     (identity(FinSet(1)), identity(FinSet(2)),
                      FinMap(FinSet(1), FinSet(2), (0,))))
        d2 = Diagram(shape, (FinSet(2), FinSet(1)),
                     (identity(FinSet(2)), identity(FinSet(1)),
                      FinMap(FinSet(2), FinSet(1), (0, 0))))
        hom = fam_cat.hom_object(d1, d2)
        assert verify_hom_universal(fam_cat, hom, budget=1).is_true

    def test_opcartesian_is_left_kan(self, fam_cat):
        shape = arrow_cat()
        d = Diagram(shape, (FinSet(2), FinSet(1)),
                    (identity(FinSet(2)), identity(FinSet(1)),
                     FinMap(FinSet(2), FinSet(1), (0, 0))))
        oc = fam_cat.opcart_vert(functor_to_terminal(shape), d)
        from fiblift.kernel.kan import left_kan
        lan = left_kan(functor_to_terminal(shape), d)
        assert [s.size for s in oc.obj.on_obj] == [s.size for s in lan.value.on_obj]
        assert is_opcartesian(fam_cat, oc.unit, budget=1).is_true

    def test_non_colimiting_cocone_not_opcartesian(self, fam_cat):
        # the map into a padded target disagrees with the Kan extension
        shape = terminal_cat()
        one = FinSet(1)
        d = Diagram(shape, (one,), (identity(one),))
        padded = Diagram(shape, (FinSet(2),), (identity(FinSet(2)),))
        bad = TotalMor(d, padded, functor_to_terminal(shape),
                       (FinMap(one, FinSet(2), (0,)),))
        assert is_opcartesian(fam_cat, bad, budget=2).is_false


class TestVerticalArrowFibration:
    def test_hom_of_vertical_maps(self, cod, empty_point, two_to_one):
        vf = VerticalArrowFibration(cod)
        hom = vf.hom_object(empty_point, two_to_one)
        assert hom.K.size == 1
        assert verify_hom_universal(vf, hom, budget=1).is_true

    def test_cartesian_iff_levelwise(self, cod, two_to_one):
        # the levelwise cleavage produces cartesian squares, and breaking a
        # level breaks cartesianness (double enumeration)
        vf = VerticalArrowFibration(cod)
        t = FinMap(FinSet(1), FinSet(1), (0,))
        lift = vf.cartesian_lift(t, two_to_one)
        assert is_cartesian(vf, lift, budget=1).is_true
        assert is_cartesian(cod, lift.data.on_dom, budget=1).is_true
        assert is_cartesian(cod, lift.data.on_cod, budget=1).is_true

    def test_vertical_hom_pullback_formula(self, cod, delta0, two_to_one):
        # |Hom(m, f)| agrees with direct enumeration of commuting squares
        vf = VerticalArrowFibration(cod)
        hom = vf.hom_object(delta0, two_to_one)
        count = 0
        for phi in cod.fiber_mors(delta0.dom, two_to_one.dom):
            for psi in cod.fiber_mors(delta0.cod, two_to_one.cod):
                if cod.fiber_compose(two_to_one.map, phi) == cod.fiber_compose(psi, delta0.map):
                    count += 1
        assert hom.K.size == count


@pytest.fixture(scope="module")
def psh():
    return PresheafCodomainFibration(arrow_cat())


class TestPresheafInstance:

    def test_hom_object_universal(self, psh):
        shape = arrow_cat()
        one = FinSet(1)
        I = Diagram(shape, (FinSet(2), one),
                    (identity(FinSet(2)), identity(one),
                     FinMap(FinSet(2), one, (0, 0))))
        Ucar = Diagram(shape, (one, one),
                       (identity(one), identity(one), FinMap(one, one, (0,))))
        u = NatTransData(Ucar, I, (FinMap(one, FinSet(2), (0,)), FinMap(one, one, (0,))))
        v = psh.base_id(I)
        v_disp = NatTransData(I, I, v.components)
        hom = psh.hom_object(u, v_disp)
        assert verify_hom_universal(psh, hom, budget=1).is_true

    def test_coh_and_transport(self, psh):
        shape = arrow_cat()
        one = FinSet(1)
        I = Diagram(shape, (FinSet(2), one),
                    (identity(FinSet(2)), identity(one), FinMap(FinSet(2), one, (0, 0))))
        t = psh.base_to_terminal(I)
        # reindex the identity display two ways and compare through coh
        Y = psh.base_id(psh.base_terminal())
        Y_disp = NatTransData(psh.base_terminal(), psh.base_terminal(), Y.components)
        coh = psh.coh(t, psh.base_id(psh.base_terminal()), Y_disp)
        assert psh.fiber_mor_is_iso(coh)
