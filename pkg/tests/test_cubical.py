"""Cubical ingredients: algebras, lattices, classifiers, Kan structures."""

import pytest

from fiblift.cubical import (
    check_de_morgan_laws,
    check_kleisli_laws,
    check_lattice_laws,
    composition_structures,
    cube_cat_as_fincat,
    cube_cat_trunc,
    dm_free,
    dm_free_size_oracle,
    dm_to_face,
    extensionality_check,
    face_classifier,
    face_lattice,
    face_lattice_size_oracle,
    interval_classifier,
    kan_setup,
    kan_structures,
    quotient_matches_syntactic,
    substitute,
    trivial_classifier,
)
from fiblift.kernel import Diagram, FinMap, FinSet, NatTransData, identity
from fiblift.kernel.fincat import identity_nat


class TestDeMorgan:
    def test_sizes_against_oracle(self):
        assert dm_free(()).size() == dm_free_size_oracle(0) == 2
        assert dm_free(("a",)).size() == dm_free_size_oracle(1) == 6

    def test_two_names_against_oracle(self):
        assert dm_free(("a", "b")).size() == dm_free_size_oracle(2)

    def test_laws(self):
        assert check_de_morgan_laws(dm_free(()))
        assert check_de_morgan_laws(dm_free(("a",)))

    def test_involution(self):
        alg = dm_free(("a",))
        for x in range(alg.size()):
            assert alg.neg(alg.neg(x)) == x

    def test_substitution_homomorphic(self):
        src = dm_free(("a",))
        dst = dm_free(("a", "b"))
        for target in range(dst.size()):
            assign = {"a": target}
            for x in range(src.size()):
                for y in range(src.size()):
                    sm = substitute(src, dst, assign, src.meet(x, y))
                    assert sm == dst.meet(substitute(src, dst, assign, x),
                                          substitute(src, dst, assign, y))
                    sj = substitute(src, dst, assign, src.join(x, y))
                    assert sj == dst.join(substitute(src, dst, assign, x),
                                          substitute(src, dst, assign, y))
                sn = substitute(src, dst, assign, src.neg(x))
                assert sn == dst.neg(substitute(src, dst, assign, x))


class TestFaceLattice:
    def test_sizes_against_oracle(self):
        assert face_lattice(()).size() == face_lattice_size_oracle(0) == 2
        assert face_lattice(("a",)).size() == face_lattice_size_oracle(1) == 5
        assert face_lattice(("a", "b")).size() == face_lattice_size_oracle(2)

    def test_laws(self):
        assert check_lattice_laws(face_lattice(("a",)))
        assert check_lattice_laws(face_lattice(("a", "b")))

    def test_contradictory_faces_collapse(self):
        fl = face_lattice(("a",))
        assert fl.meet(fl.face("a", 0), fl.face("a", 1)) == fl.bottom

    def test_quotient_map_is_lattice_hom(self):
        dm = dm_free(("a",))
        fl = face_lattice(("a",))
        for x in range(dm.size()):
            for y in range(dm.size()):
                assert dm_to_face(dm, fl, dm.meet(x, y)) == \
                    fl.meet(dm_to_face(dm, fl, x), dm_to_face(dm, fl, y))
                assert dm_to_face(dm, fl, dm.join(x, y)) == \
                    fl.join(dm_to_face(dm, fl, x), dm_to_face(dm, fl, y))


class TestCubeCategory:
    def test_kleisli_laws_exhaustive_at_one(self):
        assert check_kleisli_laws(cube_cat_trunc(1)) == "true"

    def test_kleisli_big_instance_reports_not_checked(self):
        assert check_kleisli_laws(cube_cat_trunc(2), triple_cap=1000) == "not-checked"

    def test_fincat_form_validates(self):
        # FinCat construction re-checks identity and associativity densely
        cat, mors = cube_cat_as_fincat(cube_cat_trunc(1))
        assert cat.objects.size == 2
        assert cat.morphisms.size == 1 + 1 + 2 + 6


class TestExtensionality:
    def test_face_classifier_extensional(self):
        cc = cube_cat_trunc(1)
        ok, _ = extensionality_check(face_classifier(cc), stage_bound=1)
        assert ok

    def test_face_classifier_extensional_stage_two(self):
        cc = cube_cat_trunc(2)
        ok, _ = extensionality_check(face_classifier(cc), stage_bound=2)
        assert ok

    def test_interval_fails_with_paper_witness(self):
        cc = cube_cat_trunc(1)
        ok, witness = extensionality_check(interval_classifier(cc, 1), stage_bound=1)
        assert not ok
        stage, x, y = witness
        alg = cc.algebras[stage]
        forms = {alg.elements[x], alg.elements[y]}
        # the witness pair is 0 versus a ∧ ¬a
        assert tuple() in forms
        assert (tuple(sorted([("a", 0), ("a", 1)])),) in forms

    def test_trivial_classifier(self):
        cc = cube_cat_trunc(1)
        ok, _ = extensionality_check(trivial_classifier(cc), stage_bound=1)
        assert ok


class TestQuotientAgreement:
    def test_stages_up_to_two(self):
        assert quotient_matches_syntactic(cube_cat_trunc(2), stage_bound=2)

    def test_stage_one(self):
        assert quotient_matches_syntactic(cube_cat_trunc(1), stage_bound=1)


@pytest.fixture(scope="module")
def setup():
    return kan_setup(1, 1)


class TestKanStructures:

    def test_generating_family_sizes(self, setup):
        # interval +_1 face and interval x face at stages (empty, one name)
        assert [s.size for s in setup.generator.dom.source.on_obj] == [3, 10]
        assert [s.size for s in setup.generator.cod.source.on_obj] == [4, 30]

    def test_iso_has_one_filling(self, setup):
        f = identity_nat(setup.fib.base_terminal())
        rep = kan_structures(f, setup=setup)
        assert rep.count == 1
        assert "truncated" in rep.banner

    def test_empty_fiber_gives_no_filling(self, setup):
        # the endpoint inclusion of a point into the interval: boxes over
        # the generic path have empty fibers away from the endpoint, so
        # enumeration finds no filler
        shape = setup.shape
        one = FinSet(1)
        src = Diagram(shape, (one, one),
                      tuple(FinMap(one, one, (0,))
                            for _ in range(shape.morphisms.size)))
        endpoint_components = tuple(
            FinMap(one, setup.interval.on_obj[c],
                   (setup.cc.algebras[c].bottom,))
            for c in range(shape.objects.size))
        f = NatTransData(src, setup.interval, endpoint_components)
        rep = kan_structures(f, setup=setup)
        assert rep.count == 0

    def test_composition_count_dominates_filling(self, setup):
        f = identity_nat(setup.fib.base_terminal())
        fillings = kan_structures(f, setup=setup)
        compositions = composition_structures(f, setup=setup)
        assert compositions.count >= fillings.count
