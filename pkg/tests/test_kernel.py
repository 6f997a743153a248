"""Kernel operations against their stated examples and oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fiblift.kernel import (
    Diagram,
    FinCat,
    FinMap,
    FinSet,
    FunctorData,
    arrow_cat,
    colimit,
    comma_category,
    constant_diagram,
    coproduct,
    dependent_product,
    discrete_cat,
    empty_cat,
    functor_to_terminal,
    identity,
    identity_functor,
    left_kan,
    parallel_pair_cat,
    presheaf_exponential,
    pullback,
    pushout,
    slice_exponential,
    span_cat,
    terminal_cat,
    verify_pullback,
    verify_pushout,
)
from fiblift.kernel.exponentials import verify_dependent_product_adjunction
from fiblift.kernel.finset import StructureError, all_maps


class TestPullback:
    def test_identity_case(self):
        two = FinSet(2)
        pb = pullback(identity(two), identity(two))
        assert pb.apex.size == 2

    def test_two_by_three_over_point(self):
        # |{(x, y) | f x = g y}| = 6, the enumeration oracle
        f = FinMap(FinSet(2), FinSet(1), (0, 0))
        g = FinMap(FinSet(3), FinSet(1), (0, 0, 0))
        expected = sum(1 for x in range(2) for y in range(3))
        pb = pullback(f, g)
        assert pb.apex.size == expected == 6
        assert verify_pullback(f, g, pb.apex, pb.p0, pb.p1).ok

    def test_constant_section(self):
        two = FinSet(2)
        g = FinMap(FinSet(1), two, (0,))
        pb = pullback(identity(two), g)
        assert pb.apex.size == 1

    def test_cod_mismatch_raises(self):
        f = FinMap(FinSet(1), FinSet(1), (0,))
        g = FinMap(FinSet(1), FinSet(2), (0,))
        with pytest.raises(StructureError):
            pullback(f, g)


class TestPushout:
    def test_empty_span_is_coproduct(self):
        x, y = FinSet(2), FinSet(3)
        f = FinMap(FinSet(0), x, ())
        g = FinMap(FinSet(0), y, ())
        po = pushout(f, g)
        assert po.apex.size == 5

    def test_pushout_along_identity(self):
        z = FinSet(2)
        g = FinMap(z, FinSet(3), (0, 2))
        po = pushout(identity(z), g)
        assert po.apex.size == 3

    def test_singletons_collapse(self):
        one = FinMap(FinSet(1), FinSet(1), (0,))
        po = pushout(one, one)
        assert po.apex.size == 1
        assert verify_pushout(one, one, po.apex, po.i0, po.i1).ok

    def test_dom_mismatch_raises(self):
        f = FinMap(FinSet(1), FinSet(1), (0,))
        g = FinMap(FinSet(2), FinSet(1), (0, 0))
        with pytest.raises(StructureError):
            pushout(f, g)


class TestSliceExponential:
    def test_empty_fibers_give_base(self):
        base = FinSet(3)
        u = FinMap(FinSet(0), base, ())
        v = FinMap(FinSet(2), base, (0, 1))
        exp = slice_exponential(base, u, v)
        assert exp.value.size == base.size

    def test_over_terminal_is_plain_exponential(self):
        base = FinSet(1)
        u = FinMap(FinSet(2), base, (0, 0))
        v = FinMap(FinSet(3), base, (0, 0, 0))
        assert slice_exponential(base, u, v).value.size == 3 ** 2

    def test_fiberwise_sizes(self):
        base = FinSet(2)
        u = FinMap(FinSet(3), base, (0, 1, 1))
        v = FinMap(FinSet(5), base, (0, 0, 1, 1, 1))
        exp = slice_exponential(base, u, v)
        # fibers 2^1 and 3^2, enumerated fiberwise
        assert exp.value.size == 2 + 9


class TestDependentProduct:
    def test_iso_reindexes(self):
        f = FinMap(FinSet(2), FinSet(2), (1, 0))
        g = FinMap(FinSet(3), FinSet(2), (0, 0, 1))
        dp = dependent_product(f, g)
        assert dp.value.size == 3

    def test_empty_fiber_gives_singleton(self):
        f = FinMap(FinSet(0), FinSet(1), ())
        g = FinMap(FinSet(0), FinSet(0), ())
        dp = dependent_product(f, g)
        assert dp.value.size == 1

    def test_section_count(self):
        f = FinMap(FinSet(2), FinSet(1), (0, 0))
        g = FinMap(FinSet(5), FinSet(2), (0, 0, 1, 1, 1))
        dp = dependent_product(f, g)
        assert dp.value.size == 2 * 3

    @given(st.integers(0, 3), st.data())
    @settings(max_examples=25, deadline=None)
    def test_adjunction_bijection(self, wsize, data):
        f_table = data.draw(st.tuples(*[st.integers(0, 1) for _ in range(3)]))
        g_table = data.draw(st.tuples(*[st.integers(0, 2) for _ in range(4)]))
        f = FinMap(FinSet(3), FinSet(2), f_table)
        g = FinMap(FinSet(4), FinSet(3), g_table)
        w_table = data.draw(st.tuples(*[st.integers(0, 1) for _ in range(wsize)]))
        w = FinMap(FinSet(wsize), FinSet(2), w_table)
        assert verify_dependent_product_adjunction(f, g, w)


class TestColimit:
    def test_discrete_is_coproduct(self):
        d = Diagram(discrete_cat(2), (FinSet(2), FinSet(3)),
                    (identity(FinSet(2)), identity(FinSet(3))))
        assert colimit(d).value.size == 5

    def test_arrow_shape_is_codomain(self):
        d = Diagram(arrow_cat(), (FinSet(3), FinSet(2)),
                    (identity(FinSet(3)), identity(FinSet(2)),
                     FinMap(FinSet(3), FinSet(2), (0, 0, 1))))
        assert colimit(d).value.size == 2

    def test_span_of_singletons(self):
        one = FinSet(1)
        d = Diagram(span_cat(), (one, one, one),
                    (identity(one), identity(one), identity(one),
                     FinMap(one, one, (0,)), FinMap(one, one, (0,))))
        assert colimit(d).value.size == 1


class TestComma:
    def test_terminal_functors(self):
        # hom(F*, G*) of size n gives n objects, only identities
        c = parallel_pair_cat()
        t = terminal_cat()
        F = FunctorData(t, c, FinMap(t.objects, c.objects, (0,)),
                        FinMap(t.morphisms, c.morphisms, (0,)))
        G = FunctorData(t, c, FinMap(t.objects, c.objects, (1,)),
                        FinMap(t.morphisms, c.morphisms, (1,)))
        comma = comma_category(F, G)
        assert comma.cat.objects.size == len(c.hom(0, 1)) == 2
        assert comma.cat.morphisms.size == 2

    def test_empty_side(self):
        t = terminal_cat()
        e = empty_cat()
        F = identity_functor(t)
        G = FunctorData(e, t, FinMap(e.objects, t.objects, ()),
                        FinMap(e.morphisms, t.morphisms, ()))
        comma = comma_category(F, G)
        assert comma.cat.objects.size == 0

    def test_identity_on_terminal(self):
        t = terminal_cat()
        comma = comma_category(identity_functor(t), identity_functor(t))
        assert comma.cat.objects.size == 1
        assert comma.cat.morphisms.size == 1

    def test_object_count_formula(self):
        a, c = arrow_cat(), span_cat()
        from fiblift.kernel.fincat import all_functors
        fs = all_functors(a, c)
        F, G = fs[0], fs[-1]
        comma = comma_category(F, G)
        expected = sum(len(c.hom(F.on_obj(x), G.on_obj(y)))
                       for x in range(a.objects.size)
                       for y in range(a.objects.size))
        assert comma.cat.objects.size == expected


class TestLeftKan:
    def test_along_identity(self):
        shape = arrow_cat()
        d = Diagram(shape, (FinSet(2), FinSet(1)),
                    (identity(FinSet(2)), identity(FinSet(1)),
                     FinMap(FinSet(2), FinSet(1), (0, 0))))
        lan = left_kan(identity_functor(shape), d)
        assert [s.size for s in lan.value.on_obj] == [2, 1]
        assert all(u.is_iso() for u in lan.unit)

    def test_into_terminal_is_colimit(self):
        shape = span_cat()
        one = FinSet(1)
        d = Diagram(shape, (one, FinSet(2), FinSet(2)),
                    (identity(one), identity(FinSet(2)), identity(FinSet(2)),
                     FinMap(one, FinSet(2), (0,)), FinMap(one, FinSet(2), (1,))))
        lan = left_kan(functor_to_terminal(shape), d)
        assert lan.value.on_obj[0].size == colimit(d).value.size == 3

    def test_collapse_two_points(self):
        a = discrete_cat(2)
        b = terminal_cat()
        F = FunctorData(a, b, FinMap(a.objects, b.objects, (0, 0)),
                        FinMap(a.morphisms, b.morphisms, (0, 0)))
        d = Diagram(a, (FinSet(2), FinSet(3)),
                    (identity(FinSet(2)), identity(FinSet(3))))
        lan = left_kan(F, d)
        assert lan.value.on_obj[0].size == 5


class TestPresheafExponential:
    def test_terminal_exponent(self):
        shape = arrow_cat()
        y = Diagram(shape, (FinSet(2), FinSet(3)),
                    (identity(FinSet(2)), identity(FinSet(3)),
                     FinMap(FinSet(2), FinSet(3), (0, 2))))
        exp = presheaf_exponential(shape, constant_diagram(shape, FinSet(1)), y)
        assert [s.size for s in exp.value.on_obj] == [2, 3]

    def test_terminal_target(self):
        shape = arrow_cat()
        x = Diagram(shape, (FinSet(2), FinSet(1)),
                    (identity(FinSet(2)), identity(FinSet(1)),
                     FinMap(FinSet(2), FinSet(1), (0, 0))))
        exp = presheaf_exponential(shape, x, constant_diagram(shape, FinSet(1)))
        assert all(s.size == 1 for s in exp.value.on_obj)

    def test_representable_self_exponent(self):
        shape = arrow_cat()
        one = FinSet(1)
        rep = Diagram(shape, (one, one),
                      (identity(one), identity(one), FinMap(one, one, (0,))))
        exp = presheaf_exponential(shape, rep, rep)
        assert [s.size for s in exp.value.on_obj] == [1, 1]


class TestCategoryLaws:
    @pytest.mark.parametrize("cat", [terminal_cat(), discrete_cat(3), arrow_cat(),
                                     span_cat(), parallel_pair_cat()])
    def test_corpus_categories_validate(self, cat):
        assert isinstance(cat, FinCat)

    def test_op_involution(self):
        c = span_cat()
        assert c.op().op() == c
