"""Category-indexed families of finite sets (diagrams over small categories).

Objects over a small category A are set-valued diagrams on A; vertical
maps are natural transformations.  Reindexing is composition (a split
cleavage), opcartesian lifts are pointwise left Kan extensions, and the
hom object is the comma category of the two diagrams.

The base Cat is infinite, so verifier enumerations quantify over a fixed
corpus of categories with at most three objects.
"""

from __future__ import annotations

import itertools

from ..kernel.fincat import (
    Diagram,
    FinCat,
    FunctorData,
    NOT_COMPOSABLE,
    all_functors,
    arrow_cat,
    discrete_cat,
    functor_to_terminal,
    identity_functor,
    parallel_pair_cat,
    span_cat,
    terminal_cat,
)
from ..kernel.finset import FinMap, FinSet, StructureError, all_maps, identity
from ..kernel.kan import diagram_comma, lan_induce, left_kan
from ..kernel.limits import coequalizer, coproduct, pushout
from .base import (
    BasePullback,
    FiberCoequalizer,
    FiberCoproduct,
    FiberPushout,
    Fibration,
    HomObject,
    OpcartData,
    TotalMor,
)


def corpus_categories() -> list[FinCat]:
    return [terminal_cat(), discrete_cat(2), arrow_cat(), span_cat(), parallel_pair_cat()]


def all_diagrams(shape: FinCat, budget: int) -> list[Diagram]:
    """All diagrams on the shape with every value of size <= budget."""
    out = []
    nobj = shape.objects.size
    for sizes in itertools.product(range(budget + 1), repeat=nobj):
        values = tuple(FinSet(n) for n in sizes)
        per_mor = []
        feasible = True
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            if m == shape.id_(a) and a == b:
                per_mor.append([identity(values[a])])
                continue
            cands = list(all_maps(values[a], values[b]))
            if not cands:
                feasible = False
                break
            per_mor.append(cands)
        if not feasible:
            continue
        for combo in itertools.product(*per_mor):
            try:
                out.append(Diagram(shape, values, tuple(combo)))
            except StructureError:
                continue
    return out


class FamCatFibration(Fibration):
    kind = "fam_cat"

    # --- base: small categories and functors -------------------------------
    def base_id(self, I):
        return identity_functor(I)

    def base_compose(self, g, f):
        return g.compose(f)

    def base_dom(self, u):
        return u.dom

    def base_cod(self, u):
        return u.cod

    def base_is_iso(self, u):
        return u.on_obj.is_iso() and u.on_mor.is_iso()

    def base_terminal(self):
        return terminal_cat()

    def base_to_terminal(self, I):
        return functor_to_terminal(I)

    def base_pullback(self, f, g):
        A, B = f.dom, g.dom
        objs = tuple(sorted(
            (a, b)
            for a in range(A.objects.size)
            for b in range(B.objects.size)
            if f.on_obj(a) == g.on_obj(b)
        ))
        obj_index = {k: i for i, k in enumerate(objs)}
        mors = tuple(sorted(
            (al, be)
            for al in range(A.morphisms.size)
            for be in range(B.morphisms.size)
            if f.on_mor(al) == g.on_mor(be)
        ))
        mor_index = {k: i for i, k in enumerate(mors)}
        obj_fs, mor_fs = FinSet(len(objs)), FinSet(len(mors))
        src = FinMap(mor_fs, obj_fs, tuple(obj_index[(A.src(al), B.src(be))] for al, be in mors))
        tgt = FinMap(mor_fs, obj_fs, tuple(obj_index[(A.tgt(al), B.tgt(be))] for al, be in mors))
        id_ = FinMap(obj_fs, mor_fs, tuple(mor_index[(A.id_(a), B.id_(b))] for a, b in objs))
        comp = [[NOT_COMPOSABLE] * len(mors) for _ in mors]
        for gi, (ga, gb) in enumerate(mors):
            for fi, (fa, fb) in enumerate(mors):
                if (A.tgt(fa), B.tgt(fb)) != (A.src(ga), B.src(gb)):
                    continue
                comp[gi][fi] = mor_index[(A.compose(ga, fa), B.compose(gb, fb))]
        cat = FinCat(obj_fs, mor_fs, src, tgt, id_, tuple(tuple(r) for r in comp))
        p0 = FunctorData(cat, A,
                         FinMap(obj_fs, A.objects, tuple(a for a, _ in objs)),
                         FinMap(mor_fs, A.morphisms, tuple(al for al, _ in mors)))
        p1 = FunctorData(cat, B,
                         FinMap(obj_fs, B.objects, tuple(b for _, b in objs)),
                         FinMap(mor_fs, B.morphisms, tuple(be for _, be in mors)))

        def pair(u: FunctorData, v: FunctorData, cat=cat, obj_index=obj_index, mor_index=mor_index):
            on_obj = FinMap(u.dom.objects, cat.objects,
                            tuple(obj_index[(u.on_obj(w), v.on_obj(w))]
                                  for w in range(u.dom.objects.size)))
            on_mor = FinMap(u.dom.morphisms, cat.morphisms,
                            tuple(mor_index[(u.on_mor(w), v.on_mor(w))]
                                  for w in range(u.dom.morphisms.size)))
            return FunctorData(u.dom, cat, on_obj, on_mor)

        return BasePullback(cat, p0, p1, pair)

    def all_base_maps(self, A, B):
        return all_functors(A, B)

    def enumerate_base_objects(self, budget):
        return [c for c in corpus_categories() if c.objects.size <= max(1, min(3, budget))]

    # --- total objects: diagrams -------------------------------------------
    def obj_over(self, X):
        return X.shape

    def validate_total(self, X):
        if not isinstance(X, Diagram):
            raise StructureError("fam_cat total object must be a Diagram")

    def total_id(self, X):
        return TotalMor(X, X, identity_functor(X.shape),
                        tuple(identity(s) for s in X.on_obj))

    def total_compose(self, g, f):
        if f.dst != g.src:
            raise StructureError("total composition mismatch")
        comps = tuple(g.data[f.base.on_obj(a)].compose(f.data[a])
                      for a in range(f.src.shape.objects.size))
        return TotalMor(f.src, g.dst, g.base.compose(f.base), comps)

    def _mors_over(self, X, Y, F, constraints=None):
        """Natural families c_a: X(a) -> Y(F a); constraints(a) limits tables."""
        A = X.shape
        per_obj = []
        for a in range(A.objects.size):
            cands = constraints(a) if constraints else list(all_maps(X.on_obj[a], Y.on_obj[F.on_obj(a)]))
            per_obj.append(cands)
        out = []
        assignment = [None] * A.objects.size

        def natural_so_far(upto):
            for m in range(A.morphisms.size):
                a, b = A.src(m), A.tgt(m)
                if assignment[a] is None or assignment[b] is None:
                    continue
                left = assignment[b].compose(X.on_mor[m])
                right = Y.on_mor[F.on_mor(m)].compose(assignment[a])
                if left.table != right.table:
                    return False
            return True

        def backtrack(a):
            if a == A.objects.size:
                out.append(TotalMor(X, Y, F, tuple(assignment)))
                return
            for cand in per_obj[a]:
                assignment[a] = cand
                if natural_so_far(a):
                    backtrack(a + 1)
            assignment[a] = None

        backtrack(0)
        return out

    def total_mors_over(self, X, Y, u):
        return self._mors_over(X, Y, u)

    def enumerate_total_objects_over(self, I, budget):
        return all_diagrams(I, budget)

    # --- cleavage ------------------------------------------------------------
    def reindex(self, u, Y):
        return Y.restrict_along(u)

    def cartesian_lift(self, u, Y):
        rx = self.reindex(u, Y)
        return TotalMor(rx, Y, u, tuple(identity(s) for s in rx.on_obj))

    def reindex_fmor(self, u, phi):
        return TotalMor(self.reindex(u, phi.src), self.reindex(u, phi.dst),
                        identity_functor(u.dom),
                        tuple(phi.data[u.on_obj(k)] for k in range(u.dom.objects.size)))

    def coh(self, t, u, Y):
        obj = self.reindex(u.compose(t), Y)
        return self.total_id(obj)

    def opcart_vert(self, u, X):
        lan = left_kan(u, X)

        def induce(g: TotalMor, lan=lan, u=u, X=X):
            nat = lan_induce(u, X, lan, g.dst, list(g.data))
            return TotalMor(lan.value, g.dst, identity_functor(u.cod), tuple(nat.components))

        unit = TotalMor(X, lan.value, u, lan.unit)
        return OpcartData(lan.value, unit, induce)

    def vertical_part(self, u, g):
        target = self.reindex(u, g.dst)
        return TotalMor(g.src, target, identity_functor(u.dom), g.data)

    def fiber_pullback(self, f, g):
        from ..kernel.limits import pullback, pair_into_pullback
        shape = f.src.shape
        pbs = [pullback(f.data[a], g.data[a]) for a in range(shape.objects.size)]
        on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            on_mor.append(pair_into_pullback(
                pbs[b],
                f.src.on_mor[m].compose(pbs[a].p0),
                g.src.on_mor[m].compose(pbs[a].p1)))
        obj = Diagram(shape, tuple(p.apex for p in pbs), tuple(on_mor))
        ident = identity_functor(shape)
        return (obj,
                TotalMor(obj, f.src, ident, tuple(p.p0 for p in pbs)),
                TotalMor(obj, g.src, ident, tuple(p.p1 for p in pbs)),
                lambda u_, v_, pbs=pbs, obj=obj: TotalMor(
                    u_.src, obj, ident,
                    tuple(pair_into_pullback(p, u_.data[a], v_.data[a])
                          for a, p in enumerate(pbs))))

    # --- fibers -----------------------------------------------------------------
    def fiber_mors(self, X, Y):
        return self._mors_over(X, Y, identity_functor(X.shape))

    def fiber_mor_is_iso(self, phi):
        return all(c.is_iso() for c in phi.data)

    def fiber_invert(self, phi):
        return TotalMor(phi.dst, phi.src, phi.base, tuple(c.inverse() for c in phi.data))

    def fiber_fillers(self, mmap, fmap, top, bot):
        A = mmap.src.shape

        def constraints(a):
            B, C = mmap.dst.on_obj[a], fmap.src.on_obj[a]
            forced: dict[int, int] = {}
            for x in range(mmap.src.on_obj[a].size):
                b = mmap.data[a](x)
                want = top.data[a](x)
                if forced.get(b, want) != want:
                    return []
                forced[b] = want
            choices = []
            for b in range(B.size):
                if b in forced:
                    c = forced[b]
                    if fmap.data[a](c) != bot.data[a](b):
                        return []
                    choices.append([c])
                else:
                    cands = [c for c in range(C.size) if fmap.data[a](c) == bot.data[a](b)]
                    if not cands:
                        return []
                    choices.append(cands)
            return [FinMap(B, C, t) for t in itertools.product(*choices)]

        return self._mors_over(mmap.dst, fmap.src, identity_functor(A), constraints)

    def fiber_initial(self, I):
        zero = FinSet(0)
        return Diagram(I, tuple(zero for _ in range(I.objects.size)),
                       tuple(FinMap(zero, zero, ()) for _ in range(I.morphisms.size)))

    def fiber_coproduct(self, X, Y):
        shape = X.shape
        cps = [coproduct(X.on_obj[a], Y.on_obj[a]) for a in range(shape.objects.size)]
        on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            on_mor.append(cps[a].case(X.on_mor[m].then(cps[b].in0),
                                      Y.on_mor[m].then(cps[b].in1)))
        obj = Diagram(shape, tuple(c.apex for c in cps), tuple(on_mor))
        ident = identity_functor(shape)
        return FiberCoproduct(
            obj,
            TotalMor(X, obj, ident, tuple(c.in0 for c in cps)),
            TotalMor(Y, obj, ident, tuple(c.in1 for c in cps)),
            lambda u, v, cps=cps, obj=obj, ident=ident: TotalMor(
                obj, u.dst, ident,
                tuple(c.case(u.data[a], v.data[a]) for a, c in enumerate(cps))),
        )

    def fiber_pushout(self, f, g):
        shape = f.src.shape
        pos = [pushout(f.data[a], g.data[a]) for a in range(shape.objects.size)]
        on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            on_mor.append(pos[a].induce(f.dst.on_mor[m].then(pos[b].i0),
                                        g.dst.on_mor[m].then(pos[b].i1)))
        obj = Diagram(shape, tuple(p.apex for p in pos), tuple(on_mor))
        ident = identity_functor(shape)
        return FiberPushout(
            obj,
            TotalMor(f.dst, obj, ident, tuple(p.i0 for p in pos)),
            TotalMor(g.dst, obj, ident, tuple(p.i1 for p in pos)),
            lambda u, v, pos=pos, obj=obj, ident=ident: TotalMor(
                obj, u.dst, ident,
                tuple(p.induce(u.data[a], v.data[a]) for a, p in enumerate(pos))),
        )

    def fiber_coequalizer(self, f, g):
        shape = f.src.shape
        ces = [coequalizer(f.data[a], g.data[a]) for a in range(shape.objects.size)]
        on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            on_mor.append(ces[a].induce(f.dst.on_mor[m].then(ces[b].q)))
        obj = Diagram(shape, tuple(c.apex for c in ces), tuple(on_mor))
        ident = identity_functor(shape)
        return FiberCoequalizer(
            obj,
            TotalMor(f.dst, obj, ident, tuple(c.q for c in ces)),
            lambda u, ces=ces, obj=obj, ident=ident: TotalMor(
                obj, u.dst, ident, tuple(c.induce(u.data[a]) for a, c in enumerate(ces))),
        )

    # --- hom objects ---------------------------------------------------------------
    def hom_object(self, X, Y):
        comma = diagram_comma(X, Y)
        K = comma.cat
        sigma, tau = comma.proj0, comma.proj1
        src = self.reindex(sigma, X)
        dst = self.reindex(tau, Y)
        comps = tuple(
            FinMap(src.on_obj[i], dst.on_obj[i], comma.obj_keys[i][2])
            for i in range(K.objects.size)
        )
        huniv = TotalMor(src, dst, identity_functor(K), comps)
        hom = HomObject(K, sigma, tau, X, Y, src, dst, huniv)
        object.__setattr__(hom, "_comma", comma)
        return hom

    def hom_classify(self, hom: HomObject, Kp, sigmap, taup, hp: TotalMor):
        comma = hom._comma
        obj_index = {(k[0], k[1], k[2]): i for i, k in enumerate(comma.obj_keys)}
        mor_index = {k: i for i, k in enumerate(comma.mor_keys)}
        on_obj = tuple(
            obj_index[(sigmap.on_obj(k), taup.on_obj(k), hp.data[k].table)]
            for k in range(Kp.objects.size)
        )
        on_mor = tuple(
            mor_index[(on_obj[Kp.src(m)], on_obj[Kp.tgt(m)], sigmap.on_mor(m), taup.on_mor(m))]
            for m in range(Kp.morphisms.size)
        )
        return FunctorData(Kp, hom.K,
                           FinMap(Kp.objects, hom.K.objects, on_obj),
                           FinMap(Kp.morphisms, hom.K.morphisms, on_mor))

    def hom_post(self, X, g, hom_xy: HomObject, hom_xy2: HomObject):
        comma, comma2 = hom_xy._comma, hom_xy2._comma
        obj_index = {(k[0], k[1], k[2]): i for i, k in enumerate(comma2.obj_keys)}
        mor_index = {k: i for i, k in enumerate(comma2.mor_keys)}
        on_obj = []
        for (a, b, tbl, xa, yb) in comma.obj_keys:
            tbl2 = tuple(g.data[b](y) for y in tbl)
            on_obj.append(obj_index[(a, b, tbl2)])
        on_mor = []
        for (s, t, al, be) in comma.mor_keys:
            on_mor.append(mor_index[(on_obj[s], on_obj[t], al, be)])
        return FunctorData(hom_xy.K, hom_xy2.K,
                           FinMap(hom_xy.K.objects, hom_xy2.K.objects, tuple(on_obj)),
                           FinMap(hom_xy.K.morphisms, hom_xy2.K.morphisms, tuple(on_mor)))

    def hom_pre(self, h, Y, hom_xy: HomObject, hom_x2y: HomObject):
        comma, comma2 = hom_xy._comma, hom_x2y._comma
        X2 = h.src
        obj_index = {(k[0], k[1], k[2]): i for i, k in enumerate(comma2.obj_keys)}
        mor_index = {k: i for i, k in enumerate(comma2.mor_keys)}
        on_obj = []
        for (a, b, tbl, xa, yb) in comma.obj_keys:
            tbl2 = tuple(tbl[h.data[a](x2)] for x2 in range(X2.on_obj[a].size))
            on_obj.append(obj_index[(a, b, tbl2)])
        on_mor = []
        for (s, t, al, be) in comma.mor_keys:
            on_mor.append(mor_index[(on_obj[s], on_obj[t], al, be)])
        return FunctorData(hom_xy.K, hom_x2y.K,
                           FinMap(hom_xy.K.objects, hom_x2y.K.objects, tuple(on_obj)),
                           FinMap(hom_xy.K.morphisms, hom_x2y.K.morphisms, tuple(on_mor)))
