"""Codomain fibration of finite presheaves over a fixed finite index category.

Presheaves are represented covariantly: a presheaf on a site S is a
Diagram over the shape D = S^op.  Everything is the pointwise version of
the plain codomain instance except hom objects, which go through the
category of elements: Psh(D)/I is equivalent to Psh(∫I), where the slice
exponential is an ordinary presheaf exponential.
"""

from __future__ import annotations

import itertools

from ..kernel.exponentials import presheaf_exponential
from ..kernel.fincat import Diagram, FinCat, NatTransData, NOT_COMPOSABLE
from ..kernel.finset import FinMap, FinSet, StructureError, all_maps, identity
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


def _pointwise_pullback(f: NatTransData, g: NatTransData):
    """Pointwise pairs presheaf with projections; returns (diagram, pairs, p0, p1)."""
    shape = f.source.shape
    pairs = []
    values = []
    for c in range(shape.objects.size):
        ps = tuple((x, y)
                   for x in range(f.source.on_obj[c].size)
                   for y in range(g.source.on_obj[c].size)
                   if f.components[c](x) == g.components[c](y))
        pairs.append(ps)
        values.append(FinSet(len(ps)))
    on_mor = []
    for m in range(shape.morphisms.size):
        a, b = shape.src(m), shape.tgt(m)
        table = tuple(
            pairs[b].index((f.source.on_mor[m](x), g.source.on_mor[m](y)))
            for (x, y) in pairs[a]
        )
        on_mor.append(FinMap(values[a], values[b], table))
    diagram = Diagram(shape, tuple(values), tuple(on_mor))
    p0 = NatTransData(diagram, f.source,
                      tuple(FinMap(values[c], f.source.on_obj[c],
                                   tuple(x for (x, _) in pairs[c]))
                            for c in range(shape.objects.size)))
    p1 = NatTransData(diagram, g.source,
                      tuple(FinMap(values[c], g.source.on_obj[c],
                                   tuple(y for (_, y) in pairs[c]))
                            for c in range(shape.objects.size)))
    return diagram, tuple(pairs), p0, p1


def elements_category(I: Diagram):
    """The category of elements ∫I with its object/morphism decode keys."""
    shape = I.shape
    objs = tuple(sorted((c, i) for c in range(shape.objects.size)
                        for i in range(I.on_obj[c].size)))
    obj_index = {k: n for n, k in enumerate(objs)}
    mors = []
    for n, (c, i) in enumerate(objs):
        for m in range(shape.morphisms.size):
            if shape.src(m) != c:
                continue
            d = shape.tgt(m)
            mors.append((n, obj_index[(d, I.on_mor[m](i))], m))
    mors = tuple(sorted(mors))
    mor_index = {k: n for n, k in enumerate(mors)}
    obj_fs, mor_fs = FinSet(len(objs)), FinSet(len(mors))
    src = FinMap(mor_fs, obj_fs, tuple(k[0] for k in mors))
    tgt = FinMap(mor_fs, obj_fs, tuple(k[1] for k in mors))
    id_ = FinMap(obj_fs, mor_fs,
                 tuple(mor_index[(n, n, shape.id_(c))] for n, (c, i) in enumerate(objs)))
    comp = [[NOT_COMPOSABLE] * len(mors) for _ in mors]
    for gi, (gs, gt, gm) in enumerate(mors):
        for fi, (fs, ft, fm) in enumerate(mors):
            if ft != gs:
                continue
            comp[gi][fi] = mor_index[(fs, gt, shape.compose(gm, fm))]
    cat = FinCat(obj_fs, mor_fs, src, tgt, id_, tuple(tuple(r) for r in comp))
    return cat, objs, obj_index, mors, mor_index


def to_elements(I: Diagram, u: NatTransData, el_cat, el_objs, el_mors):
    """Present u: U -> I as a presheaf over ∫I; fibers keep their U-element decode."""
    fibers = []
    for (c, i) in el_objs:
        fibers.append(tuple(x for x in range(u.source.on_obj[c].size)
                            if u.components[c](x) == i))
    values = tuple(FinSet(len(f)) for f in fibers)
    on_mor = []
    for (s, t, m) in el_mors:
        table = tuple(fibers[t].index(u.source.on_mor[m](x)) for x in fibers[s])
        on_mor.append(FinMap(values[s], values[t], table))
    return Diagram(el_cat, values, tuple(on_mor)), tuple(fibers)


class PresheafCodomainFibration(Fibration):
    kind = "presheaf_codomain"

    def __init__(self, shape: FinCat):
        self.shape = shape

    # --- base: presheaves over the shape ---------------------------------
    def base_id(self, I):
        from ..kernel.fincat import identity_nat
        return identity_nat(I)

    def base_compose(self, g, f):
        return g.compose(f)

    def base_dom(self, u):
        return u.source

    def base_cod(self, u):
        return u.target

    def base_is_iso(self, u):
        return u.is_iso()

    def base_terminal(self):
        one = FinSet(1)
        return Diagram(self.shape, tuple(one for _ in range(self.shape.objects.size)),
                       tuple(identity(one) for _ in range(self.shape.morphisms.size)))

    def base_to_terminal(self, I):
        t = self.base_terminal()
        return NatTransData(I, t, tuple(
            FinMap(I.on_obj[c], FinSet(1), tuple(0 for _ in range(I.on_obj[c].size)))
            for c in range(self.shape.objects.size)))

    def base_pullback(self, f, g):
        diagram, pairs, p0, p1 = _pointwise_pullback(f, g)

        def pair(u: NatTransData, v: NatTransData, diagram=diagram, pairs=pairs):
            comps = tuple(
                FinMap(u.source.on_obj[c], diagram.on_obj[c],
                       tuple(pairs[c].index((u.components[c](w), v.components[c](w)))
                             for w in range(u.source.on_obj[c].size)))
                for c in range(self.shape.objects.size))
            return NatTransData(u.source, diagram, comps)

        return BasePullback(diagram, p0, p1, pair)

    def all_base_maps(self, A, B):
        from ..kernel.fincat import all_nat_trans
        return all_nat_trans(A, B)

    def enumerate_base_objects(self, budget):
        from .fam_cat import all_diagrams
        return all_diagrams(self.shape, budget)

    # --- total objects: presheaf maps u: U -> I ----------------------------
    def obj_over(self, X):
        return X.target

    def validate_total(self, X):
        if not isinstance(X, NatTransData):
            raise StructureError("presheaf total object must be a NatTransData display")

    def total_id(self, X):
        return TotalMor(X, X, self.base_id(X.target),
                        tuple(identity(s) for s in X.source.on_obj))

    def total_compose(self, g, f):
        if f.dst != g.src:
            raise StructureError("total composition mismatch")
        comps = tuple(g.data[c].compose(f.data[c]) for c in range(self.shape.objects.size))
        return TotalMor(f.src, g.dst, g.base.compose(f.base), comps)

    def total_mors_over(self, X, Y, u):
        def constraints(c):
            target_over = X.components[c].then(u.components[c])
            choices = [
                [y for y in range(Y.source.on_obj[c].size)
                 if Y.components[c](y) == target_over(x)]
                for x in range(X.source.on_obj[c].size)
            ]
            if any(not ch for ch in choices):
                return []
            return [FinMap(X.source.on_obj[c], Y.source.on_obj[c], t)
                    for t in itertools.product(*choices)]
        return self._natural_mors(X, Y, u, constraints)

    def _natural_mors(self, X, Y, base, constraints):
        shape = self.shape
        per_obj = [constraints(c) for c in range(shape.objects.size)]
        out = []
        assignment = [None] * shape.objects.size

        def natural_so_far():
            for m in range(shape.morphisms.size):
                a, b = shape.src(m), shape.tgt(m)
                if assignment[a] is None or assignment[b] is None:
                    continue
                left = assignment[b].compose(X.source.on_mor[m])
                right = Y.source.on_mor[m].compose(assignment[a])
                if left.table != right.table:
                    return False
            return True

        def backtrack(c):
            if c == shape.objects.size:
                out.append(TotalMor(X, Y, base, tuple(assignment)))
                return
            for cand in per_obj[c]:
                assignment[c] = cand
                if natural_so_far():
                    backtrack(c + 1)
            assignment[c] = None

        backtrack(0)
        return out

    def enumerate_total_objects_over(self, I, budget):
        from .fam_cat import all_diagrams
        from ..kernel.fincat import all_nat_trans
        out = []
        for U in all_diagrams(self.shape, budget):
            out.extend(all_nat_trans(U, I))
        return out

    # --- cleavage -----------------------------------------------------------
    def reindex(self, u, Y):
        pb = self.base_pullback(u, Y)
        return pb.p0

    def reindex_pairs(self, u, Y):
        _, pairs, _, _ = _pointwise_pullback(u, Y)
        return pairs

    def cartesian_lift(self, u, Y):
        diagram, pairs, p0, p1 = _pointwise_pullback(u, Y)
        return TotalMor(p0, Y, u, tuple(p1.components))

    def reindex_fmor(self, u, phi):
        src_d, src_pairs, src_p0, _ = _pointwise_pullback(u, phi.src)
        dst_d, dst_pairs, dst_p0, _ = _pointwise_pullback(u, phi.dst)
        comps = tuple(
            FinMap(src_d.on_obj[c], dst_d.on_obj[c],
                   tuple(dst_pairs[c].index((k, phi.data[c](y)))
                         for (k, y) in src_pairs[c]))
            for c in range(self.shape.objects.size))
        return TotalMor(src_p0, dst_p0, self.base_id(u.source), comps)

    def coh(self, t, u, Y):
        ut = u.compose(t)
        src_d, src_pairs, src_p0, _ = _pointwise_pullback(ut, Y)
        mid_d, mid_pairs, mid_p0, _ = _pointwise_pullback(u, Y)
        dst_d, dst_pairs, dst_p0, _ = _pointwise_pullback(t, mid_p0)
        comps = []
        for c in range(self.shape.objects.size):
            table = tuple(
                dst_pairs[c].index((kp, mid_pairs[c].index((t.components[c](kp), y))))
                for (kp, y) in src_pairs[c])
            comps.append(FinMap(src_d.on_obj[c], dst_d.on_obj[c], table))
        return TotalMor(src_p0, dst_p0, self.base_id(t.source), tuple(comps))

    def opcart_vert(self, u, X):
        lifted = u.compose(X)

        def induce(g: TotalMor, lifted=lifted, u=u):
            return TotalMor(lifted, g.dst, self.base_id(u.target), g.data)

        return OpcartData(lifted, TotalMor(X, lifted, u,
                                           tuple(identity(s) for s in X.source.on_obj)),
                          induce)

    def vertical_part(self, u, g):
        _, pairs, p0, _ = _pointwise_pullback(u, g.dst)
        comps = tuple(
            FinMap(g.src.source.on_obj[c], p0.source.on_obj[c],
                   tuple(pairs[c].index((g.src.components[c](z), g.data[c](z)))
                         for z in range(g.src.source.on_obj[c].size)))
            for c in range(self.shape.objects.size))
        return TotalMor(g.src, p0, self.base_id(u.source), comps)

    def fiber_pullback(self, f, g):
        from ..kernel.limits import pullback, pair_into_pullback
        shape = self.shape
        pbs = [pullback(f.data[c], g.data[c]) for c in range(shape.objects.size)]
        on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            on_mor.append(pair_into_pullback(
                pbs[b],
                f.src.source.on_mor[m].compose(pbs[a].p0),
                g.src.source.on_mor[m].compose(pbs[a].p1)))
        carrier = Diagram(shape, tuple(p.apex for p in pbs), tuple(on_mor))
        disp = NatTransData(carrier, f.src.target, tuple(
            f.src.components[c].compose(pbs[c].p0) for c in range(shape.objects.size)))
        ident = self.base_id(f.src.target)
        return (disp,
                TotalMor(disp, f.src, ident, tuple(p.p0 for p in pbs)),
                TotalMor(disp, g.src, ident, tuple(p.p1 for p in pbs)),
                lambda u_, v_, pbs=pbs, disp=disp: TotalMor(
                    u_.src, disp, ident,
                    tuple(pair_into_pullback(p, u_.data[c], v_.data[c])
                          for c, p in enumerate(pbs))))

    # --- fibers -----------------------------------------------------------------
    def fiber_mors(self, X, Y):
        return self.total_mors_over(X, Y, self.base_id(X.target))

    def fiber_mor_is_iso(self, phi):
        return all(c.is_iso() for c in phi.data)

    def fiber_invert(self, phi):
        return TotalMor(phi.dst, phi.src, phi.base, tuple(c.inverse() for c in phi.data))

    def fiber_fillers(self, mmap, fmap, top, bot):
        def constraints(c):
            B, C = mmap.dst.source.on_obj[c], fmap.src.source.on_obj[c]
            forced: dict[int, int] = {}
            for a in range(mmap.src.source.on_obj[c].size):
                b = mmap.data[c](a)
                want = top.data[c](a)
                if forced.get(b, want) != want:
                    return []
                forced[b] = want
            choices = []
            for b in range(B.size):
                if b in forced:
                    cc = forced[b]
                    if fmap.data[c](cc) != bot.data[c](b):
                        return []
                    choices.append([cc])
                else:
                    cands = [cc for cc in range(C.size) if fmap.data[c](cc) == bot.data[c](b)]
                    if not cands:
                        return []
                    choices.append(cands)
            return [FinMap(B, C, t) for t in itertools.product(*choices)]
        return self._natural_mors(mmap.dst, fmap.src, self.base_id(mmap.src.target), constraints)

    def fiber_initial(self, I):
        zero = FinSet(0)
        empty = Diagram(self.shape, tuple(zero for _ in range(self.shape.objects.size)),
                        tuple(FinMap(zero, zero, ()) for _ in range(self.shape.morphisms.size)))
        return NatTransData(empty, I, tuple(FinMap(zero, I.on_obj[c], ())
                                            for c in range(self.shape.objects.size)))

    def fiber_coproduct(self, X, Y):
        shape = self.shape
        cps = [coproduct(X.source.on_obj[c], Y.source.on_obj[c])
               for c in range(shape.objects.size)]
        on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            on_mor.append(cps[a].case(X.source.on_mor[m].then(cps[b].in0),
                                      Y.source.on_mor[m].then(cps[b].in1)))
        carrier = Diagram(shape, tuple(c.apex for c in cps), tuple(on_mor))
        disp = NatTransData(carrier, X.target, tuple(
            cps[c].case(X.components[c], Y.components[c])
            for c in range(shape.objects.size)))
        ident = self.base_id(X.target)
        return FiberCoproduct(
            disp,
            TotalMor(X, disp, ident, tuple(c.in0 for c in cps)),
            TotalMor(Y, disp, ident, tuple(c.in1 for c in cps)),
            lambda u, v, cps=cps, disp=disp, ident=ident: TotalMor(
                disp, u.dst, ident,
                tuple(c.case(u.data[i], v.data[i]) for i, c in enumerate(cps))),
        )

    def fiber_pushout(self, f, g):
        shape = self.shape
        pos = [pushout(f.data[c], g.data[c]) for c in range(shape.objects.size)]
        on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            on_mor.append(pos[a].induce(f.dst.source.on_mor[m].then(pos[b].i0),
                                        g.dst.source.on_mor[m].then(pos[b].i1)))
        carrier = Diagram(shape, tuple(p.apex for p in pos), tuple(on_mor))
        disp = NatTransData(carrier, f.src.target, tuple(
            pos[c].induce(f.dst.components[c], g.dst.components[c])
            for c in range(shape.objects.size)))
        ident = self.base_id(f.src.target)
        return FiberPushout(
            disp,
            TotalMor(f.dst, disp, ident, tuple(p.i0 for p in pos)),
            TotalMor(g.dst, disp, ident, tuple(p.i1 for p in pos)),
            lambda u, v, pos=pos, disp=disp, ident=ident: TotalMor(
                disp, u.dst, ident,
                tuple(p.induce(u.data[i], v.data[i]) for i, p in enumerate(pos))),
        )

    def fiber_coequalizer(self, f, g):
        shape = self.shape
        ces = [coequalizer(f.data[c], g.data[c]) for c in range(shape.objects.size)]
        on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            on_mor.append(ces[a].induce(f.dst.source.on_mor[m].then(ces[b].q)))
        carrier = Diagram(shape, tuple(c.apex for c in ces), tuple(on_mor))
        disp = NatTransData(carrier, f.src.target, tuple(
            ces[c].induce(f.dst.components[c]) for c in range(shape.objects.size)))
        ident = self.base_id(f.src.target)
        return FiberCoequalizer(
            disp,
            TotalMor(f.dst, disp, ident, tuple(c.q for c in ces)),
            lambda u, ces=ces, disp=disp, ident=ident: TotalMor(
                disp, u.dst, ident, tuple(c.induce(u.data[i]) for i, c in enumerate(ces))),
        )

    # --- hom objects ---------------------------------------------------------------
    def _product_base(self, I, J):
        shape = self.shape
        pairs = []
        values = []
        for c in range(shape.objects.size):
            ps = tuple((i, j) for i in range(I.on_obj[c].size) for j in range(J.on_obj[c].size))
            pairs.append(ps)
            values.append(FinSet(len(ps)))
        on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            table = tuple(pairs[b].index((I.on_mor[m](i), J.on_mor[m](j)))
                          for (i, j) in pairs[a])
            on_mor.append(FinMap(values[a], values[b], table))
        prod = Diagram(shape, tuple(values), tuple(on_mor))
        pi0 = NatTransData(prod, I, tuple(
            FinMap(values[c], I.on_obj[c], tuple(i for (i, _) in pairs[c]))
            for c in range(shape.objects.size)))
        pi1 = NatTransData(prod, J, tuple(
            FinMap(values[c], J.on_obj[c], tuple(j for (_, j) in pairs[c]))
            for c in range(shape.objects.size)))
        return prod, tuple(pairs), pi0, pi1

    def hom_object(self, X, Y):
        I, J = X.target, Y.target
        prod, prod_pairs, pi0, pi1 = self._product_base(I, J)
        rX = self.reindex(pi0, X)
        rY = self.reindex(pi1, Y)
        el_cat, el_objs, el_obj_index, el_mors, el_mor_index = elements_category(prod)
        Xt, Xt_fibers = to_elements(prod, rX, el_cat, el_objs, el_mors)
        Yt, Yt_fibers = to_elements(prod, rY, el_cat, el_objs, el_mors)
        exp = presheaf_exponential(el_cat, Xt, Yt)
        # K(c) = coproduct over z in prod(c) of exp at element-object (c, z)
        shape = self.shape
        k_keys = []
        k_values = []
        for c in range(shape.objects.size):
            ks = tuple((z, e)
                       for z in range(prod.on_obj[c].size)
                       for e in range(exp.value.on_obj[el_obj_index[(c, z)]].size))
            k_keys.append(ks)
            k_values.append(FinSet(len(ks)))
        k_on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            table = []
            for (z, e) in k_keys[a]:
                z2 = prod.on_mor[m](z)
                el_m = el_mor_index[(el_obj_index[(a, z)], el_obj_index[(b, z2)], m)]
                e2 = exp.value.on_mor[el_m](e)
                table.append(k_keys[b].index((z2, e2)))
            k_on_mor.append(FinMap(k_values[a], k_values[b], tuple(table)))
        K = Diagram(shape, tuple(k_values), tuple(k_on_mor))
        sigma = NatTransData(K, I, tuple(
            FinMap(k_values[c], I.on_obj[c],
                   tuple(prod_pairs[c][z][0] for (z, e) in k_keys[c]))
            for c in range(shape.objects.size)))
        tau = NatTransData(K, J, tuple(
            FinMap(k_values[c], J.on_obj[c],
                   tuple(prod_pairs[c][z][1] for (z, e) in k_keys[c]))
            for c in range(shape.objects.size)))
        src = self.reindex(sigma, X)
        dst = self.reindex(tau, Y)
        src_pairs = self.reindex_pairs(sigma, X)
        dst_pairs = self.reindex_pairs(tau, Y)
        rX_pairs = self.reindex_pairs(pi0, X)
        rY_pairs = self.reindex_pairs(pi1, Y)
        comps = []
        for c in range(shape.objects.size):
            table = []
            for (k, x) in src_pairs[c]:
                z, e = k_keys[c][k]
                eo = el_obj_index[(c, z)]
                xt = Xt_fibers[eo].index(rX_pairs[c].index((z, x)))
                yt = exp.ev(eo, e, xt)
                y = rY_pairs[c][Yt_fibers[eo][yt]][1]
                table.append(dst_pairs[c].index((k, y)))
            comps.append(FinMap(src.source.on_obj[c], dst.source.on_obj[c], tuple(table)))
        huniv = TotalMor(src, dst, self.base_id(K), tuple(comps))
        hom = HomObject(K, sigma, tau, X, Y, src, dst, huniv)
        object.__setattr__(hom, "_psh", (prod, prod_pairs, pi0, pi1, el_cat, el_objs,
                                         el_obj_index, el_mors, el_mor_index,
                                         Xt, Xt_fibers, Yt, Yt_fibers, exp,
                                         tuple(k_keys)))
        return hom

    def hom_classify(self, hom: HomObject, Kp, sigmap, taup, hp: TotalMor):
        (prod, prod_pairs, pi0, pi1, el_cat, el_objs, el_obj_index, el_mors,
         el_mor_index, Xt, Xt_fibers, Yt, Yt_fibers, exp, k_keys) = hom._psh
        X, Y = hom.X, hom.Y
        shape = self.shape
        srcp_pairs = self.reindex_pairs(sigmap, X)
        dstp_pairs = self.reindex_pairs(taup, Y)
        rX_pairs = self.reindex_pairs(pi0, X)
        rY_pairs = self.reindex_pairs(pi1, Y)
        comps = []
        for c in range(shape.objects.size):
            table = []
            for kp in range(Kp.on_obj[c].size):
                z = prod_pairs[c].index((sigmap.components[c](kp), taup.components[c](kp)))
                eo = el_obj_index[(c, z)]

                def family(d_obj, g_el, xt, kp=kp, c=c):
                    # g_el: morphism in ∫prod from (c, z) to its target
                    (s_el, t_el, m) = el_mors[g_el]
                    d, z2 = el_objs[t_el]
                    x = rX_pairs[d][Xt_fibers[t_el][xt]][1]
                    kpp = Kp.on_mor[m](kp)
                    sidx = srcp_pairs[d].index((kpp, x))
                    y = dstp_pairs[d][hp.data[d](sidx)][1]
                    return Yt_fibers[t_el].index(rY_pairs[d].index((z2, y)))

                e = exp.index_of(eo, family)
                table.append(k_keys[c].index((z, e)))
            comps.append(FinMap(Kp.on_obj[c], hom.K.on_obj[c], tuple(table)))
        return NatTransData(Kp, hom.K, tuple(comps))

    def hom_post(self, X, g, hom_xy: HomObject, hom_xy2: HomObject):
        # g is a fiber morphism Y -> Y' over J, so both homs share the same
        # product base and element category; only the target tilde differs.
        (prod, prod_pairs, pi0, pi1, el_cat, el_objs, el_obj_index, el_mors,
         el_mor_index, Xt, Xt_fibers, Yt, Yt_fibers, exp, k_keys) = hom_xy._psh
        exp2 = hom_xy2._psh[13]
        Yt_fibers2 = hom_xy2._psh[12]
        k_keys2 = hom_xy2._psh[14]
        Y = g.src
        rY_pairs = self.reindex_pairs(pi1, Y)
        rY2_pairs = self.reindex_pairs(hom_xy2._psh[3], g.dst)
        shape = self.shape
        comps = []
        for c in range(shape.objects.size):
            table = []
            for (z, e) in k_keys[c]:
                eo = el_obj_index[(c, z)]

                def fam2(d_el, g_el, xt, eo=eo, e=e):
                    yt = exp.at(eo, e, d_el, g_el, xt)
                    d, zt = el_objs[d_el]
                    y = rY_pairs[d][Yt_fibers[d_el][yt]][1]
                    y2 = g.data[d](y)
                    return Yt_fibers2[d_el].index(rY2_pairs[d].index((zt, y2)))

                e2 = exp2.index_of(eo, fam2)
                table.append(k_keys2[c].index((z, e2)))
            comps.append(FinMap(hom_xy.K.on_obj[c], hom_xy2.K.on_obj[c], tuple(table)))
        return NatTransData(hom_xy.K, hom_xy2.K, tuple(comps))

    def hom_pre(self, h, Y, hom_xy: HomObject, hom_x2y: HomObject):
        # h is a fiber morphism X' -> X over I; shared product base again.
        (prod, prod_pairs, pi0, pi1, el_cat, el_objs, el_obj_index, el_mors,
         el_mor_index, Xt, Xt_fibers, Yt, Yt_fibers, exp, k_keys) = hom_xy._psh
        exp2 = hom_x2y._psh[13]
        Xt_fibers2 = hom_x2y._psh[10]
        k_keys2 = hom_x2y._psh[14]
        X2 = h.src
        rX_pairs = self.reindex_pairs(pi0, hom_xy.X)
        rX2_pairs = self.reindex_pairs(hom_x2y._psh[2], X2)
        shape = self.shape
        comps = []
        for c in range(shape.objects.size):
            table = []
            for (z, e) in k_keys[c]:
                eo = el_obj_index[(c, z)]

                def fam2(d_el, g_el, xt2, eo=eo, e=e):
                    d, zt = el_objs[d_el]
                    x2 = rX2_pairs[d][Xt_fibers2[d_el][xt2]][1]
                    x = h.data[d](x2)
                    xt = Xt_fibers[d_el].index(rX_pairs[d].index((zt, x)))
                    return exp.at(eo, e, d_el, g_el, xt)

                e2 = exp2.index_of(eo, fam2)
                table.append(k_keys2[c].index((z, e2)))
            comps.append(FinMap(hom_xy.K.on_obj[c], hom_x2y.K.on_obj[c], tuple(table)))
        return NatTransData(hom_xy.K, hom_x2y.K, tuple(comps))
