"""Set-indexed families of finite sets.

Objects over I are I-indexed tuples of finite sets; vertical maps are
indexwise functions.  Cartesian lifts reindex on the nose (the cleavage
is split), opcartesian lifts take fiberwise disjoint unions, and the hom
object is the disjoint union of indexwise function sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..kernel.finset import FinMap, FinSet, StructureError, all_maps, identity
from ..kernel.limits import (
    coequalizer,
    coproduct,
    pair_into_pullback,
    pullback,
    pushout,
)
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


@dataclass(frozen=True)
class FamObj:
    base: FinSet
    fibers: tuple  # FinSet per base element

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(self.fibers))
        if len(self.fibers) != self.base.size:
            raise StructureError("family must have one fiber per index")


class FamSetFibration(Fibration):
    kind = "fam_set"

    # --- base: FinSet ------------------------------------------------------
    def base_id(self, I):
        return identity(I)

    def base_compose(self, g, f):
        return g.compose(f)

    def base_dom(self, u):
        return u.dom

    def base_cod(self, u):
        return u.cod

    def base_is_iso(self, u):
        return u.is_iso()

    def base_terminal(self):
        return FinSet(1)

    def base_to_terminal(self, I):
        return FinMap(I, FinSet(1), tuple(0 for _ in range(I.size)))

    def base_pullback(self, f, g):
        pb = pullback(f, g)
        return BasePullback(pb.apex, pb.p0, pb.p1,
                            lambda u, v, pb=pb: pair_into_pullback(pb, u, v))

    def all_base_maps(self, A, B):
        return list(all_maps(A, B))

    def enumerate_base_objects(self, budget):
        return [FinSet(n) for n in range(budget + 1)]

    # --- total objects -------------------------------------------------------
    def obj_over(self, X):
        return X.base

    def validate_total(self, X):
        if not isinstance(X, FamObj):
            raise StructureError("fam_set total object must be a FamObj")

    def total_id(self, X):
        return TotalMor(X, X, identity(X.base), tuple(identity(s) for s in X.fibers))

    def total_compose(self, g, f):
        if f.dst != g.src:
            raise StructureError("total composition mismatch")
        comps = tuple(g.data[f.base(i)].compose(f.data[i]) for i in range(f.src.base.size))
        return TotalMor(f.src, g.dst, g.base.compose(f.base), comps)

    def total_mors_over(self, X, Y, u):
        per_index = []
        for i in range(X.base.size):
            per_index.append(list(all_maps(X.fibers[i], Y.fibers[u(i)])))
        out = []
        for combo in itertools.product(*per_index):
            out.append(TotalMor(X, Y, u, tuple(combo)))
        return out

    def enumerate_total_objects_over(self, I, budget):
        out = []
        for sizes in itertools.product(range(budget + 1), repeat=I.size):
            if sum(sizes) <= budget:
                out.append(FamObj(I, tuple(FinSet(n) for n in sizes)))
        return out

    # --- cleavage ---------------------------------------------------------------
    def reindex(self, u, Y):
        return FamObj(u.dom, tuple(Y.fibers[u(k)] for k in range(u.dom.size)))

    def cartesian_lift(self, u, Y):
        rx = self.reindex(u, Y)
        return TotalMor(rx, Y, u, tuple(identity(s) for s in rx.fibers))

    def reindex_fmor(self, u, phi):
        return TotalMor(self.reindex(u, phi.src), self.reindex(u, phi.dst),
                        identity(u.dom),
                        tuple(phi.data[u(k)] for k in range(u.dom.size)))

    def coh(self, t, u, Y):
        # split cleavage: (u∘t)* Y and t*(u* Y) coincide on the nose
        obj = self.reindex(u.compose(t), Y)
        return self.total_id(obj)

    def opcart_vert(self, u, X):
        J = u.cod
        decode = []
        fibers = []
        for j in range(J.size):
            elems = [(k, x) for k in u.fiber(j) for x in range(X.fibers[k].size)]
            decode.append(elems)
            fibers.append(FinSet(len(elems)))
        lifted = FamObj(J, tuple(fibers))
        unit_comps = tuple(
            FinMap(X.fibers[k], fibers[u(k)],
                   tuple(decode[u(k)].index((k, x)) for x in range(X.fibers[k].size)))
            for k in range(X.base.size)
        )
        unit = TotalMor(X, lifted, u, unit_comps)

        def induce(g: TotalMor, lifted=lifted, decode=decode):
            comps = []
            for j in range(J.size):
                table = tuple(g.data[k](x) for (k, x) in decode[j])
                comps.append(FinMap(lifted.fibers[j], g.dst.fibers[j], table))
            return TotalMor(lifted, g.dst, identity(J), tuple(comps))

        return OpcartData(lifted, unit, induce)

    def vertical_part(self, u, g):
        target = self.reindex(u, g.dst)
        return TotalMor(g.src, target, identity(u.dom), g.data)

    def fiber_pullback(self, f, g):
        pbs = [pullback(f.data[i], g.data[i]) for i in range(f.src.base.size)]
        obj = FamObj(f.src.base, tuple(p.apex for p in pbs))
        ident = identity(f.src.base)
        return (obj,
                TotalMor(obj, f.src, ident, tuple(p.p0 for p in pbs)),
                TotalMor(obj, g.src, ident, tuple(p.p1 for p in pbs)),
                lambda u_, v_, pbs=pbs, obj=obj: TotalMor(
                    u_.src, obj, ident,
                    tuple(pair_into_pullback(p, u_.data[i], v_.data[i])
                          for i, p in enumerate(pbs))))

    # --- fibers -----------------------------------------------------------------
    def fiber_mors(self, X, Y):
        return self.total_mors_over(X, Y, identity(X.base))

    def fiber_mor_is_iso(self, phi):
        return all(c.is_iso() for c in phi.data)

    def fiber_invert(self, phi):
        return TotalMor(phi.dst, phi.src, phi.base, tuple(c.inverse() for c in phi.data))

    def fiber_fillers(self, mmap, fmap, top, bot):
        per_index = []
        for i in range(mmap.src.base.size):
            B, C = mmap.dst.fibers[i], fmap.src.fibers[i]
            forced: dict[int, int] = {}
            bad = False
            for a in range(mmap.src.fibers[i].size):
                b = mmap.data[i](a)
                want = top.data[i](a)
                if forced.get(b, want) != want:
                    bad = True
                    break
                forced[b] = want
            if bad:
                return []
            choices = []
            for b in range(B.size):
                if b in forced:
                    c = forced[b]
                    if fmap.data[i](c) != bot.data[i](b):
                        return []
                    choices.append([c])
                else:
                    cands = [c for c in range(C.size) if fmap.data[i](c) == bot.data[i](b)]
                    if not cands:
                        return []
                    choices.append(cands)
            per_index.append([FinMap(B, C, t) for t in itertools.product(*choices)])
        out = []
        for combo in itertools.product(*per_index):
            out.append(TotalMor(mmap.dst, fmap.src, identity(mmap.src.base), tuple(combo)))
        return out

    def fiber_initial(self, I):
        return FamObj(I, tuple(FinSet(0) for _ in range(I.size)))

    def fiber_coproduct(self, X, Y):
        cps = [coproduct(X.fibers[i], Y.fibers[i]) for i in range(X.base.size)]
        obj = FamObj(X.base, tuple(c.apex for c in cps))
        ident = identity(X.base)
        return FiberCoproduct(
            obj,
            TotalMor(X, obj, ident, tuple(c.in0 for c in cps)),
            TotalMor(Y, obj, ident, tuple(c.in1 for c in cps)),
            lambda u, v, cps=cps, obj=obj: TotalMor(
                obj, u.dst, ident,
                tuple(c.case(u.data[i], v.data[i]) for i, c in enumerate(cps))),
        )

    def fiber_pushout(self, f, g):
        pos = [pushout(f.data[i], g.data[i]) for i in range(f.src.base.size)]
        obj = FamObj(f.src.base, tuple(p.apex for p in pos))
        ident = identity(f.src.base)
        return FiberPushout(
            obj,
            TotalMor(f.dst, obj, ident, tuple(p.i0 for p in pos)),
            TotalMor(g.dst, obj, ident, tuple(p.i1 for p in pos)),
            lambda u, v, pos=pos, obj=obj: TotalMor(
                obj, u.dst, ident,
                tuple(p.induce(u.data[i], v.data[i]) for i, p in enumerate(pos))),
        )

    def fiber_coequalizer(self, f, g):
        ces = [coequalizer(f.data[i], g.data[i]) for i in range(f.src.base.size)]
        obj = FamObj(f.src.base, tuple(c.apex for c in ces))
        ident = identity(f.src.base)
        return FiberCoequalizer(
            obj,
            TotalMor(f.dst, obj, ident, tuple(c.q for c in ces)),
            lambda u, ces=ces, obj=obj: TotalMor(
                obj, u.dst, ident, tuple(c.induce(u.data[i]) for i, c in enumerate(ces))),
        )

    # --- hom objects ----------------------------------------------------------------
    def _hom_keys(self, X, Y):
        keys = []
        for i in range(X.base.size):
            for j in range(Y.base.size):
                if X.fibers[i].size == 0:
                    keys.append((i, j, ()))
                    continue
                for table in itertools.product(range(Y.fibers[j].size), repeat=X.fibers[i].size):
                    keys.append((i, j, table))
        return tuple(sorted(keys))

    def hom_object(self, X, Y):
        keys = self._hom_keys(X, Y)
        K = FinSet(len(keys))
        sigma = FinMap(K, X.base, tuple(k[0] for k in keys))
        tau = FinMap(K, Y.base, tuple(k[1] for k in keys))
        src = self.reindex(sigma, X)
        dst = self.reindex(tau, Y)
        huniv = TotalMor(src, dst, identity(K),
                         tuple(FinMap(src.fibers[k], dst.fibers[k], keys[k][2])
                               for k in range(K.size)))
        return HomObject(K, sigma, tau, X, Y, src, dst, huniv)

    def hom_classify(self, hom: HomObject, Kp, sigmap, taup, hp: TotalMor):
        keys = self._hom_keys(hom.X, hom.Y)
        index = {k: n for n, k in enumerate(keys)}
        table = tuple(
            index[(sigmap(kp), taup(kp), hp.data[kp].table)]
            for kp in range(Kp.size)
        )
        return FinMap(Kp, hom.K, table)

    def hom_post(self, X, g, hom_xy: HomObject, hom_xy2: HomObject):
        keys = self._hom_keys(X, g.src)
        keys2 = self._hom_keys(X, g.dst)
        index = {k: n for n, k in enumerate(keys2)}
        table = tuple(
            index[(i, j, tuple(g.data[j](y) for y in tbl))]
            for (i, j, tbl) in keys
        )
        return FinMap(hom_xy.K, hom_xy2.K, table)

    def hom_pre(self, h, Y, hom_xy: HomObject, hom_x2y: HomObject):
        X2, X = h.src, h.dst
        keys = self._hom_keys(X, Y)
        keys2 = self._hom_keys(X2, Y)
        index = {k: n for n, k in enumerate(keys2)}
        table = tuple(
            index[(i, j, tuple(tbl[h.data[i](x2)] for x2 in range(X2.fibers[i].size)))]
            for (i, j, tbl) in keys
        )
        return FinMap(hom_xy.K, hom_x2y.K, table)
