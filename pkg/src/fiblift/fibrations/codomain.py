"""The codomain fibration of finite sets.

Total objects over I are display maps u: U -> I (FinMaps); morphisms over
a base map are carrier maps making the evident square commute.  Cartesian
lifts are pullbacks, opcartesian lifts are composition, hom objects are
slice exponentials over the product of the bases.
"""

from __future__ import annotations

import itertools

from ..kernel.exponentials import slice_exponential
from ..kernel.finset import FinMap, FinSet, StructureError, all_maps, identity
from ..kernel.limits import (
    coequalizer,
    coproduct,
    pair_into_pullback,
    product,
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


class CodomainFibration(Fibration):
    kind = "codomain"

    # --- base: FinSet ---------------------------------------------------
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

    # --- total objects: display FinMaps ----------------------------------
    def obj_over(self, X):
        return X.cod

    def validate_total(self, X):
        if not isinstance(X, FinMap):
            raise StructureError("codomain total object must be a FinMap")

    def make_mor(self, X, Y, base, data):
        if data.dom != X.dom or data.cod != Y.dom:
            raise StructureError("carrier map endpoints wrong")
        if data.then(Y).table != X.then(base).table:
            raise StructureError("square does not commute over the base map")
        return TotalMor(X, Y, base, data)

    def total_id(self, X):
        return TotalMor(X, X, identity(X.cod), identity(X.dom))

    def total_compose(self, g, f):
        if f.dst != g.src:
            raise StructureError("total composition mismatch")
        return TotalMor(f.src, g.dst, g.base.compose(f.base), g.data.compose(f.data))

    def total_mors_over(self, X, Y, u):
        target_over = X.then(u)
        choices = []
        for x in range(X.dom.size):
            choices.append(Y.fiber(target_over(x)))
        if any(not c for c in choices):
            return []
        out = []
        for table in itertools.product(*choices):
            out.append(TotalMor(X, Y, u, FinMap(X.dom, Y.dom, table)))
        return out

    def enumerate_total_objects_over(self, I, budget):
        out = []
        for n in range(budget + 1):
            for table in itertools.product(range(I.size), repeat=n):
                out.append(FinMap(FinSet(n), I, table))
        return out

    # --- cleavage ---------------------------------------------------------
    def reindex(self, u, Y):
        pb = pullback(u, Y)
        return pb.p0  # display map apex -> dom u; elements are (k, y) pairs

    def reindex_pairs(self, u, Y):
        return pullback(u, Y).pairs

    def cartesian_lift(self, u, Y):
        pb = pullback(u, Y)
        return TotalMor(pb.p0, Y, u, pb.p1)

    def reindex_fmor(self, u, phi):
        src_pb = pullback(u, phi.src)
        dst_pb = pullback(u, phi.dst)
        table = tuple(dst_pb.pair_index(k, phi.data(y)) for (k, y) in src_pb.pairs)
        return TotalMor(src_pb.p0, dst_pb.p0, identity(u.dom),
                        FinMap(src_pb.apex, dst_pb.apex, table))

    def coh(self, t, u, Y):
        ut = u.compose(t)
        src = pullback(ut, Y)          # (k', y) with u(t k') = Y y
        mid = pullback(u, Y)           # (k, y)
        dst = pullback(t, mid.p0)      # (k', (k,y)) with t k' = k
        table = tuple(dst.pair_index(kp, mid.pair_index(t(kp), y)) for (kp, y) in src.pairs)
        return TotalMor(src.p0, dst.p0, identity(t.dom),
                        FinMap(src.apex, dst.apex, table))

    def opcart_vert(self, u, X):
        lifted = X.then(u)

        def induce(g: TotalMor, lifted=lifted):
            if g.base.table != u.table:
                raise StructureError("induce: wrong base map")
            return TotalMor(lifted, g.dst, identity(u.cod), g.data)

        return OpcartData(lifted, TotalMor(X, lifted, u, identity(X.dom)), induce)

    def vertical_part(self, u, g):
        pb = pullback(u, g.dst)
        table = tuple(pb.pair_index(g.src(z), g.data(z)) for z in range(g.src.dom.size))
        return TotalMor(g.src, pb.p0, identity(u.dom),
                        FinMap(g.src.dom, pb.apex, table))

    def fiber_pullback(self, f, g):
        pb = pullback(f.data, g.data)
        disp = pb.p0.then(f.src)
        ident = identity(f.src.cod)
        from ..kernel.limits import pair_into_pullback as _pip
        return (disp,
                TotalMor(disp, f.src, ident, pb.p0),
                TotalMor(disp, g.src, ident, pb.p1),
                lambda u_, v_, pb=pb, disp=disp: TotalMor(
                    u_.src, disp, ident, _pip(pb, u_.data, v_.data)))

    # --- fibers -------------------------------------------------------------
    def fiber_mors(self, X, Y):
        return self.total_mors_over(X, Y, identity(X.cod))

    def fiber_mor_is_iso(self, phi):
        return phi.data.is_iso()

    def fiber_invert(self, phi):
        return TotalMor(phi.dst, phi.src, phi.base, phi.data.inverse())

    def fiber_fillers(self, mmap, fmap, top, bot):
        # j : cod m -> dom f with j ∘ m = top and f ∘ j = bot
        B, C = mmap.dst, fmap.src
        forced: dict[int, int] = {}
        for a in range(mmap.src.dom.size):
            b = mmap.data(a)
            want = top.data(a)
            if forced.get(b, want) != want:
                return []
            forced[b] = want
        choices = []
        for b in range(B.dom.size):
            if b in forced:
                c = forced[b]
                if fmap.data(c) != bot.data(b) or C(c) != B(b):
                    return []
                choices.append([c])
            else:
                cands = [c for c in range(C.dom.size)
                         if C(c) == B(b) and fmap.data(c) == bot.data(b)]
                if not cands:
                    return []
                choices.append(cands)
        out = []
        for table in itertools.product(*choices):
            out.append(TotalMor(B, C, identity(B.cod), FinMap(B.dom, C.dom, table)))
        return out

    def fiber_initial(self, I):
        return FinMap(FinSet(0), I, ())

    def fiber_coproduct(self, X, Y):
        cp = coproduct(X.dom, Y.dom)
        disp = cp.case(X, Y)
        ident = identity(X.cod)
        return FiberCoproduct(
            disp,
            TotalMor(X, disp, ident, cp.in0),
            TotalMor(Y, disp, ident, cp.in1),
            lambda u, v, cp=cp, disp=disp: TotalMor(
                disp, u.dst, ident, cp.case(u.data, v.data)),
        )

    def fiber_pushout(self, f, g):
        if f.src != g.src:
            raise StructureError("pushout span must share its tip")
        po = pushout(f.data, g.data)
        disp = po.induce(f.dst, g.dst)
        ident = identity(f.src.cod)
        return FiberPushout(
            disp,
            TotalMor(f.dst, disp, ident, po.i0),
            TotalMor(g.dst, disp, ident, po.i1),
            lambda u, v, po=po, disp=disp: TotalMor(
                disp, u.dst, ident, po.induce(u.data, v.data)),
        )

    def fiber_coequalizer(self, f, g):
        ce = coequalizer(f.data, g.data)
        disp = ce.induce(f.dst)
        ident = identity(f.src.cod)
        return FiberCoequalizer(
            disp,
            TotalMor(f.dst, disp, ident, ce.q),
            lambda u, ce=ce, disp=disp: TotalMor(disp, u.dst, ident, ce.induce(u.data)),
        )

    # --- hom objects ----------------------------------------------------------
    def hom_object(self, X, Y):
        I, J = X.cod, Y.cod
        prod = product(I, J)
        # reindex X and Y to I x J and take the slice exponential there
        px = pullback(prod.p0, X)
        py = pullback(prod.p1, Y)
        exp = slice_exponential(prod.apex, px.p0, py.p0)
        # elements of K: (cell=(i,j), table over the X-fiber valued in the Y-fiber)
        K = exp.value
        sigma = exp.display.then(prod.p0)
        tau = exp.display.then(prod.p1)
        src = self.reindex(sigma, X)
        dst = self.reindex(tau, Y)
        src_pairs = self.reindex_pairs(sigma, X)
        dst_pairs = pullback(tau, Y).pairs
        dst_pb = pullback(tau, Y)
        table = []
        for (k, x) in src_pairs:
            cell, tbl = exp.keys[k]
            xf = px.p0.fiber(cell)
            # position of x inside the X-fiber over cell (px elements are (cell, x))
            pos = xf.index(px.pairs.index((cell, x)))
            y = py.pairs[tbl[pos]][1]
            table.append(dst_pb.pair_index(k, y))
        huniv = TotalMor(src, dst, identity(K),
                         FinMap(src.dom, dst.dom, tuple(table)))
        return HomObject(K, sigma, tau, X, Y, src, dst, huniv)

    def hom_element_maps(self, hom: HomObject):
        """Decode hom elements as (i, j, sorted (x, y) pairs over the fibers)."""
        X, Y = hom.X, hom.Y
        out = []
        src_pb = pullback(hom.sigma, X)
        dst_pb = pullback(hom.tau, Y)
        for k in range(hom.K.size):
            i, j = hom.sigma(k), hom.tau(k)
            mapping = []
            for x in X.fiber(i):
                sidx = src_pb.pair_index(k, x)
                mapping.append((x, dst_pb.pairs[hom.huniv.data(sidx)][1]))
            out.append((i, j, tuple(mapping)))
        return out

    def hom_classify(self, hom: HomObject, Kp, sigmap, taup, hp: TotalMor):
        X, Y = hom.X, hom.Y
        src_pairs = self.reindex_pairs(sigmap, X)
        dst_pairs = self.reindex_pairs(taup, Y)
        index = {e: k for k, e in enumerate(self.hom_element_maps(hom))}
        table = []
        for kp in range(Kp.size):
            i, j = sigmap(kp), taup(kp)
            mapping = []
            for x in X.fiber(i):
                sidx = src_pairs.index((kp, x))
                mapping.append((x, dst_pairs[hp.data(sidx)][1]))
            table.append(index[(i, j, tuple(mapping))])
        return FinMap(Kp, hom.K, tuple(table))

    def hom_post(self, X, g, hom_xy: HomObject, hom_xy2: HomObject):
        index = {e: k for k, e in enumerate(self.hom_element_maps(hom_xy2))}
        table = []
        for (i, j, m) in self.hom_element_maps(hom_xy):
            m2 = tuple((x, g.data(y)) for x, y in m)
            table.append(index[(i, j, m2)])
        return FinMap(hom_xy.K, hom_xy2.K, tuple(table))

    def hom_pre(self, h, Y, hom_xy: HomObject, hom_x2y: HomObject):
        X2 = h.src
        index = {e: k for k, e in enumerate(self.hom_element_maps(hom_x2y))}
        table = []
        for (i, j, m) in self.hom_element_maps(hom_xy):
            lut = dict(m)
            m2 = tuple((x2, lut[h.data(x2)]) for x2 in X2.fiber(i))
            table.append(index[(i, j, m2)])
        return FinMap(hom_xy.K, hom_x2y.K, tuple(table))
