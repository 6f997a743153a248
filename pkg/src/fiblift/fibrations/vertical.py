"""The vertical-arrow fibration V(E) -> B of a fibration instance.

Total objects are the base instance's vertical maps; morphisms are
squares (pairs of base-instance morphisms over a common base morphism).
Cleavage and opcleavage are levelwise; the hom object of two vertical
maps is the base pullback

    Hom(m, f) = Hom(U, X) x_{Hom(U, Y)} Hom(V, Y)

with the universal square assembled from the component hom objects.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..kernel.finset import StructureError
from .base import (
    FiberCoequalizer,
    FiberCoproduct,
    FiberPushout,
    Fibration,
    HomObject,
    OpcartData,
    TotalMor,
    VertMap,
)


@dataclass(frozen=True)
class Square:
    """A morphism of V(E): component maps on domains and codomains."""

    on_dom: TotalMor
    on_cod: TotalMor


class VerticalArrowFibration(Fibration):
    def __init__(self, base: Fibration):
        self.base = base
        self.kind = f"vertical({base.kind})"

    # --- base category: delegated ------------------------------------------
    def base_id(self, I):
        return self.base.base_id(I)

    def base_compose(self, g, f):
        return self.base.base_compose(g, f)

    def base_dom(self, u):
        return self.base.base_dom(u)

    def base_cod(self, u):
        return self.base.base_cod(u)

    def base_is_iso(self, u):
        return self.base.base_is_iso(u)

    def base_terminal(self):
        return self.base.base_terminal()

    def base_to_terminal(self, I):
        return self.base.base_to_terminal(I)

    def base_pullback(self, f, g):
        return self.base.base_pullback(f, g)

    def all_base_maps(self, A, B):
        return self.base.all_base_maps(A, B)

    def enumerate_base_objects(self, budget):
        return self.base.enumerate_base_objects(budget)

    # --- total objects: vertical maps ----------------------------------------
    def obj_over(self, X: VertMap):
        return X.over

    def validate_total(self, X):
        if not isinstance(X, VertMap):
            raise StructureError("V(E) total object must be a VertMap")

    def square(self, src: VertMap, dst: VertMap, on_dom: TotalMor, on_cod: TotalMor) -> TotalMor:
        if on_dom.base != on_cod.base:
            raise StructureError("square legs live over different base morphisms")
        left = self.base.total_compose(on_cod, src.map)
        right = self.base.total_compose(dst.map, on_dom)
        if left != right:
            raise StructureError("square does not commute")
        return TotalMor(src, dst, on_dom.base, Square(on_dom, on_cod))

    def total_id(self, X: VertMap):
        return TotalMor(X, X, self.base.base_id(X.over),
                        Square(self.base.total_id(X.dom), self.base.total_id(X.cod)))

    def total_compose(self, g, f):
        if f.dst != g.src:
            raise StructureError("total composition mismatch")
        return TotalMor(f.src, g.dst, self.base.base_compose(g.base, f.base),
                        Square(self.base.total_compose(g.data.on_dom, f.data.on_dom),
                               self.base.total_compose(g.data.on_cod, f.data.on_cod)))

    def total_mors_over(self, X: VertMap, Y: VertMap, u):
        out = []
        for on_dom in self.base.total_mors_over(X.dom, Y.dom, u):
            for on_cod in self.base.total_mors_over(X.cod, Y.cod, u):
                left = self.base.total_compose(on_cod, X.map)
                right = self.base.total_compose(Y.map, on_dom)
                if left == right:
                    out.append(TotalMor(X, Y, u, Square(on_dom, on_cod)))
        return out

    def enumerate_total_objects_over(self, I, budget):
        out = []
        for dom in self.base.enumerate_total_objects_over(I, budget):
            for cod in self.base.enumerate_total_objects_over(I, budget):
                for phi in self.base.fiber_mors(dom, cod):
                    out.append(VertMap(I, dom, cod, phi))
        return out

    # --- cleavage: levelwise ----------------------------------------------------
    def reindex(self, u, Y: VertMap):
        return self.base.reindex_vert(u, Y)

    def cartesian_lift(self, u, Y: VertMap):
        rx = self.reindex(u, Y)
        return TotalMor(rx, Y, u, Square(self.base.cartesian_lift(u, Y.dom),
                                         self.base.cartesian_lift(u, Y.cod)))

    def reindex_fmor(self, u, phi):
        src = self.reindex(u, phi.src)
        dst = self.reindex(u, phi.dst)
        return TotalMor(src, dst, self.base.base_id(self.base.base_dom(u)),
                        Square(self.base.reindex_fmor(u, phi.data.on_dom),
                               self.base.reindex_fmor(u, phi.data.on_cod)))

    def coh(self, t, u, Y: VertMap):
        src = self.reindex(self.base.base_compose(u, t), Y)
        dst = self.reindex(t, self.reindex(u, Y))
        return TotalMor(src, dst, self.base.base_id(self.base.base_dom(t)),
                        Square(self.base.coh(t, u, Y.dom), self.base.coh(t, u, Y.cod)))

    def opcart_vert(self, u, X: VertMap):
        dcart = self.base.opcart_vert(u, X.dom)
        ccart = self.base.opcart_vert(u, X.cod)
        lifted_map = dcart.induce(self.base.total_compose(ccart.unit, X.map))
        lifted = VertMap(self.base.base_cod(u), dcart.obj, ccart.obj, lifted_map)
        unit = TotalMor(X, lifted, u, Square(dcart.unit, ccart.unit))

        def induce(g: TotalMor, lifted=lifted, dcart=dcart, ccart=ccart):
            vd = dcart.induce(g.data.on_dom)
            vc = ccart.induce(g.data.on_cod)
            return TotalMor(lifted, g.dst, self.base.base_id(self.base.base_cod(u)),
                            Square(vd, vc))

        return OpcartData(lifted, unit, induce)

    # --- fibers -----------------------------------------------------------------
    def fiber_mors(self, X: VertMap, Y: VertMap):
        return self.total_mors_over(X, Y, self.base.base_id(X.over))

    def fiber_mor_is_iso(self, phi):
        return (self.base.fiber_mor_is_iso(phi.data.on_dom)
                and self.base.fiber_mor_is_iso(phi.data.on_cod))

    def fiber_invert(self, phi):
        return TotalMor(phi.dst, phi.src, phi.base,
                        Square(self.base.fiber_invert(phi.data.on_dom),
                               self.base.fiber_invert(phi.data.on_cod)))

    def fiber_initial(self, I):
        z = self.base.fiber_initial(I)
        return VertMap(I, z, z, self.base.fiber_id(z))

    def fiber_coproduct(self, X: VertMap, Y: VertMap):
        dc = self.base.fiber_coproduct(X.dom, Y.dom)
        cc = self.base.fiber_coproduct(X.cod, Y.cod)
        mid = dc.case(self.base.fiber_compose(cc.in0, X.map),
                      self.base.fiber_compose(cc.in1, Y.map))
        obj = VertMap(X.over, dc.obj, cc.obj, mid)
        ident = self.base.base_id(X.over)
        return FiberCoproduct(
            obj,
            TotalMor(X, obj, ident, Square(dc.in0, cc.in0)),
            TotalMor(Y, obj, ident, Square(dc.in1, cc.in1)),
            lambda u, v, dc=dc, cc=cc, obj=obj, ident=ident: TotalMor(
                obj, u.dst, ident,
                Square(dc.case(u.data.on_dom, v.data.on_dom),
                       cc.case(u.data.on_cod, v.data.on_cod))),
        )

    def fiber_pushout(self, f, g):
        dp = self.base.fiber_pushout(f.data.on_dom, g.data.on_dom)
        cp = self.base.fiber_pushout(f.data.on_cod, g.data.on_cod)
        mid = dp.induce(self.base.fiber_compose(cp.i0, f.dst.map),
                        self.base.fiber_compose(cp.i1, g.dst.map))
        obj = VertMap(f.src.over, dp.obj, cp.obj, mid)
        ident = self.base.base_id(f.src.over)
        return FiberPushout(
            obj,
            TotalMor(f.dst, obj, ident, Square(dp.i0, cp.i0)),
            TotalMor(g.dst, obj, ident, Square(dp.i1, cp.i1)),
            lambda u, v, dp=dp, cp=cp, obj=obj, ident=ident: TotalMor(
                obj, u.dst, ident,
                Square(dp.induce(u.data.on_dom, v.data.on_dom),
                       cp.induce(u.data.on_cod, v.data.on_cod))),
        )

    def fiber_coequalizer(self, f, g):
        dq = self.base.fiber_coequalizer(f.data.on_dom, g.data.on_dom)
        cq = self.base.fiber_coequalizer(f.data.on_cod, g.data.on_cod)
        mid = dq.induce(self.base.fiber_compose(cq.q, f.dst.map))
        obj = VertMap(f.src.over, dq.obj, cq.obj, mid)
        ident = self.base.base_id(f.src.over)
        return FiberCoequalizer(
            obj,
            TotalMor(f.dst, obj, ident, Square(dq.q, cq.q)),
            lambda u, dq=dq, cq=cq, obj=obj, ident=ident: TotalMor(
                obj, u.dst, ident,
                Square(dq.induce(u.data.on_dom), cq.induce(u.data.on_cod))),
        )

    # --- hom objects (Hom of vertical maps via the component pullback) -----------
    def hom_object(self, m: VertMap, f: VertMap):
        b = self.base
        hom_ux = b.hom_object(m.dom, f.dom)
        hom_uy = b.hom_object(m.dom, f.cod)
        hom_vy = b.hom_object(m.cod, f.cod)
        post = b.hom_post(m.dom, f.map, hom_ux, hom_uy)   # Hom(U,X) -> Hom(U,Y)
        pre = b.hom_pre(m.map, f.cod, hom_vy, hom_uy)     # Hom(V,Y) -> Hom(U,Y)
        pb = b.base_pullback(post, pre)
        K = pb.obj
        q0, q1 = pb.p0, pb.p1
        sigma = b.base_compose(hom_ux.sigma, q0)
        tau = b.base_compose(hom_ux.tau, q0)
        src = self.reindex(sigma, m)
        dst = self.reindex(tau, f)
        # top: sigma*(U) -> tau*(X), from the UX hom universal element
        top = self._transport_univ(hom_ux, q0, sigma, tau, m.dom, f.dom)
        bot = self._transport_univ(hom_vy, q1, sigma, tau, m.cod, f.cod)
        huniv = TotalMor(src, dst, b.base_id(K), Square(top, bot))
        hom = HomObject(K, sigma, tau, m, f, src, dst, huniv)
        object.__setattr__(hom, "_parts", (hom_ux, hom_uy, hom_vy, pb))
        return hom

    def _transport_univ(self, hom_comp, q, sigma, tau, A, B):
        """Reindex the component hom's universal element along q and strip coh isos."""
        b = self.base
        # q*(huniv): q*(sigma_c* A) -> q*(tau_c* B); conjugate by coh to get
        # (sigma_c ∘ q)* A -> (tau_c ∘ q)* B, which are sigma*(A), tau*(B).
        moved = b.reindex_fmor(q, hom_comp.huniv)
        coh_src = b.coh(q, hom_comp.sigma, A)
        coh_dst = b.coh(q, hom_comp.tau, B)
        return b.fiber_compose(b.fiber_invert(coh_dst), b.fiber_compose(moved, coh_src))

    def hom_classify(self, hom: HomObject, Kp, sigmap, taup, hp: TotalMor):
        b = self.base
        hom_ux, hom_uy, hom_vy, pb = hom._parts
        m, f = hom.X, hom.Y
        t_ux = b.hom_classify(hom_ux, Kp, sigmap, taup, hp.data.on_dom)
        t_vy = b.hom_classify(hom_vy, Kp, sigmap, taup, hp.data.on_cod)
        return pb.pair(t_ux, t_vy)
