"""The uniform fibration interface.

A fibration instance is one of four concrete kinds (set-indexed families,
category-indexed families, codomain, presheaf codomain); the interface is
a closed sum rather than an open abstraction because the exhaustive
verifiers need each instance's finite presentation.

Conventions shared by all instances:
  * total objects know their base object (`obj_over`),
  * morphisms of the total category are `TotalMor` records carrying the
    base morphism they live over; fiber morphisms are TotalMors over an
    identity,
  * reindexing is strict cleavage application; where reindexing along a
    composite differs from iterated reindexing (codomain, presheaf), the
    canonical comparison iso is available as `coh`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from ..kernel.finset import StructureError


@dataclass(frozen=True)
class TotalMor:
    """A morphism of the total category over a recorded base morphism."""

    src: Any
    dst: Any
    base: Any
    data: Any


@dataclass(frozen=True)
class VertMap:
    """A family of maps: a vertical map dom -> cod over a base object."""

    over: Any
    dom: Any
    cod: Any
    map: TotalMor

    def __post_init__(self):
        if self.map.src != self.dom or self.map.dst != self.cod:
            raise StructureError("VertMap: map endpoints disagree with dom/cod")


@dataclass(frozen=True)
class HomObject:
    """The hom object from X to Y with its universal span.

    huniv is the vertical form of the universal element: a fiber morphism
    sigma*(X) -> tau*(Y) over K.
    """

    K: Any
    sigma: Any
    tau: Any
    X: Any
    Y: Any
    src: Any     # sigma*(X)
    dst: Any     # tau*(Y)
    huniv: TotalMor


@dataclass(frozen=True)
class OpcartData:
    """An opcartesian lift with its mediating-map constructor."""

    obj: Any            # the lifted total object
    unit: TotalMor      # X -> obj over the base map
    induce: Callable    # (TotalMor X -> Z over the same base map) -> fiber mor obj -> Z


@dataclass(frozen=True)
class FiberPushout:
    obj: Any
    i0: TotalMor
    i1: TotalMor
    induce: Callable  # (u: B -> Z, v: C -> Z fiber mors) -> fiber mor obj -> Z


@dataclass(frozen=True)
class FiberCoproduct:
    obj: Any
    in0: TotalMor
    in1: TotalMor
    case: Callable


@dataclass(frozen=True)
class FiberCoequalizer:
    obj: Any
    q: TotalMor
    induce: Callable


@dataclass(frozen=True)
class BasePullback:
    obj: Any
    p0: Any
    p1: Any
    pair: Callable  # (u: W -> dom p0-side, v) -> base mor W -> obj


class Fibration:
    """Abstract interface; see module docstring for the shared contract."""

    kind: str = "?"

    # --- base category -------------------------------------------------
    def base_id(self, I): raise NotImplementedError
    def base_compose(self, g, f): raise NotImplementedError
    def base_dom(self, u): raise NotImplementedError
    def base_cod(self, u): raise NotImplementedError
    def base_is_iso(self, u) -> bool: raise NotImplementedError
    def base_terminal(self): raise NotImplementedError
    def base_to_terminal(self, I): raise NotImplementedError
    def base_pullback(self, f, g) -> BasePullback: raise NotImplementedError
    def all_base_maps(self, A, B) -> list: raise NotImplementedError
    def enumerate_base_objects(self, budget: int) -> list: raise NotImplementedError

    # --- total category ------------------------------------------------
    def obj_over(self, X): raise NotImplementedError
    def validate_total(self, X) -> None: raise NotImplementedError
    def total_id(self, X) -> TotalMor: raise NotImplementedError
    def total_compose(self, g: TotalMor, f: TotalMor) -> TotalMor: raise NotImplementedError
    def total_mors_over(self, X, Y, u) -> list[TotalMor]: raise NotImplementedError
    def enumerate_total_objects_over(self, I, budget: int) -> list: raise NotImplementedError

    # --- cleavage and opcleavage ----------------------------------------
    def reindex(self, u, Y): raise NotImplementedError
    def reindex_fmor(self, u, phi: TotalMor) -> TotalMor: raise NotImplementedError
    def cartesian_lift(self, u, Y) -> TotalMor: raise NotImplementedError
    def coh(self, t, u, Y) -> TotalMor:
        """Canonical iso (u∘t)*Y -> t*(u*Y), a fiber morphism."""
        raise NotImplementedError
    def opcart_vert(self, u, X) -> OpcartData: raise NotImplementedError
    def vertical_part(self, u, g: TotalMor) -> TotalMor:
        """The unique vertical Z -> u*(X) through which g: Z -> X over u
        factors via the cartesian lift."""
        raise NotImplementedError
    def fiber_pullback(self, f: TotalMor, g: TotalMor):
        """Pullback of a cospan in a fiber: (obj, p0, p1, pair)."""
        raise NotImplementedError

    # --- fibers ----------------------------------------------------------
    def fiber_mors(self, X, Y) -> list[TotalMor]: raise NotImplementedError
    def fiber_fillers(self, mmap: TotalMor, fmap: TotalMor,
                      top: TotalMor, bot: TotalMor) -> list[TotalMor]:
        raise NotImplementedError
    def fiber_initial(self, I): raise NotImplementedError
    def fiber_coproduct(self, X, Y) -> FiberCoproduct: raise NotImplementedError
    def fiber_pushout(self, f: TotalMor, g: TotalMor) -> FiberPushout: raise NotImplementedError
    def fiber_coequalizer(self, f: TotalMor, g: TotalMor) -> FiberCoequalizer: raise NotImplementedError

    # --- hom objects ------------------------------------------------------
    def hom_object(self, X, Y) -> HomObject: raise NotImplementedError
    def hom_post(self, X, g: TotalMor, hom_xy: HomObject, hom_xy2: HomObject):
        """Base mor Hom(X,Y) -> Hom(X,Y') induced by the fiber mor g: Y -> Y'."""
        raise NotImplementedError
    def hom_pre(self, h: TotalMor, Y, hom_xy: HomObject, hom_x2y: HomObject):
        """Base mor Hom(X,Y) -> Hom(X',Y) induced by the fiber mor h: X' -> X."""
        raise NotImplementedError
    def hom_classify(self, hom: HomObject, Kp, sigmap, taup, hp: TotalMor):
        """The unique base map t with t*(huniv) = hp (up to coh), built directly."""
        raise NotImplementedError

    # --- derived helpers --------------------------------------------------
    def vertical(self, dom, cod, map_: TotalMor) -> VertMap:
        I = self.obj_over(dom)
        if self.obj_over(cod) != I:
            raise StructureError("vertical map endpoints live over different base objects")
        return VertMap(I, dom, cod, map_)

    def fiber_id(self, X) -> TotalMor:
        return self.total_id(X)

    def fiber_compose(self, g: TotalMor, f: TotalMor) -> TotalMor:
        return self.total_compose(g, f)

    def fiber_mor_is_iso(self, phi: TotalMor) -> bool:
        raise NotImplementedError

    def fiber_invert(self, phi: TotalMor) -> TotalMor:
        raise NotImplementedError

    def reindex_vert(self, u, m: VertMap) -> VertMap:
        """Reindex a vertical map along u into the fiber over dom(u)."""
        return VertMap(self.base_dom(u), self.reindex(u, m.dom), self.reindex(u, m.cod),
                       self.reindex_fmor(u, m.map))
