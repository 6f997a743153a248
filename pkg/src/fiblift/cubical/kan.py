"""Kan-structure enumeration through the lifting pipeline.

A filling structure on a presheaf map f is a solution of the universal
lifting problem against the endpoint-against-classifier generating family
in the presheaf codomain instance.  All results hold in the truncated
topos only; reports must carry the truncation banner.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..fibrations.base import TotalMor, VertMap
from ..fibrations.presheaf import PresheafCodomainFibration
from ..fibrations.vertical import Square
from ..kernel.fincat import Diagram, NatTransData
from ..kernel.finset import FinMap, StructureError
from ..leibniz import (
    PushoutProductResult,
    fiber_tensor,
    generating_family,
    reindex_to_base,
)
from ..lifting import (
    SolutionSet,
    SquareFamily,
    enumerate_solutions,
    square_solutions,
    square_ulp,
    universal_lifting_problem,
)
from .classifiers import classifier_presheaf, face_classifier, interval_classifier
from .cubes import TRUNCATION_BANNER, CubeCatTrunc, cube_cat_trunc


@dataclass(frozen=True)
class KanSetup:
    k: int
    endpoint: int
    cc: CubeCatTrunc
    fib: PresheafCodomainFibration
    shape: object
    interval: Diagram
    face: Diagram
    delta: VertMap          # endpoint family over the terminal presheaf
    classifier: VertMap     # pointed family over the face presheaf
    gen: PushoutProductResult
    banner: str

    @property
    def generator(self) -> VertMap:
        return self.gen.map


def kan_setup(k: int = 1, endpoint: int = 1) -> KanSetup:
    """Build the presheaf instance and the generating family at level k."""
    if k > 2:
        raise StructureError("cube truncation capped at k = 2")
    cc = cube_cat_trunc(k)
    interval_cl = interval_classifier(cc, endpoint)
    face_cl = face_classifier(cc)
    shape, interval, i_point = classifier_presheaf(interval_cl)
    _, face, f_point = classifier_presheaf(face_cl)
    fib = PresheafCodomainFibration(shape)
    one = fib.base_terminal()
    disp_interval = fib.base_to_terminal(interval)
    delta = VertMap(one, fib.base_id(one), disp_interval,
                    TotalMor(fib.base_id(one), disp_interval, fib.base_id(one),
                             tuple(i_point.components)))
    cls = VertMap(face, f_point, fib.base_id(face),
                  TotalMor(f_point, fib.base_id(face), fib.base_id(face),
                           tuple(f_point.components)))
    gen = generating_family(fib, delta, cls)
    return KanSetup(k, endpoint, cc, fib, shape, interval, face, delta, cls,
                    gen, TRUNCATION_BANNER)


def presheaf_map_as_vertical(setup: KanSetup, f: NatTransData) -> VertMap:
    """View a presheaf map as a vertical map over the terminal presheaf."""
    fib = setup.fib
    one = fib.base_terminal()
    disp_src = fib.base_to_terminal(f.source)
    disp_dst = fib.base_to_terminal(f.target)
    return VertMap(one, disp_src, disp_dst,
                   TotalMor(disp_src, disp_dst, fib.base_id(one),
                            tuple(f.components)))


@dataclass(frozen=True)
class KanReport:
    k: int
    endpoint: int
    hom_sizes: tuple
    count: int
    solutions: SolutionSet
    banner: str


def kan_structures(f: NatTransData, k: int = 1, endpoint: int = 1,
                   setup: KanSetup | None = None) -> KanReport:
    """Enumerate filling structures on f at truncation level k."""
    if setup is None:
        setup = kan_setup(k, endpoint)
    fib = setup.fib
    fv = presheaf_map_as_vertical(setup, f)
    ulp = universal_lifting_problem(fib, setup.generator, fv)
    sols = enumerate_solutions(fib, setup.generator, fv, ulp)
    hom_sizes = tuple(s.size for s in ulp.K.on_obj)
    return KanReport(setup.k, setup.endpoint, hom_sizes, len(sols.fillers), sols,
                     TRUNCATION_BANNER)


def composition_square(setup: KanSetup) -> TotalMor:
    """The Kan-composition generating square over the face presheaf: the
    point family maps into the generating family, entering the corner at
    the opposite endpoint of the one generating the family."""
    fib = setup.fib
    gen = setup.generator
    cls = setup.classifier
    rd = reindex_to_base(fib, setup.delta, cls.over)
    nstages = setup.shape.objects.size
    rdc_pairs = fib.reindex_pairs(fib.base_to_terminal(cls.over), setup.delta.cod)
    other = 1 - setup.endpoint
    other_pts = tuple(alg.top if other == 1 else alg.bottom
                      for alg in setup.cc.algebras)
    top_face = tuple(cls.dom.components[c](0) for c in range(nstages))
    vx_pairs = fiber_tensor(fib, rd.cod, cls.dom)[3]
    vy_pairs = fiber_tensor(fib, rd.cod, cls.cod)[3]
    top_comps = []
    bot_comps = []
    for c in range(nstages):
        vprime = rdc_pairs[c].index((top_face[c], other_pts[c]))
        vx_idx = vx_pairs[c].index((vprime, 0))
        top_val = setup.gen.i_vx.data[c](vx_idx)
        top_comps.append(FinMap(cls.dom.source.on_obj[c],
                                gen.dom.source.on_obj[c], (top_val,)))
        table = []
        for x in range(cls.cod.source.on_obj[c].size):
            vprime_x = rdc_pairs[c].index((x, other_pts[c]))
            table.append(vy_pairs[c].index((vprime_x, x)))
        bot_comps.append(FinMap(cls.cod.source.on_obj[c],
                                gen.cod.source.on_obj[c], tuple(table)))
    top = TotalMor(cls.dom, gen.dom, fib.base_id(cls.over), tuple(top_comps))
    bot = TotalMor(cls.cod, gen.cod, fib.base_id(cls.over), tuple(bot_comps))
    left = fib.fiber_compose(bot, cls.map)
    right = fib.fiber_compose(gen.map, top)
    if left != right:
        raise StructureError("composition square does not commute")
    return TotalMor(cls, gen, fib.base_id(cls.over), Square(top, bot))


def composition_structures(f: NatTransData, k: int = 1, endpoint: int = 1,
                           setup: KanSetup | None = None) -> KanReport:
    """Solutions of the composition-square lifting problem against f: every
    filling yields a composition by forgetting, so this count dominates
    the filling count."""
    if setup is None:
        setup = kan_setup(k, endpoint)
    fib = setup.fib
    fv = presheaf_map_as_vertical(setup, f)
    left = composition_square(setup)
    ident_right = TotalMor(fv, fv, fib.base_id(fv.over),
                           Square(fib.fiber_id(fv.dom), fib.fiber_id(fv.cod)))
    sq = SquareFamily(left, ident_right)
    prob = square_ulp(fib, sq)
    sols = square_solutions(fib, sq, prob)
    hom_sizes = tuple(s.size for s in prob.K.on_obj)
    return KanReport(setup.k, setup.endpoint, hom_sizes, len(sols.fillers), sols,
                     TRUNCATION_BANNER)
