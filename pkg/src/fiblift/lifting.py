"""Families of lifting problems, exhaustive solution search, universal
lifting problems, classification, and coherent transfer of solutions.

A family of lifting problems from m to f over K is a commuting square

    sigma*(U) --top--> tau*(X)
        |                 |
    sigma*(m)          tau*(f)
        |                 |
    sigma*(V) --bot--> tau*(Y)

in the fiber over K.  Families are compared by canonical form: reindexing
is computed strictly via the chosen cleavage (normalized through the
coherence isos), so equality checks are plain structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fibrations.base import Fibration, TotalMor, VertMap
from .fibrations.checks import transported_universal
from .fibrations.vertical import Square, VerticalArrowFibration
from .kernel.finset import StructureError


@dataclass(frozen=True)
class LiftFamily:
    m: VertMap
    f: VertMap
    K: object
    sigma: object
    tau: object
    top: TotalMor
    bot: TotalMor

    def validate(self, fib: Fibration) -> None:
        rm = fib.reindex_fmor(self.sigma, self.m.map)
        rf = fib.reindex_fmor(self.tau, self.f.map)
        left = fib.fiber_compose(self.bot, rm)
        right = fib.fiber_compose(rf, self.top)
        if left != right:
            raise StructureError("lifting family square does not commute")


@dataclass(frozen=True)
class SolutionSet:
    problem: LiftFamily
    fillers: tuple

    def __len__(self):
        return len(self.fillers)

    @property
    def solvable(self):
        return len(self.fillers) > 0

    @property
    def first(self):
        return self.fillers[0] if self.fillers else None


@dataclass(frozen=True)
class SquareFamily:
    """A family of squares (m -> n over I) against (f -> g over J).

    left and right are vertical maps of vertical maps: squares whose
    horizontal legs live in a single fiber.
    """

    left: TotalMor   # V(E) fiber morphism m -> n over I
    right: TotalMor  # V(E) fiber morphism f -> g over J


def enumerate_solutions(fib: Fibration, m: VertMap, f: VertMap,
                        problem: LiftFamily) -> SolutionSet:
    """All vertical diagonal fillers, in lexicographic table order."""
    rm = fib.reindex_fmor(problem.sigma, m.map)
    rf = fib.reindex_fmor(problem.tau, f.map)
    fillers = fib.fiber_fillers(rm, rf, problem.top, problem.bot)
    return SolutionSet(problem, tuple(fillers))


def universal_lifting_problem(fib: Fibration, m: VertMap, f: VertMap) -> LiftFamily:
    """The family over Hom(m, f) through which every family factors uniquely."""
    vert = VerticalArrowFibration(fib)
    hom = vert.hom_object(m, f)
    fam = LiftFamily(m, f, hom.K, hom.sigma, hom.tau,
                     hom.huniv.data.on_dom, hom.huniv.data.on_cod)
    object.__setattr__(fam, "_hom", hom)
    object.__setattr__(fam, "_vert", vert)
    return fam


def _ulp_hom(fib: Fibration, m: VertMap, f: VertMap, ulp: LiftFamily):
    if hasattr(ulp, "_hom"):
        return ulp._vert, ulp._hom
    vert = VerticalArrowFibration(fib)
    return vert, vert.hom_object(m, f)


def reindex_family(fib: Fibration, problem: LiftFamily, t) -> LiftFamily:
    """Apply t* to a family, normalizing through the coherence isos."""
    sigma2 = fib.base_compose(problem.sigma, t)
    tau2 = fib.base_compose(problem.tau, t)
    coh_s = fib.coh(t, problem.sigma, problem.m.dom)       # (sigma t)*U -> t*(sigma*U)
    coh_sv = fib.coh(t, problem.sigma, problem.m.cod)
    coh_tx = fib.coh(t, problem.tau, problem.f.dom)
    coh_ty = fib.coh(t, problem.tau, problem.f.cod)
    top2 = fib.fiber_compose(fib.fiber_invert(coh_tx),
                             fib.fiber_compose(fib.reindex_fmor(t, problem.top), coh_s))
    bot2 = fib.fiber_compose(fib.fiber_invert(coh_ty),
                             fib.fiber_compose(fib.reindex_fmor(t, problem.bot), coh_sv))
    return LiftFamily(problem.m, problem.f, fib.base_dom(t), sigma2, tau2, top2, bot2)


def classify(fib: Fibration, m: VertMap, f: VertMap, problem: LiftFamily,
             ulp: LiftFamily | None = None, verify_unique: bool = True):
    """The unique base map t with t*(ULP) = problem, built directly.

    Existence is guaranteed by universality; a failed roundtrip aborts
    (an engine bug, not a user error).  Uniqueness is re-verified by
    enumerating competing base maps when verify_unique is set.
    """
    if ulp is None:
        ulp = universal_lifting_problem(fib, m, f)
    vert, hom = _ulp_hom(fib, m, f, ulp)
    square = TotalMor(fib.reindex_vert(problem.sigma, m),
                      fib.reindex_vert(problem.tau, f),
                      fib.base_id(problem.K), Square(problem.top, problem.bot))
    t = vert.hom_classify(hom, problem.K, problem.sigma, problem.tau, square)
    back = reindex_family(fib, ulp, t)
    if (back.sigma, back.tau, back.top, back.bot) != (
            problem.sigma, problem.tau, problem.top, problem.bot):
        raise AssertionError("classification roundtrip failed: engine bug")
    if verify_unique:
        count = 0
        for cand in fib.all_base_maps(problem.K, ulp.K):
            cb = reindex_family(fib, ulp, cand)
            if (cb.sigma, cb.tau, cb.top, cb.bot) == (
                    problem.sigma, problem.tau, problem.top, problem.bot):
                count += 1
        if count != 1:
            raise AssertionError(f"classifying map not unique ({count}): engine bug")
    return t


def transfer_solution(fib: Fibration, ulp: LiftFamily, filler: TotalMor, t) -> TotalMor:
    """Reindex a solution of the universal family along t (coherent choice)."""
    coh_v = fib.coh(t, ulp.sigma, ulp.m.cod)
    coh_x = fib.coh(t, ulp.tau, ulp.f.dom)
    return fib.fiber_compose(fib.fiber_invert(coh_x),
                             fib.fiber_compose(fib.reindex_fmor(t, filler), coh_v))


def has_frlp(fib: Fibration, m: VertMap, f: VertMap):
    """Fibred right lifting property: the universal family is solvable.

    Returns (True, None) or (False, unsolvable universal family).
    """
    ulp = universal_lifting_problem(fib, m, f)
    sols = enumerate_solutions(fib, m, f, ulp)
    if sols.solvable:
        return True, None
    return False, ulp


def square_ulp(fib: Fibration, sq: SquareFamily) -> LiftFamily:
    """The universal lifting problem of a family of squares: universal as a
    lifting problem of the left square's target against the right square's
    source."""
    n = sq.left.dst
    f = sq.right.src
    return universal_lifting_problem(fib, n, f)


def square_solutions(fib: Fibration, sq: SquareFamily,
                     problem: LiftFamily) -> SolutionSet:
    """Fillers of the long rectangle m -> n -> f -> g for a lifting family
    of n against f."""
    m, n = sq.left.src, sq.left.dst
    f, g = sq.right.src, sq.right.dst
    rmu_dom = fib.reindex_fmor(problem.sigma, sq.left.data.on_dom)
    rmu_cod = fib.reindex_fmor(problem.sigma, sq.left.data.on_cod)
    rnu_dom = fib.reindex_fmor(problem.tau, sq.right.data.on_dom)
    rnu_cod = fib.reindex_fmor(problem.tau, sq.right.data.on_cod)
    rm = fib.reindex_fmor(problem.sigma, m.map)
    rg = fib.reindex_fmor(problem.tau, g.map)
    top_full = fib.fiber_compose(rnu_dom, fib.fiber_compose(problem.top, rmu_dom))
    bot_full = fib.fiber_compose(rnu_cod, fib.fiber_compose(problem.bot, rmu_cod))
    fillers = fib.fiber_fillers(rm, rg, top_full, bot_full)
    composite = LiftFamily(m, g, problem.K, problem.sigma, problem.tau, top_full, bot_full)
    return SolutionSet(composite, tuple(fillers))
