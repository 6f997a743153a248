"""Universal-property verifiers for colimits, exponentials, dependent
products and left Kan extensions.

Each verifier quantifies over candidate cones/cocones/targets up to a
budget; mediating maps are forced pointwise wherever set-level structure
forces them, with literal enumeration cross-checks on small instances.
"""

from __future__ import annotations

import itertools

from .exponentials import (
    DepProdResult,
    PresheafExpResult,
    SliceExpResult,
    dependent_product,
    slice_hom_count,
)
from .fincat import Diagram, FinCat, FunctorData, NatTransData, all_nat_trans
from .finset import FinMap, FinSet, all_maps, count_maps
from .kan import ColimitResult, LeftKanResult, colimit, left_kan
from .limits import LITERAL_ENUM_BOUND, VerifyOutcome, pullback


def verify_colimit(d: Diagram, col: ColimitResult, cocone_budget: int = 3,
                   budget: int = 10**6) -> VerifyOutcome:
    """Every commuting cocone factors uniquely through the colimit."""
    shape = d.shape
    for m in range(shape.morphisms.size):
        a, b = shape.src(m), shape.tgt(m)
        if d.on_mor[m].then(col.cocone[b]).table != col.cocone[a].table:
            return VerifyOutcome.failed(f"cocone leg does not commute at morphism {m}")
    checked = False
    for n in range(cocone_budget + 1):
        z = FinSet(n)
        total = 1
        for o in range(shape.objects.size):
            total *= count_maps(d.on_obj[o], z)
            if total > budget:
                break
        if total > budget:
            break
        checked = True
        for legs in itertools.product(*(list(all_maps(d.on_obj[o], z))
                                        for o in range(shape.objects.size))):
            commutes = all(
                d.on_mor[m].then(legs[shape.tgt(m)]).table == legs[shape.src(m)].table
                for m in range(shape.morphisms.size))
            if not commutes:
                continue
            forced = [None] * col.value.size
            consistent = True
            for o in range(shape.objects.size):
                for x in range(d.on_obj[o].size):
                    cls = col.cocone[o](x)
                    val = legs[o](x)
                    if forced[cls] is not None and forced[cls] != val:
                        consistent = False
                        break
                    forced[cls] = val
                if not consistent:
                    break
            covered = all(v is not None for v in forced)
            med = 1 if (consistent and covered) else 0
            if count_maps(col.value, z) <= LITERAL_ENUM_BOUND:
                literal = sum(
                    1 for t in all_maps(col.value, z)
                    if all(col.cocone[o].then(t).table == legs[o].table
                           for o in range(shape.objects.size)))
                assert literal == med
            if med != 1:
                return VerifyOutcome.failed(f"cocone with {med} mediators")
    if not checked:
        return VerifyOutcome.not_checked("cocone enumeration exceeds budget")
    return VerifyOutcome.passed()


def verify_slice_exponential(exp: SliceExpResult, w_budget: int = 4) -> VerifyOutcome:
    """For every W over the base and every map W x_I U -> V over I there is
    exactly one transpose W -> E commuting with evaluation."""
    base, u, v = exp.base, exp.u, exp.v
    ev_pb, ev = exp.evaluation_square()
    for n in range(w_budget + 1):
        for tab in itertools.product(range(base.size), repeat=n):
            w = FinMap(FinSet(n), base, tab)
            wu = pullback(w, u)
            lhs = slice_hom_count(base, wu.p0.then(w), v)
            rhs = slice_hom_count(base, w, exp.display)
            if lhs != rhs:
                return VerifyOutcome.failed(
                    f"hom counts differ for W with display {tab}: {lhs} != {rhs}")
            # explicit transposition: each g: W x U -> V over I has the
            # unique transpose sending z to the fiberwise function g(z, -)
            for g_tab in _slice_maps(base, wu.p0.then(w), v):
                g = FinMap(wu.apex, v.dom, g_tab)
                transpose = []
                for z in range(n):
                    i = w(z)
                    transpose.append(exp.index_of(
                        i, lambda x, z=z: g(wu.pair_index(z, x))))
                t = FinMap(FinSet(n), exp.value, tuple(transpose))
                # verify ev ∘ (t x U) = g
                ok = all(
                    ev(ev_pb.pair_index(t(z), x)) == g(wu.pair_index(z, x))
                    for (z, x) in wu.pairs)
                if not ok:
                    return VerifyOutcome.failed("transpose does not recover the map")
    return VerifyOutcome.passed()


def _slice_maps(base, a: FinMap, b: FinMap):
    choices = [b.fiber(a(x)) for x in range(a.dom.size)]
    if any(not c for c in choices):
        return []
    return itertools.product(*choices)


def verify_dependent_product(dp: DepProdResult, w_budget: int = 4) -> VerifyOutcome:
    """The adjunction bijection against every W over the codomain."""
    f, g = dp.f, dp.g
    for n in range(w_budget + 1):
        for tab in itertools.product(range(f.cod.size), repeat=n):
            w = FinMap(FinSet(n), f.cod, tab)
            pb = pullback(w, f)
            fstar_w = FinMap(pb.apex, f.dom, tuple(x for (_, x) in pb.pairs))
            lhs = slice_hom_count(f.dom, fstar_w, g)
            rhs = slice_hom_count(f.cod, w, dp.display)
            if lhs != rhs:
                return VerifyOutcome.failed(
                    f"adjunction counts differ for W {tab}: {lhs} != {rhs}")
    return VerifyOutcome.passed()


def verify_presheaf_exponential(exp: PresheafExpResult, w_budget: int = 2) -> VerifyOutcome:
    """Nat(W x X, Y) is in bijection with Nat(W, Y^X) for every diagram W
    with values within the budget."""
    from ..fibrations.fam_cat import all_diagrams

    shape = exp.X.shape
    for w in all_diagrams(shape, w_budget):
        prod_obj = tuple(FinSet(w.on_obj[c].size * exp.X.on_obj[c].size)
                         for c in range(shape.objects.size))
        pairs = [
            [(a, b) for a in range(w.on_obj[c].size) for b in range(exp.X.on_obj[c].size)]
            for c in range(shape.objects.size)
        ]
        on_mor = []
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            table = tuple(
                pairs[b].index((w.on_mor[m](x), exp.X.on_mor[m](y)))
                for (x, y) in pairs[a])
            on_mor.append(FinMap(prod_obj[a], prod_obj[b], table))
        wx = Diagram(shape, prod_obj, tuple(on_mor))
        lhs = len(all_nat_trans(wx, exp.Y))
        rhs = len(all_nat_trans(w, exp.value))
        if lhs != rhs:
            return VerifyOutcome.failed(f"exponential hom counts differ: {lhs} != {rhs}")
    return VerifyOutcome.passed()


def verify_left_kan(F: FunctorData, d: Diagram, lan: LeftKanResult,
                    target_budget: int = 2) -> VerifyOutcome:
    """Nat(Lan_F d, E) is in bijection with Nat(d, E∘F), implemented by
    precomposition with the unit, for every target E within budget."""
    from ..fibrations.fam_cat import all_diagrams

    B = F.cod
    for e in all_diagrams(B, target_budget):
        ef = e.restrict_along(F)
        down = all_nat_trans(d, ef)
        up = all_nat_trans(lan.value, e)
        if len(down) != len(up):
            return VerifyOutcome.failed(
                f"Kan adjunction counts differ: {len(up)} != {len(down)}")
        seen = set()
        for nt in up:
            restricted = tuple(
                nt.components[F.on_obj(a)].compose(lan.unit[a]).table
                for a in range(F.dom.objects.size))
            seen.add(restricted)
        if len(seen) != len(up):
            return VerifyOutcome.failed("unit precomposition is not injective")
        available = {tuple(c.table for c in nt.components) for nt in down}
        if seen != available:
            return VerifyOutcome.failed("unit precomposition is not onto")
    return VerifyOutcome.passed()
