"""Finite (co)limits of sets with brute-force universal-property verifiers.

Every operation returns its apex together with the structure maps; the
verifiers re-derive existence and uniqueness of mediating maps by
exhaustive enumeration, reporting a witness on failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .finset import (
    EnumerationBudgetExceeded,
    FinMap,
    FinSet,
    IndexedSet,
    StructureError,
    all_maps,
    count_maps,
    identity,
)
from .unionfind import UnionFind


@dataclass(frozen=True)
class PullbackResult:
    apex: FinSet
    p0: FinMap  # apex -> dom f
    p1: FinMap  # apex -> dom g
    pairs: tuple  # element decode: apex index -> (x, y)

    def pair_index(self, x: int, y: int) -> int:
        return self.pairs.index((x, y))


def pullback(f: FinMap, g: FinMap) -> PullbackResult:
    """Apex {(x, y) | f x = g y} in lexicographic order with projections."""
    if f.cod != g.cod:
        raise StructureError("pullback: codomain mismatch")
    pairs = tuple(
        (x, y)
        for x in range(f.dom.size)
        for y in range(g.dom.size)
        if f(x) == g(y)
    )
    apex = FinSet(len(pairs))
    p0 = FinMap(apex, f.dom, tuple(x for x, _ in pairs))
    p1 = FinMap(apex, g.dom, tuple(y for _, y in pairs))
    return PullbackResult(apex, p0, p1, pairs)


@dataclass(frozen=True)
class ProductResult:
    apex: FinSet
    p0: FinMap
    p1: FinMap
    pairs: tuple

    def pair_index(self, x: int, y: int) -> int:
        return self.pairs.index((x, y))


def product(a: FinSet, b: FinSet) -> ProductResult:
    pairs = tuple((x, y) for x in range(a.size) for y in range(b.size))
    apex = FinSet(len(pairs))
    return ProductResult(
        apex,
        FinMap(apex, a, tuple(x for x, _ in pairs)),
        FinMap(apex, b, tuple(y for _, y in pairs)),
        pairs,
    )


def pair_into_product(prod: ProductResult, u: FinMap, v: FinMap) -> FinMap:
    if u.dom != v.dom:
        raise StructureError("pairing: domain mismatch")
    return FinMap(u.dom, prod.apex, tuple(prod.pair_index(u(z), v(z)) for z in range(u.dom.size)))


def pair_into_pullback(pb: PullbackResult, u: FinMap, v: FinMap) -> FinMap:
    if u.dom != v.dom:
        raise StructureError("pairing: domain mismatch")
    return FinMap(u.dom, pb.apex, tuple(pb.pair_index(u(z), v(z)) for z in range(u.dom.size)))


@dataclass(frozen=True)
class CoproductResult:
    apex: FinSet
    in0: FinMap
    in1: FinMap

    def case(self, u: FinMap, v: FinMap) -> FinMap:
        """[u, v]: apex -> cod, assuming u, v share their codomain."""
        if u.cod != v.cod:
            raise StructureError("case: codomain mismatch")
        table = [0] * self.apex.size
        for x in range(self.in0.dom.size):
            table[self.in0(x)] = u(x)
        for y in range(self.in1.dom.size):
            table[self.in1(y)] = v(y)
        return FinMap(self.apex, u.cod, tuple(table))


def coproduct(a: FinSet, b: FinSet) -> CoproductResult:
    apex = FinSet(a.size + b.size)
    in0 = FinMap(a, apex, tuple(range(a.size)))
    in1 = FinMap(b, apex, tuple(a.size + y for y in range(b.size)))
    return CoproductResult(apex, in0, in1)


@dataclass(frozen=True)
class PushoutResult:
    apex: FinSet
    i0: FinMap  # cod f -> apex
    i1: FinMap  # cod g -> apex

    def induce(self, u: FinMap, v: FinMap) -> FinMap:
        """The mediating map for a commuting cocone (u on cod f, v on cod g)."""
        if u.cod != v.cod:
            raise StructureError("induce: codomain mismatch")
        table = [None] * self.apex.size
        for x in range(self.i0.dom.size):
            table[self.i0(x)] = u(x)
        for y in range(self.i1.dom.size):
            t = v(y)
            prev = table[self.i1(y)]
            if prev is not None and prev != t:
                raise StructureError("induce: cocone does not commute")
            table[self.i1(y)] = t
        if any(t is None for t in table):
            raise StructureError("induce: apex not covered")
        return FinMap(self.apex, u.cod, tuple(table))


def pushout(f: FinMap, g: FinMap) -> PushoutResult:
    """Quotient of cod f ⨿ cod g by f z ~ g z, minimum-index representatives."""
    if f.dom != g.dom:
        raise StructureError("pushout: domain mismatch")
    total = f.cod.size + g.cod.size
    uf = UnionFind(total)
    for z in range(f.dom.size):
        uf.union(f(z), f.cod.size + g(z))
    cls = uf.classes()
    apex = FinSet(uf.n_classes())
    i0 = FinMap(f.cod, apex, tuple(cls[x] for x in range(f.cod.size)))
    i1 = FinMap(g.cod, apex, tuple(cls[f.cod.size + y] for y in range(g.cod.size)))
    return PushoutResult(apex, i0, i1)


@dataclass(frozen=True)
class CoequalizerResult:
    apex: FinSet
    q: FinMap  # cod -> apex

    def induce(self, u: FinMap) -> FinMap:
        table = [None] * self.apex.size
        for x in range(self.q.dom.size):
            prev = table[self.q(x)]
            if prev is not None and prev != u(x):
                raise StructureError("induce: map does not coequalize")
            table[self.q(x)] = u(x)
        if any(t is None for t in table):
            raise StructureError("induce: apex not covered")
        return FinMap(self.apex, u.cod, tuple(table))


def coequalizer(f: FinMap, g: FinMap) -> CoequalizerResult:
    if f.dom != g.dom or f.cod != g.cod:
        raise StructureError("coequalizer: parallel pair required")
    uf = UnionFind(f.cod.size)
    for z in range(f.dom.size):
        uf.union(f(z), g(z))
    cls = uf.classes()
    apex = FinSet(uf.n_classes())
    return CoequalizerResult(apex, FinMap(f.cod, apex, tuple(cls[x] for x in range(f.cod.size))))


@dataclass(frozen=True)
class VerifyOutcome:
    ok: bool
    checked: bool
    witness: str | None = None

    @staticmethod
    def passed():
        return VerifyOutcome(True, True)

    @staticmethod
    def failed(witness: str):
        return VerifyOutcome(False, True, witness)

    @staticmethod
    def not_checked(reason: str):
        return VerifyOutcome(True, False, reason)


DEFAULT_BUDGET = 10**6
LITERAL_ENUM_BOUND = 512


def _count_mediators_into(apex: FinSet, conditions_per_element, z: FinSet,
                          literal_check=None) -> int:
    """Number of maps z -> apex with elementwise candidate sets.

    conditions_per_element[k] is the list of allowed apex values for k.
    When the full function space is small, cross-check by literal
    enumeration (the verifier's enumeration stays honest on small data).
    """
    count = 1
    for cands in conditions_per_element:
        count *= len(cands)
    if 0 < count_maps(z, apex) <= LITERAL_ENUM_BOUND:
        allowed = [set(c) for c in conditions_per_element]
        literal = 0
        for table in itertools.product(range(apex.size), repeat=z.size):
            if all(v in allowed[k] for k, v in enumerate(table)):
                literal += 1
        assert literal == count
    return count


def verify_pullback(f: FinMap, g: FinMap, apex: FinSet, p0: FinMap, p1: FinMap,
                    cone_budget: int = 4, budget: int = DEFAULT_BUDGET) -> VerifyOutcome:
    """Existence + uniqueness of mediating maps for all cones up to cone_budget.

    A mediating map is constrained pointwise: a cone element with legs
    (x, y) must land in the cell {t | p0 t = x, p1 t = y}.  Enumerating
    cones therefore reduces to enumerating cells; mediator counts are the
    product of cell sizes, cross-checked literally on small instances.
    """
    if p0.then(f).table != p1.then(g).table:
        return VerifyOutcome.failed("projections do not commute")
    cells: dict[tuple[int, int], list[int]] = {}
    for t in range(apex.size):
        cells.setdefault((p0(t), p1(t)), []).append(t)
    checked_any = False
    try:
        for n in range(cone_budget + 1):
            z = FinSet(n)
            if count_maps(z, f.dom) * count_maps(z, g.dom) > budget:
                break
            checked_any = True
            for u in all_maps(z, f.dom):
                for v in all_maps(z, g.dom):
                    if u.then(f).table != v.then(g).table:
                        continue
                    per_el = [cells.get((u(k), v(k)), []) for k in range(n)]
                    med = _count_mediators_into(apex, per_el, z)
                    if med != 1:
                        return VerifyOutcome.failed(
                            f"cone ({list(u.table)}, {list(v.table)}) has {med} mediators")
    except EnumerationBudgetExceeded as e:
        return VerifyOutcome.not_checked(str(e))
    if not checked_any:
        return VerifyOutcome.not_checked("cone enumeration exceeds budget")
    return VerifyOutcome.passed()


def verify_pushout(f: FinMap, g: FinMap, apex: FinSet, i0: FinMap, i1: FinMap,
                   cocone_budget: int = 3, budget: int = DEFAULT_BUDGET) -> VerifyOutcome:
    """Existence + uniqueness of mediating maps for all cocones up to cocone_budget.

    A mediating map out of the apex is forced wherever the injections
    cover it; the check is that the forced assignment is total and
    consistent, cross-checked literally on small instances.
    """
    if f.then(i0).table != g.then(i1).table:
        return VerifyOutcome.failed("injections do not commute")
    checked_any = False
    try:
        for n in range(cocone_budget + 1):
            z = FinSet(n)
            if count_maps(f.cod, z) * count_maps(g.cod, z) > budget:
                break
            checked_any = True
            for u in all_maps(f.cod, z):
                for v in all_maps(g.cod, z):
                    if f.then(u).table != g.then(v).table:
                        continue
                    forced = [None] * apex.size
                    consistent = True
                    for x in range(f.cod.size):
                        if forced[i0(x)] is not None and forced[i0(x)] != u(x):
                            consistent = False
                            break
                        forced[i0(x)] = u(x)
                    if consistent:
                        for y in range(g.cod.size):
                            if forced[i1(y)] is not None and forced[i1(y)] != v(y):
                                consistent = False
                                break
                            forced[i1(y)] = v(y)
                    covered = all(t is not None for t in forced)
                    med = 1 if (consistent and covered) else 0
                    if count_maps(apex, z) <= LITERAL_ENUM_BOUND:
                        literal = sum(
                            1 for t in all_maps(apex, z)
                            if i0.then(t).table == u.table and i1.then(t).table == v.table)
                        assert literal == med
                    if med != 1:
                        return VerifyOutcome.failed(
                            f"cocone ({list(u.table)}, {list(v.table)}) has {med} mediators")
    except EnumerationBudgetExceeded as e:
        return VerifyOutcome.not_checked(str(e))
    if not checked_any:
        return VerifyOutcome.not_checked("cocone enumeration exceeds budget")
    return VerifyOutcome.passed()


def iso_between(a: FinSet, b: FinSet, respects=None, cap: int = 9):
    """Search for a bijection a -> b, optionally constrained, or None.

    respects(perm) may impose extra conditions (e.g. commuting triangles).
    Raises EnumerationBudgetExceeded above the permutation cap.
    """
    if a.size != b.size:
        return None
    if a.size > cap:
        raise EnumerationBudgetExceeded(f"iso search above cap: size {a.size}")
    for perm in itertools.permutations(range(b.size)):
        m = FinMap(a, b, perm)
        if respects is None or respects(m):
            return m
    return None


def iso_over(a_disp: FinMap, b_disp: FinMap, cap: int = 9):
    """Bijection dom(a_disp) -> dom(b_disp) commuting with the displays, or None.

    Fiberwise search keeps the cap per fiber instead of per total size.
    """
    if a_disp.cod != b_disp.cod:
        return None
    if a_disp.dom.size != b_disp.dom.size:
        return None
    base = a_disp.cod
    table = [None] * a_disp.dom.size
    for i in range(base.size):
        fa = a_disp.fiber(i)
        fb = b_disp.fiber(i)
        if len(fa) != len(fb):
            return None
        if len(fa) > cap:
            raise EnumerationBudgetExceeded(f"fiber iso search above cap: size {len(fa)}")
        # any fiberwise bijection works; take the order-preserving one
        for x, y in zip(fa, fb):
            table[x] = y
    return FinMap(a_disp.dom, b_disp.dom, tuple(table))
