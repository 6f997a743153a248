"""Slice exponentials, dependent products, and presheaf exponentials."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fincat import Diagram, FinCat, NatTransData
from .finset import FinMap, FinSet, StructureError
from .limits import PullbackResult, pullback


@dataclass(frozen=True)
class SliceExpResult:
    """Exponential from u to v in FinSet/I.

    Elements are (i, table) where table lists a v-fiber element for each
    u-fiber element over i, both fibers in ascending order.
    """

    base: FinSet
    value: FinSet
    display: FinMap  # value -> base
    keys: tuple      # per element: (i, table)
    u: FinMap
    v: FinMap

    def ev(self, e: int, x: int) -> int:
        """Evaluate element e at x in the u-fiber over display(e)."""
        i, table = self.keys[e]
        fib = self.u.fiber(i)
        return table[fib.index(x)]

    def index_of(self, i: int, assignment) -> int:
        """Element index for the function sending fiber element x to assignment(x)."""
        fib = self.u.fiber(i)
        return self.keys.index((i, tuple(assignment(x) for x in fib)))

    def evaluation_square(self) -> tuple[PullbackResult, FinMap]:
        """Pullback value ×_I U and the evaluation map into V."""
        pb = pullback(self.display, self.u)
        table = tuple(self.ev(e, x) for (e, x) in pb.pairs)
        return pb, FinMap(pb.apex, self.v.dom, table)


def slice_exponential(base: FinSet, u: FinMap, v: FinMap) -> SliceExpResult:
    if u.cod != base or v.cod != base:
        raise StructureError("slice_exponential: maps must land in the base")
    keys = []
    for i in range(base.size):
        ufib = u.fiber(i)
        vfib = v.fiber(i)
        if not ufib:
            keys.append((i, ()))
            continue
        for table in itertools.product(vfib, repeat=len(ufib)):
            keys.append((i, table))
    keys = tuple(keys)
    value = FinSet(len(keys))
    display = FinMap(value, base, tuple(k[0] for k in keys))
    return SliceExpResult(base, value, display, keys, u, v)


@dataclass(frozen=True)
class DepProdResult:
    """Dependent product Π_f g, an object over cod f.

    Elements are (y, section) where section lists a Z-element for each
    f-fiber element over y, in ascending order, with g(section(x)) = x.
    """

    value: FinSet
    display: FinMap  # value -> cod f
    keys: tuple
    f: FinMap
    g: FinMap

    def ev(self, e: int, x: int) -> int:
        y, section = self.keys[e]
        fib = self.f.fiber(y)
        return section[fib.index(x)]


def dependent_product(f: FinMap, g: FinMap) -> DepProdResult:
    """Right adjoint to pullback along f, applied to g: Z -> X (f: X -> Y)."""
    if g.cod != f.dom:
        raise StructureError("dependent_product: g must land in dom f")
    keys = []
    for y in range(f.cod.size):
        fib = f.fiber(y)
        if not fib:
            keys.append((y, ()))
            continue
        choices = [g.fiber(x) for x in fib]
        if any(not c for c in choices):
            continue
        for section in itertools.product(*choices):
            keys.append((y, section))
    keys = tuple(keys)
    value = FinSet(len(keys))
    display = FinMap(value, f.cod, tuple(k[0] for k in keys))
    return DepProdResult(value, display, keys, f, g)


def slice_hom_count(base: FinSet, a: FinMap, b: FinMap) -> int:
    """Number of maps a -> b over the base."""
    count = 1
    for x in range(a.dom.size):
        count *= len(b.fiber(a(x)))
        if count == 0:
            return 0
    return count


def verify_dependent_product_adjunction(f: FinMap, g: FinMap, w: FinMap) -> bool:
    """|Hom_{/X}(f*W, g)| == |Hom_{/Y}(W, Π_f g)| for W given over Y = cod f."""
    dp = dependent_product(f, g)
    pb = pullback(w, f)  # W ×_Y X over X via second projection
    fstar_w = FinMap(pb.apex, f.dom, tuple(x for (_, x) in pb.pairs))
    lhs = slice_hom_count(f.dom, fstar_w, g)
    rhs = slice_hom_count(f.cod, w, dp.display)
    return lhs == rhs


@dataclass(frozen=True)
class PresheafExpResult:
    """Exponential of set-valued diagrams over a finite shape.

    Element at c: a natural family alpha over all triples (d, g: c -> d,
    x in X(d)) valued in Y(d); stored as a value tuple over the sorted
    triple list.
    """

    value: Diagram
    triples: tuple  # per shape object c: tuple of (d, g, x)
    keys: tuple     # per shape object c: tuple of value-tuples
    X: Diagram
    Y: Diagram

    def ev(self, c: int, e: int, x: int) -> int:
        """Evaluate element e of value(c) at x in X(c)."""
        ident = self.X.shape.id_(c)
        pos = self.triples[c].index((c, ident, x))
        return self.keys[c][e][pos]

    def at(self, c: int, e: int, d: int, g: int, x: int) -> int:
        """Raw family value of element e at the triple (d, g: c -> d, x in X(d))."""
        return self.keys[c][e][self.triples[c].index((d, g, x))]

    def index_of(self, c: int, fn) -> int:
        """Element index at c for the family fn(d, g, x)."""
        want = tuple(fn(d, g, x) for (d, g, x) in self.triples[c])
        return self.keys[c].index(want)


def _natural_families(shape: FinCat, X: Diagram, Y: Diagram, c: int):
    """All natural families on triples (d, g: c->d, x in X(d)), lexicographically."""
    triples = []
    for d in range(shape.objects.size):
        for g in shape.hom(c, d):
            for x in range(X.on_obj[d].size):
                triples.append((d, g, x))
    triples = tuple(sorted(triples))
    pos = {t: i for i, t in enumerate(triples)}
    # naturality: value(d', h∘g, X(h)x) = Y(h)(value(d, g, x)) for h: d -> d'
    constraints = []  # (earlier_pos, later_pos, h) meaning later = Y(h)(earlier)
    for i, (d, g, x) in enumerate(triples):
        for h in range(shape.morphisms.size):
            if shape.src(h) != d:
                continue
            d2 = shape.tgt(h)
            j = pos[(d2, shape.compose(h, g), X.on_mor[h](x))]
            constraints.append((i, j, h))
    results = []
    assignment = [None] * len(triples)

    def backtrack(k: int):
        if k == len(triples):
            results.append(tuple(assignment))
            return
        d, g, x = triples[k]
        for val in range(Y.on_obj[d].size):
            assignment[k] = val
            ok = True
            for (i, j, h) in constraints:
                if assignment[i] is None or assignment[j] is None:
                    continue
                if Y.on_mor[h](assignment[i]) != assignment[j]:
                    ok = False
                    break
            if ok:
                backtrack(k + 1)
        assignment[k] = None

    backtrack(0)
    return triples, tuple(results)


def presheaf_exponential(shape: FinCat, X: Diagram, Y: Diagram) -> PresheafExpResult:
    """Exponential Y^X in [shape, FinSet]: value at c is Nat(hom(c,-) × X, Y)."""
    if X.shape != shape or Y.shape != shape:
        raise StructureError("presheaf_exponential: shared shape required")
    per_c_triples = []
    per_c_keys = []
    for c in range(shape.objects.size):
        triples, keys = _natural_families(shape, X, Y, c)
        per_c_triples.append(triples)
        per_c_keys.append(keys)
    on_obj = tuple(FinSet(len(ks)) for ks in per_c_keys)
    on_mor = []
    for m in range(shape.morphisms.size):
        c0, c1 = shape.src(m), shape.tgt(m)
        table = []
        for key in per_c_keys[c0]:
            # restriction along m: alpha'(d, g, x) = alpha(d, g∘m, x)
            want = tuple(
                key[per_c_triples[c0].index((d, shape.compose(g, m), x))]
                for (d, g, x) in per_c_triples[c1]
            )
            table.append(per_c_keys[c1].index(want))
        on_mor.append(FinMap(on_obj[c0], on_obj[c1], tuple(table)))
    value = Diagram(shape, on_obj, tuple(on_mor))
    return PresheafExpResult(value, tuple(per_c_triples), tuple(per_c_keys), X, Y)
