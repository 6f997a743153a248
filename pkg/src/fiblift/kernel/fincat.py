"""Finite categories, functors, set-valued diagrams and natural transformations.

Composition tables are dense arrays with -1 for non-composable pairs;
all laws are checked eagerly at construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .finset import FinMap, FinSet, StructureError, all_maps

NOT_COMPOSABLE = -1


@dataclass(frozen=True)
class FinCat:
    objects: FinSet
    morphisms: FinSet
    src: FinMap  # morphisms -> objects
    tgt: FinMap  # morphisms -> objects
    id_: FinMap  # objects -> morphisms
    comp: tuple  # comp[g][f] = index of g∘f, or NOT_COMPOSABLE

    def __post_init__(self):
        object.__setattr__(self, "comp", tuple(tuple(row) for row in self.comp))
        no, nm = self.objects.size, self.morphisms.size
        if self.src.dom.size != nm or self.tgt.dom.size != nm or self.id_.dom.size != no:
            raise StructureError("FinCat: src/tgt/id arity mismatch")
        if len(self.comp) != nm or any(len(row) != nm for row in self.comp):
            raise StructureError("FinCat: composition table must be morphisms x morphisms")
        for o in range(no):
            i = self.id_(o)
            if self.src(i) != o or self.tgt(i) != o:
                raise StructureError(f"FinCat: id of object {o} is not an endomorphism at {o}")
        for g in range(nm):
            for f in range(nm):
                gf = self.comp[g][f]
                composable = self.tgt(f) == self.src(g)
                if composable != (gf != NOT_COMPOSABLE):
                    raise StructureError(f"FinCat: composability of ({g},{f}) wrong in table")
                if gf != NOT_COMPOSABLE:
                    if self.src(gf) != self.src(f) or self.tgt(gf) != self.tgt(g):
                        raise StructureError(f"FinCat: comp({g},{f}) endpoints wrong")
        for f in range(nm):
            if self.comp[f][self.id_(self.src(f))] != f:
                raise StructureError(f"FinCat: right identity fails at {f}")
            if self.comp[self.id_(self.tgt(f))][f] != f:
                raise StructureError(f"FinCat: left identity fails at {f}")
        for h in range(nm):
            for g in range(nm):
                if self.tgt(g) != self.src(h):
                    continue
                hg = self.comp[h][g]
                for f in range(nm):
                    if self.tgt(f) != self.src(g):
                        continue
                    if self.comp[hg][f] != self.comp[h][self.comp[g][f]]:
                        raise StructureError(f"FinCat: associativity fails at ({h},{g},{f})")

    def compose(self, g: int, f: int) -> int:
        """g ∘ f."""
        r = self.comp[g][f]
        if r == NOT_COMPOSABLE:
            raise StructureError("not composable")
        return r

    def hom(self, a: int, b: int) -> list[int]:
        return [m for m in range(self.morphisms.size) if self.src(m) == a and self.tgt(m) == b]

    def op(self) -> "FinCat":
        return FinCat(self.objects, self.morphisms, self.tgt, self.src, self.id_,
                      tuple(tuple(self.comp[f][g] for f in range(self.morphisms.size))
                            for g in range(self.morphisms.size)))


def terminal_cat() -> FinCat:
    one = FinSet(1)
    return FinCat(one, one, FinMap(one, one, (0,)), FinMap(one, one, (0,)),
                  FinMap(one, one, (0,)), ((0,),))


def empty_cat() -> FinCat:
    zero = FinSet(0)
    none = FinMap(zero, zero, ())
    return FinCat(zero, zero, none, none, none, ())


def discrete_cat(n: int) -> FinCat:
    objs = FinSet(n)
    ident = FinMap(objs, objs, tuple(range(n)))
    comp = tuple(tuple(g if g == f else NOT_COMPOSABLE for f in range(n)) for g in range(n))
    return FinCat(objs, objs, ident, ident, ident, comp)


def arrow_cat() -> FinCat:
    """Objects 0 -> 1; morphisms: id0, id1, arr."""
    objs, mors = FinSet(2), FinSet(3)
    src = FinMap(mors, objs, (0, 1, 0))
    tgt = FinMap(mors, objs, (0, 1, 1))
    id_ = FinMap(objs, mors, (0, 1))
    n = NOT_COMPOSABLE
    comp = ((0, n, n), (n, 1, 2), (2, n, n))
    return FinCat(objs, mors, src, tgt, id_, comp)


def span_cat() -> FinCat:
    """Objects 1 <- 0 -> 2; morphisms: id0, id1, id2, l: 0->1, r: 0->2."""
    objs, mors = FinSet(3), FinSet(5)
    src = FinMap(mors, objs, (0, 1, 2, 0, 0))
    tgt = FinMap(mors, objs, (0, 1, 2, 1, 2))
    id_ = FinMap(objs, mors, (0, 1, 2))
    n = NOT_COMPOSABLE
    comp = (
        (0, n, n, n, n),
        (n, 1, n, 3, n),
        (n, n, 2, n, 4),
        (3, n, n, n, n),
        (4, n, n, n, n),
    )
    return FinCat(objs, mors, src, tgt, id_, comp)


def parallel_pair_cat() -> FinCat:
    """Objects 0 ⇉ 1; morphisms: id0, id1, e0, e1."""
    objs, mors = FinSet(2), FinSet(4)
    src = FinMap(mors, objs, (0, 1, 0, 0))
    tgt = FinMap(mors, objs, (0, 1, 1, 1))
    id_ = FinMap(objs, mors, (0, 1))
    n = NOT_COMPOSABLE
    comp = ((0, n, n, n), (n, 1, 2, 3), (2, n, n, n), (3, n, n, n))
    return FinCat(objs, mors, src, tgt, id_, comp)


@dataclass(frozen=True)
class FunctorData:
    dom: FinCat
    cod: FinCat
    on_obj: FinMap
    on_mor: FinMap

    def __post_init__(self):
        if self.on_obj.dom != self.dom.objects or self.on_obj.cod != self.cod.objects:
            raise StructureError("FunctorData: object map arity mismatch")
        if self.on_mor.dom != self.dom.morphisms or self.on_mor.cod != self.cod.morphisms:
            raise StructureError("FunctorData: morphism map arity mismatch")
        for m in range(self.dom.morphisms.size):
            if self.cod.src(self.on_mor(m)) != self.on_obj(self.dom.src(m)):
                raise StructureError(f"FunctorData: src not preserved at {m}")
            if self.cod.tgt(self.on_mor(m)) != self.on_obj(self.dom.tgt(m)):
                raise StructureError(f"FunctorData: tgt not preserved at {m}")
        for o in range(self.dom.objects.size):
            if self.on_mor(self.dom.id_(o)) != self.cod.id_(self.on_obj(o)):
                raise StructureError(f"FunctorData: identity not preserved at {o}")
        for g in range(self.dom.morphisms.size):
            for f in range(self.dom.morphisms.size):
                if self.dom.tgt(f) != self.dom.src(g):
                    continue
                if self.on_mor(self.dom.compose(g, f)) != self.cod.compose(self.on_mor(g), self.on_mor(f)):
                    raise StructureError(f"FunctorData: composition not preserved at ({g},{f})")

    def compose(self, other: "FunctorData") -> "FunctorData":
        """self after other."""
        return FunctorData(other.dom, self.cod,
                           self.on_obj.compose(other.on_obj),
                           self.on_mor.compose(other.on_mor))


def identity_functor(c: FinCat) -> FunctorData:
    from .finset import identity as idmap
    return FunctorData(c, c, idmap(c.objects), idmap(c.morphisms))


def functor_to_terminal(c: FinCat) -> FunctorData:
    t = terminal_cat()
    return FunctorData(c, t,
                       FinMap(c.objects, t.objects, tuple(0 for _ in range(c.objects.size))),
                       FinMap(c.morphisms, t.morphisms, tuple(0 for _ in range(c.morphisms.size))))


def all_functors(a: FinCat, b: FinCat) -> list[FunctorData]:
    """All functors a -> b in lexicographic (on_obj, on_mor) order."""
    out = []
    for on_obj in all_maps(a.objects, b.objects):
        choices = []
        feasible = True
        for m in range(a.morphisms.size):
            cands = [bm for bm in range(b.morphisms.size)
                     if b.src(bm) == on_obj(a.src(m)) and b.tgt(bm) == on_obj(a.tgt(m))]
            if not cands:
                feasible = False
                break
            choices.append(cands)
        if not feasible:
            continue
        for table in itertools.product(*choices):
            on_mor = FinMap(a.morphisms, b.morphisms, table)
            try:
                out.append(FunctorData(a, b, on_obj, on_mor))
            except StructureError:
                continue
    return out


@dataclass(frozen=True)
class Diagram:
    """A functor shape -> FinSet, given by tables."""

    shape: FinCat
    on_obj: tuple  # FinSet per shape object
    on_mor: tuple  # FinMap per shape morphism

    def __post_init__(self):
        object.__setattr__(self, "on_obj", tuple(self.on_obj))
        object.__setattr__(self, "on_mor", tuple(self.on_mor))
        if len(self.on_obj) != self.shape.objects.size:
            raise StructureError("Diagram: object count mismatch")
        if len(self.on_mor) != self.shape.morphisms.size:
            raise StructureError("Diagram: morphism count mismatch")
        for m, fm in enumerate(self.on_mor):
            if fm.dom != self.on_obj[self.shape.src(m)] or fm.cod != self.on_obj[self.shape.tgt(m)]:
                raise StructureError(f"Diagram: map at {m} has wrong endpoints")
        for o in range(self.shape.objects.size):
            if not self.on_mor[self.shape.id_(o)].is_identity():
                raise StructureError(f"Diagram: identity not preserved at {o}")
        for g in range(self.shape.morphisms.size):
            for f in range(self.shape.morphisms.size):
                if self.shape.tgt(f) != self.shape.src(g):
                    continue
                gf = self.shape.compose(g, f)
                if self.on_mor[gf].table != self.on_mor[g].compose(self.on_mor[f]).table:
                    raise StructureError(f"Diagram: functoriality fails at ({g},{f})")

    def at(self, o: int) -> FinSet:
        return self.on_obj[o]

    def map(self, m: int) -> FinMap:
        return self.on_mor[m]

    def restrict_along(self, F: FunctorData) -> "Diagram":
        """Precompose with F (reindexing of diagrams)."""
        if F.cod is not self.shape and F.cod != self.shape:
            raise StructureError("restrict_along: shape mismatch")
        return Diagram(F.dom,
                       tuple(self.on_obj[F.on_obj(o)] for o in range(F.dom.objects.size)),
                       tuple(self.on_mor[F.on_mor(m)] for m in range(F.dom.morphisms.size)))


def constant_diagram(shape: FinCat, value: FinSet) -> Diagram:
    from .finset import identity as idmap
    return Diagram(shape,
                   tuple(value for _ in range(shape.objects.size)),
                   tuple(idmap(value) for _ in range(shape.morphisms.size)))


@dataclass(frozen=True)
class NatTransData:
    source: Diagram
    target: Diagram
    components: tuple  # FinMap per shape object

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.source.shape != self.target.shape:
            raise StructureError("NatTransData: shape mismatch")
        shape = self.source.shape
        if len(self.components) != shape.objects.size:
            raise StructureError("NatTransData: component count mismatch")
        for o, c in enumerate(self.components):
            if c.dom != self.source.on_obj[o] or c.cod != self.target.on_obj[o]:
                raise StructureError(f"NatTransData: component at {o} has wrong endpoints")
        for m in range(shape.morphisms.size):
            a, b = shape.src(m), shape.tgt(m)
            left = self.components[b].compose(self.source.on_mor[m])
            right = self.target.on_mor[m].compose(self.components[a])
            if left.table != right.table:
                raise StructureError(f"NatTransData: naturality fails at morphism {m}")

    def at(self, o: int) -> FinMap:
        return self.components[o]

    def compose(self, other: "NatTransData") -> "NatTransData":
        """self after other."""
        return NatTransData(other.source, self.target,
                            tuple(self.components[o].compose(other.components[o])
                                  for o in range(len(self.components))))

    def is_iso(self) -> bool:
        return all(c.is_iso() for c in self.components)


def identity_nat(d: Diagram) -> NatTransData:
    from .finset import identity as idmap
    return NatTransData(d, d, tuple(idmap(s) for s in d.on_obj))


def all_nat_trans(source: Diagram, target: Diagram) -> list[NatTransData]:
    """All natural transformations, lexicographic in component tables."""
    shape = source.shape
    out = []
    per_obj = []
    for o in range(shape.objects.size):
        per_obj.append(list(all_maps(source.on_obj[o], target.on_obj[o])))
    for combo in itertools.product(*per_obj) if per_obj else [()]:
        try:
            out.append(NatTransData(source, target, tuple(combo)))
        except StructureError:
            continue
    return out
