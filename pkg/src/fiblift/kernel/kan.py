"""Colimits of diagrams, comma categories, and pointwise left Kan extensions."""

from __future__ import annotations

from dataclasses import dataclass

from .fincat import Diagram, FinCat, FunctorData, NatTransData, NOT_COMPOSABLE
from .finset import FinMap, FinSet, IndexedSet, StructureError
from .unionfind import UnionFind


@dataclass(frozen=True)
class ColimitResult:
    value: FinSet
    cocone: tuple  # FinMap per shape object, D(o) -> value

    def induce(self, maps) -> FinMap:
        """Mediating map to the tip of a commuting cocone given per-object maps."""
        maps = tuple(maps)
        if not maps:
            return FinMap(self.value, FinSet(0), ()) if self.value.size == 0 else None
        cod = maps[0].cod
        table = [None] * self.value.size
        for o, leg in enumerate(self.cocone):
            for x in range(leg.dom.size):
                t = maps[o](x)
                if table[leg(x)] is not None and table[leg(x)] != t:
                    raise StructureError("induce: cocone does not commute")
                table[leg(x)] = t
        if any(t is None for t in table):
            raise StructureError("induce: colimit not covered")
        return FinMap(self.value, cod, tuple(table))


def colimit(d: Diagram) -> ColimitResult:
    """Coequalizer of the two maps ∐_morphisms ⇉ ∐_objects."""
    shape = d.shape
    offsets = []
    total = 0
    for o in range(shape.objects.size):
        offsets.append(total)
        total += d.on_obj[o].size
    uf = UnionFind(total)
    for m in range(shape.morphisms.size):
        a, b = shape.src(m), shape.tgt(m)
        fm = d.on_mor[m]
        for x in range(fm.dom.size):
            uf.union(offsets[a] + x, offsets[b] + fm(x))
    cls = uf.classes()
    value = FinSet(uf.n_classes())
    cocone = tuple(
        FinMap(d.on_obj[o], value, tuple(cls[offsets[o] + x] for x in range(d.on_obj[o].size)))
        for o in range(shape.objects.size)
    )
    return ColimitResult(value, cocone)


@dataclass(frozen=True)
class CommaResult:
    cat: FinCat
    proj0: FunctorData
    proj1: FunctorData
    obj_keys: tuple  # (a, b, mediating morphism index) per comma object
    mor_keys: tuple  # (src comma obj, tgt comma obj, alpha, beta) per comma morphism


def comma_category(F: FunctorData, G: FunctorData) -> CommaResult:
    """Comma category (F ↓ G) for functors into a shared finite category."""
    if F.cod != G.cod:
        raise StructureError("comma: codomain categories differ")
    C = F.cod
    A, B = F.dom, G.dom
    objs = []
    for a in range(A.objects.size):
        for b in range(B.objects.size):
            for phi in C.hom(F.on_obj(a), G.on_obj(b)):
                objs.append((a, b, phi))
    objs = tuple(sorted(objs))
    obj_index = {k: i for i, k in enumerate(objs)}
    mors = []
    for i, (a, b, phi) in enumerate(objs):
        for alpha in range(A.morphisms.size):
            if A.src(alpha) != a:
                continue
            for beta in range(B.morphisms.size):
                if B.src(beta) != b:
                    continue
                a2, b2 = A.tgt(alpha), B.tgt(beta)
                for phi2 in C.hom(F.on_obj(a2), G.on_obj(b2)):
                    # G(beta) ∘ phi = phi2 ∘ F(alpha)
                    if C.compose(G.on_mor(beta), phi) == C.compose(phi2, F.on_mor(alpha)):
                        mors.append((i, obj_index[(a2, b2, phi2)], alpha, beta))
    mors = tuple(sorted(mors))
    mor_index = {k: i for i, k in enumerate(mors)}
    n_obj, n_mor = len(objs), len(mors)
    obj_fs, mor_fs = FinSet(n_obj), FinSet(n_mor)
    src = FinMap(mor_fs, obj_fs, tuple(m[0] for m in mors))
    tgt = FinMap(mor_fs, obj_fs, tuple(m[1] for m in mors))
    id_table = []
    for i, (a, b, phi) in enumerate(objs):
        id_table.append(mor_index[(i, i, A.id_(a), B.id_(b))])
    id_ = FinMap(obj_fs, mor_fs, tuple(id_table))
    comp = [[NOT_COMPOSABLE] * n_mor for _ in range(n_mor)]
    for gi, (gs, gt, ga, gb) in enumerate(mors):
        for fi, (fs, ft, fa, fb) in enumerate(mors):
            if ft != gs:
                continue
            comp[gi][fi] = mor_index[(fs, gt, A.compose(ga, fa), B.compose(gb, fb))]
    cat = FinCat(obj_fs, mor_fs, src, tgt, id_, tuple(tuple(r) for r in comp))
    proj0 = FunctorData(cat, A,
                        FinMap(obj_fs, A.objects, tuple(o[0] for o in objs)),
                        FinMap(mor_fs, A.morphisms, tuple(m[2] for m in mors)))
    proj1 = FunctorData(cat, B,
                        FinMap(obj_fs, B.objects, tuple(o[1] for o in objs)),
                        FinMap(mor_fs, B.morphisms, tuple(m[3] for m in mors)))
    return CommaResult(cat, proj0, proj1, objs, mors)


@dataclass(frozen=True)
class DiagramCommaResult:
    """Comma category (X ↓ Y) for set-valued diagrams X over A, Y over B.

    Objects are triples (a, b, phi-table) with phi: X(a) -> Y(b).
    """

    cat: FinCat
    proj0: FunctorData
    proj1: FunctorData
    obj_keys: tuple
    mor_keys: tuple

    def obj_component(self, i: int) -> FinMap:
        a, b, table, xa, yb = self.obj_keys[i]
        return FinMap(xa, yb, table)


def diagram_comma(X: Diagram, Y: Diagram) -> DiagramCommaResult:
    A, B = X.shape, Y.shape
    objs = []
    for a in range(A.objects.size):
        for b in range(B.objects.size):
            xa, yb = X.on_obj[a], Y.on_obj[b]
            if xa.size == 0:
                objs.append((a, b, (), xa, yb))
                continue
            import itertools as _it
            for table in _it.product(range(yb.size), repeat=xa.size):
                objs.append((a, b, table, xa, yb))
    objs = tuple(sorted(objs, key=lambda k: (k[0], k[1], k[2])))
    obj_index = {(k[0], k[1], k[2]): i for i, k in enumerate(objs)}
    mors = []
    for i, (a, b, table, xa, yb) in enumerate(objs):
        for alpha in range(A.morphisms.size):
            if A.src(alpha) != a:
                continue
            for beta in range(B.morphisms.size):
                if B.src(beta) != b:
                    continue
                a2, b2 = A.tgt(alpha), B.tgt(beta)
                # phi2 ∘ X(alpha) = Y(beta) ∘ phi is a constraint, not determined:
                # enumerate phi2 satisfying it.
                xmap, ymap = X.on_mor[alpha], Y.on_mor[beta]
                xa2, yb2 = X.on_obj[a2], Y.on_obj[b2]
                import itertools as _it
                for table2 in (_it.product(range(yb2.size), repeat=xa2.size) if xa2.size else [()]):
                    ok = all(table2[xmap(x)] == ymap(table[x]) for x in range(xa.size))
                    if ok:
                        mors.append((i, obj_index[(a2, b2, table2)], alpha, beta))
    mors = tuple(sorted(mors))
    mor_index = {k: i for i, k in enumerate(mors)}
    n_obj, n_mor = len(objs), len(mors)
    obj_fs, mor_fs = FinSet(n_obj), FinSet(n_mor)
    src = FinMap(mor_fs, obj_fs, tuple(m[0] for m in mors))
    tgt = FinMap(mor_fs, obj_fs, tuple(m[1] for m in mors))
    id_ = FinMap(obj_fs, mor_fs,
                 tuple(mor_index[(i, i, A.id_(k[0]), B.id_(k[1]))] for i, k in enumerate(objs)))
    comp = [[NOT_COMPOSABLE] * n_mor for _ in range(n_mor)]
    for gi, (gs, gt, ga, gb) in enumerate(mors):
        for fi, (fs, ft, fa, fb) in enumerate(mors):
            if ft != gs:
                continue
            comp[gi][fi] = mor_index[(fs, gt, A.compose(ga, fa), B.compose(gb, fb))]
    cat = FinCat(obj_fs, mor_fs, src, tgt, id_, tuple(tuple(r) for r in comp))
    proj0 = FunctorData(cat, A,
                        FinMap(obj_fs, A.objects, tuple(o[0] for o in objs)),
                        FinMap(mor_fs, A.morphisms, tuple(m[2] for m in mors)))
    proj1 = FunctorData(cat, B,
                        FinMap(obj_fs, B.objects, tuple(o[1] for o in objs)),
                        FinMap(mor_fs, B.morphisms, tuple(m[3] for m in mors)))
    return DiagramCommaResult(cat, proj0, proj1, objs, mors)


def functor_comma_to_object(F: FunctorData, b: int) -> CommaResult:
    """(F ↓ b): comma of F against the constant functor at b from the terminal category."""
    from .fincat import terminal_cat
    t = terminal_cat()
    B = F.cod
    const_b = FunctorData(t, B,
                          FinMap(t.objects, B.objects, (b,)),
                          FinMap(t.morphisms, B.morphisms, (B.id_(b),)))
    return comma_category(F, const_b)


@dataclass(frozen=True)
class LeftKanResult:
    value: Diagram  # over B
    unit: tuple  # FinMap D(a) -> value(F a), per object a of A
    comma_data: tuple  # per B-object: (CommaResult, ColimitResult)


def left_kan(F: FunctorData, D: Diagram) -> LeftKanResult:
    """Pointwise left Kan extension of D: A -> FinSet along F: A -> B.

    Value at b is the colimit of D restricted over (F ↓ b).
    """
    if D.shape != F.dom:
        raise StructureError("left_kan: diagram shape must be F.dom")
    A, B = F.dom, F.cod
    per_b = []
    for b in range(B.objects.size):
        comma = functor_comma_to_object(F, b)
        restricted = D.restrict_along(comma.proj0)
        col = colimit(restricted)
        per_b.append((comma, col))

    def comma_obj_index(b: int, a: int, g: int) -> int:
        comma, _ = per_b[b]
        return comma.obj_keys.index((a, 0, g))

    values = tuple(per_b[b][1].value for b in range(B.objects.size))
    on_mor = []
    for m in range(B.morphisms.size):
        b0, b1 = B.src(m), B.tgt(m)
        comma0, col0 = per_b[b0]
        comma1, col1 = per_b[b1]
        # post-composition with m sends (a, g: Fa -> b0) to (a, m∘g)
        maps = []
        for i, (a, _, g) in enumerate(comma0.obj_keys):
            j = comma_obj_index(b1, a, B.compose(m, g))
            maps.append(col1.cocone[j])
        table = col0.induce([maps[i] for i in range(len(comma0.obj_keys))]) if comma0.obj_keys else \
            FinMap(col0.value, col1.value, ())
        on_mor.append(table)
    value = Diagram(B, values, tuple(on_mor))
    unit = []
    for a in range(A.objects.size):
        b = F.on_obj(a)
        comma, col = per_b[b]
        i = comma_obj_index(b, a, B.id_(b))
        unit.append(col.cocone[i])
    return LeftKanResult(value, tuple(unit), tuple(per_b))


def lan_induce(F: FunctorData, D: Diagram, lan: LeftKanResult, target: Diagram, legs) -> NatTransData:
    """Mediating natural map Lan_F D -> target for a cocone given by legs.

    legs[a]: D(a) -> target(F a) must be natural in a.
    """
    B = F.cod
    comps = []
    for b in range(B.objects.size):
        comma, col = lan.comma_data[b]
        maps = []
        for (a, _, g) in comma.obj_keys:
            maps.append(target.on_mor[g].compose(legs[a]))
        if comma.obj_keys:
            comps.append(col.induce(maps))
        else:
            comps.append(FinMap(col.value, target.on_obj[b], ()))
    return NatTransData(lan.value, target, tuple(comps))
