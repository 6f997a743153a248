"""JSON (de)serialization for the structured-text schemas.

Schemas (documented in docs/formats.md):
  finite set   {"size": n, "labels": [...]?}
  map          {"dom": <set>, "cod": <set>, "table": [...]}
  category     {"objects": <set>, "morphisms": <set>, "src": [...],
                "tgt": [...], "id": [...], "comp": [[...]]}
  diagram      {"shape": <category>, "on_obj": [<set>...], "on_mor": [[...]...]}
  functor      {"dom": <category>, "cod": <category>, "on_obj": [...], "on_mor": [...]}
"""

from __future__ import annotations

from .fincat import Diagram, FinCat, FunctorData, NatTransData
from .finset import FinMap, FinSet, StructureError


def finset_to_json(s: FinSet) -> dict:
    out = {"size": s.size}
    if s.labels is not None:
        out["labels"] = list(s.labels)
    return out


def finset_from_json(d: dict) -> FinSet:
    labels = tuple(d["labels"]) if "labels" in d and d["labels"] is not None else None
    return FinSet(int(d["size"]), labels)


def finmap_to_json(m: FinMap) -> dict:
    return {"dom": finset_to_json(m.dom), "cod": finset_to_json(m.cod), "table": list(m.table)}


def finmap_from_json(d: dict) -> FinMap:
    return FinMap(finset_from_json(d["dom"]), finset_from_json(d["cod"]),
                  tuple(int(x) for x in d["table"]))


def fincat_to_json(c: FinCat) -> dict:
    return {
        "objects": finset_to_json(c.objects),
        "morphisms": finset_to_json(c.morphisms),
        "src": list(c.src.table),
        "tgt": list(c.tgt.table),
        "id": list(c.id_.table),
        "comp": [list(row) for row in c.comp],
    }


def fincat_from_json(d: dict) -> FinCat:
    objects = finset_from_json(d["objects"])
    morphisms = finset_from_json(d["morphisms"])
    return FinCat(
        objects,
        morphisms,
        FinMap(morphisms, objects, tuple(d["src"])),
        FinMap(morphisms, objects, tuple(d["tgt"])),
        FinMap(objects, morphisms, tuple(d["id"])),
        tuple(tuple(row) for row in d["comp"]),
    )


def diagram_to_json(g: Diagram) -> dict:
    return {
        "shape": fincat_to_json(g.shape),
        "on_obj": [finset_to_json(s) for s in g.on_obj],
        "on_mor": [list(m.table) for m in g.on_mor],
    }


def diagram_from_json(d: dict) -> Diagram:
    shape = fincat_from_json(d["shape"])
    on_obj = tuple(finset_from_json(s) for s in d["on_obj"])
    on_mor = tuple(
        FinMap(on_obj[shape.src(m)], on_obj[shape.tgt(m)], tuple(d["on_mor"][m]))
        for m in range(shape.morphisms.size)
    )
    return Diagram(shape, on_obj, on_mor)


def functor_to_json(f: FunctorData) -> dict:
    return {
        "dom": fincat_to_json(f.dom),
        "cod": fincat_to_json(f.cod),
        "on_obj": list(f.on_obj.table),
        "on_mor": list(f.on_mor.table),
    }


def functor_from_json(d: dict) -> FunctorData:
    dom = fincat_from_json(d["dom"])
    cod = fincat_from_json(d["cod"])
    return FunctorData(
        dom, cod,
        FinMap(dom.objects, cod.objects, tuple(d["on_obj"])),
        FinMap(dom.morphisms, cod.morphisms, tuple(d["on_mor"])),
    )


def nat_to_json(n: NatTransData) -> dict:
    return {
        "source": diagram_to_json(n.source),
        "target": diagram_to_json(n.target),
        "components": [list(c.table) for c in n.components],
    }


def nat_from_json(d: dict) -> NatTransData:
    source = diagram_from_json(d["source"])
    target = diagram_from_json(d["target"])
    comps = tuple(
        FinMap(source.on_obj[o], target.on_obj[o], tuple(d["components"][o]))
        for o in range(source.shape.objects.size)
    )
    return NatTransData(source, target, comps)
