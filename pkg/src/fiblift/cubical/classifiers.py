"""Interval and face-lattice presheaves over the truncated cube category,
the extensionality check, and the quotient/syntactic agreement."""

from __future__ import annotations

from dataclasses import dataclass

from ..kernel.fincat import Diagram, NatTransData
from ..kernel.finset import FinMap, FinSet
from .cubes import CubeCatTrunc, cube_cat_as_fincat
from .demorgan import substitute
from .faces import dm_to_face, face_lattice, face_substitute


@dataclass(frozen=True)
class Classifier:
    """A pointed presheaf over the truncated cube category.

    stages[i] lists the canonical elements at object i; point[i] is the
    distinguished element; action(sigma, i, j, x) applies a cube morphism.
    """

    name: str
    cc: CubeCatTrunc
    sizes: tuple
    points: tuple
    _action: object

    def act(self, i: int, j: int, sigma, x: int) -> int:
        return self._action(i, j, sigma, x)


def interval_classifier(cc: CubeCatTrunc, endpoint: int = 1) -> Classifier:
    """The interval presheaf with a chosen endpoint (0 or 1) as the point."""
    def action(i, j, sigma, x):
        return substitute(cc.algebras[i], cc.algebras[j], dict(sigma), x)

    sizes = tuple(alg.size() for alg in cc.algebras)
    points = tuple(alg.top if endpoint == 1 else alg.bottom for alg in cc.algebras)
    return Classifier("interval", cc, sizes, points, action)


def face_classifier(cc: CubeCatTrunc) -> Classifier:
    """The face-lattice presheaf pointed by the top face."""
    lattices = tuple(face_lattice(names) for names in cc.objects)

    def action(i, j, sigma, x):
        return face_substitute(lattices[i], cc.algebras[j], lattices[j],
                               dict(sigma), x)

    sizes = tuple(fl.size() for fl in lattices)
    points = tuple(fl.top for fl in lattices)
    cl = Classifier("face", cc, sizes, points, action)
    object.__setattr__(cl, "lattices", lattices)
    return cl


def trivial_classifier(cc: CubeCatTrunc) -> Classifier:
    def action(i, j, sigma, x):
        return 0

    sizes = tuple(1 for _ in cc.objects)
    return Classifier("trivial", cc, sizes, tuple(0 for _ in cc.objects), action)


def extensionality_check(classifier: Classifier, stage_bound: int = 2,
                         target_bound: int = 1):
    """Internal propositional extensionality at every stage within the
    bound: if two elements are carried to the point by exactly the same
    substitutions (into stages within the target bound), they must be
    equal.  Returns (ok, witness)."""
    cc = classifier.cc
    for i, names in enumerate(cc.objects):
        if len(names) > stage_bound:
            continue
        n = classifier.sizes[i]
        for x in range(n):
            for y in range(x + 1, n):
                same = True
                for j, names_j in enumerate(cc.objects):
                    if len(names_j) > target_bound:
                        continue
                    for sigma in cc.hom(i, j):
                        hit_x = classifier.act(i, j, sigma, x) == classifier.points[j]
                        hit_y = classifier.act(i, j, sigma, y) == classifier.points[j]
                        if hit_x != hit_y:
                            same = False
                            break
                    if not same:
                        break
                if same:
                    return False, (i, x, y)
    return True, None


def quotient_matches_syntactic(cc: CubeCatTrunc, stage_bound: int = 2,
                               target_bound: int = 1) -> bool:
    """At every stage within the bound, the quotient of the interval by
    "equal substitutions hit 1" agrees with the syntactic face lattice:
    the canonical map identifies exactly the quotient classes, onto.

    Substitution targets are bounded separately: stages of size <= 1
    already separate face classes (they include all endpoint valuations),
    so the truncated profile computes the same relation."""
    lattices = tuple(face_lattice(names) for names in cc.objects)
    for i, names in enumerate(cc.objects):
        if len(names) > stage_bound:
            continue
        alg = cc.algebras[i]
        fl = lattices[i]

        def hits_one(x):
            out = []
            for j, names_j in enumerate(cc.objects):
                if len(names_j) > target_bound:
                    continue
                for sigma in cc.hom(i, j):
                    out.append(substitute(alg, cc.algebras[j], dict(sigma), x)
                               == cc.algebras[j].top)
            return tuple(out)

        profile = {x: hits_one(x) for x in range(alg.size())}
        images = {x: dm_to_face(alg, fl, x) for x in range(alg.size())}
        if set(images.values()) != set(range(fl.size())):
            return False
        for x in range(alg.size()):
            for y in range(alg.size()):
                if (profile[x] == profile[y]) != (images[x] == images[y]):
                    return False
    return True


def classifier_presheaf(classifier: Classifier):
    """Present a classifier as a set-valued diagram on the cube category
    (cubical sets are covariant functors on cubes), with the point as a
    natural map from the terminal.  Returns (shape, diagram, point)."""
    cc = classifier.cc
    shape, mors = cube_cat_as_fincat(cc)
    on_obj = tuple(FinSet(classifier.sizes[i]) for i in range(len(cc.objects)))
    on_mor = []
    for (i, j, m) in mors:
        table = tuple(classifier.act(i, j, m, x) for x in range(classifier.sizes[i]))
        on_mor.append(FinMap(on_obj[i], on_obj[j], table))
    diagram = Diagram(shape, on_obj, tuple(on_mor))
    one = FinSet(1)
    terminal = Diagram(shape, tuple(one for _ in range(len(cc.objects))),
                       tuple(FinMap(one, one, (0,)) for _ in mors))
    point = NatTransData(terminal, diagram,
                         tuple(FinMap(one, on_obj[i], (classifier.points[i],))
                               for i in range(len(cc.objects))))
    return shape, diagram, point
