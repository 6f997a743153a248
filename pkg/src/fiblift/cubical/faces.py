"""The face lattice: the distributive lattice of face constraints.

Generators (a=0), (a=1) per name with contradictory faces identified with
bottom.  Elements are irredundant antichains of consistent conjunctions;
joins and meets renormalize, so equality is syntactic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..kernel.finset import StructureError
from .demorgan import DMAlg, _canon, _prune


def _consistent(s: frozenset) -> bool:
    names = [n for (n, _) in s]
    return len(names) == len(set(names))


def _meet_raw(a, b) -> frozenset:
    out = set()
    for s in a:
        for t in b:
            u = frozenset(s) | frozenset(t)
            if _consistent(u):
                out.add(u)
    return _prune(out)


def _join_raw(a, b) -> frozenset:
    return _prune(set(frozenset(s) for s in a) | set(frozenset(t) for t in b))


@dataclass(frozen=True)
class FaceLat:
    names: tuple
    elements: tuple
    index: dict
    bottom: int
    top: int
    meet_table: tuple
    join_table: tuple

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def face(self, name, value: int) -> int:
        return self.index[_canon([frozenset([(name, value)])])]

    def size(self) -> int:
        return len(self.elements)


def face_lattice(names) -> FaceLat:
    names = tuple(names)
    if len(names) > 3:
        raise StructureError("face lattice capped at 3 names")
    seen = {}
    worklist = []

    def add(nf: frozenset):
        key = _canon(nf)
        if key not in seen:
            seen[key] = nf
            worklist.append(nf)

    add(frozenset())
    add(frozenset([frozenset()]))
    for n in names:
        add(frozenset([frozenset([(n, 0)])]))
        add(frozenset([frozenset([(n, 1)])]))
    while worklist:
        x = worklist.pop()
        for key in list(seen):
            y = seen[key]
            add(_meet_raw(x, y))
            add(_join_raw(x, y))
    elements = tuple(sorted(seen.keys()))
    index = {e: i for i, e in enumerate(elements)}
    nfs = [seen[e] for e in elements]
    n = len(elements)
    meet_table = tuple(tuple(index[_canon(_meet_raw(nfs[i], nfs[j]))] for j in range(n))
                       for i in range(n))
    join_table = tuple(tuple(index[_canon(_join_raw(nfs[i], nfs[j]))] for j in range(n))
                       for i in range(n))
    return FaceLat(names, elements, index,
                   index[_canon(frozenset())],
                   index[_canon(frozenset([frozenset()]))],
                   meet_table, join_table)


def dm_to_face(dm: DMAlg, fl: FaceLat, x: int) -> int:
    """The canonical quotient map: a |-> (a=1), not-a |-> (a=0)."""
    acc = fl.bottom
    for s in dm.elements[x]:
        cur = fl.top
        for (n, p) in s:
            cur = fl.meet(cur, fl.face(n, p))
        acc = fl.join(acc, cur)
    return acc


def face_substitute(src: FaceLat, dst_dm: DMAlg, dst_fl: FaceLat,
                    assignment: dict, x: int) -> int:
    """Functorial action along a cube morphism: (a=1) |-> image of sigma(a)
    under the quotient, (a=0) |-> image of its negation."""
    acc = dst_fl.bottom
    for s in src.elements[x]:
        cur = dst_fl.top
        for (n, p) in s:
            v = assignment[n]
            if p == 0:
                v = dst_dm.neg(v)
            cur = dst_fl.meet(cur, dm_to_face(dst_dm, dst_fl, v))
        acc = dst_fl.join(acc, cur)
    return acc


def check_lattice_laws(fl: FaceLat) -> bool:
    n = fl.size()
    rng = range(n)
    for x in rng:
        if fl.meet(x, x) != x or fl.join(x, x) != x:
            return False
        if fl.meet(x, fl.top) != x or fl.join(x, fl.bottom) != x:
            return False
    for x in rng:
        for y in rng:
            if fl.meet(x, y) != fl.meet(y, x) or fl.join(x, y) != fl.join(y, x):
                return False
            if fl.join(x, fl.meet(x, y)) != x or fl.meet(x, fl.join(x, y)) != x:
                return False
    for x in rng:
        for y in rng:
            for z in rng:
                if fl.meet(x, fl.meet(y, z)) != fl.meet(fl.meet(x, y), z):
                    return False
                if fl.join(x, fl.join(y, z)) != fl.join(fl.join(x, y), z):
                    return False
                if fl.meet(x, fl.join(y, z)) != fl.join(fl.meet(x, y), fl.meet(x, z)):
                    return False
    # contradictory faces collapse
    for name in fl.names:
        if fl.meet(fl.face(name, 0), fl.face(name, 1)) != fl.bottom:
            return False
    return True


def face_lattice_size_oracle(n_names: int) -> int:
    """Independent size oracle: elements separate by lattice maps to {0,1}
    respecting (a=0) ∧ (a=1) = 0, i.e. by their values on consistent
    0/1-assignments to the generators; close the generator functions under
    pointwise meet and join."""
    gens = []
    for i in range(n_names):
        for v in (0, 1):
            gens.append((i, v))
    valid = [w for w in itertools.product((0, 1), repeat=len(gens))
             if all(not (w[gens.index((i, 0))] and w[gens.index((i, 1))])
                    for i in range(n_names))]
    def gen_fn(g):
        return tuple(w[gens.index(g)] for w in valid)
    zero = tuple(0 for _ in valid)
    one = tuple(1 for _ in valid)
    seen = {zero, one, *(gen_fn(g) for g in gens)}
    worklist = list(seen)
    while worklist:
        f = worklist.pop()
        for g in list(seen):
            for c in (tuple(min(a, b) for a, b in zip(f, g)),
                      tuple(max(a, b) for a, b in zip(f, g))):
                if c not in seen:
                    seen.add(c)
                    worklist.append(c)
    return len(seen)
