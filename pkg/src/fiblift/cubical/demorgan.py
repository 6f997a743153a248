"""Free de Morgan algebras on finite name sets.

Elements are canonical join-of-meets normal forms over the literals
{a, not-a}: irredundant antichains (no meet contains another) with a
fixed literal order, so equality is syntactic.  The empty join is 0 and
the join containing the empty meet is 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..kernel.finset import StructureError

# a literal is (name, polarity) with polarity 1 for the name, 0 for its negation


def _prune(meets) -> frozenset:
    """Drop meets that contain another meet (they are absorbed)."""
    meets = set(meets)
    keep = []
    for s in meets:
        if not any(t < s for t in meets):
            keep.append(s)
    return frozenset(keep)


def _canon(meets) -> tuple:
    """Deterministic tuple form of an antichain for ordering and display."""
    return tuple(sorted(tuple(sorted(s)) for s in meets))


@dataclass(frozen=True)
class DMAlg:
    """The free de Morgan algebra on a tuple of names."""

    names: tuple
    elements: tuple          # canonical order: sorted antichain tuples
    index: dict
    bottom: int
    top: int
    meet_table: tuple
    join_table: tuple
    neg_table: tuple

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def var(self, name) -> int:
        return self.index[_canon([frozenset([(name, 1)])])]

    def nvar(self, name) -> int:
        return self.index[_canon([frozenset([(name, 0)])])]

    def size(self) -> int:
        return len(self.elements)

    def element_meets(self, x: int):
        return [frozenset(s) for s in self.elements[x]]


def _meet_raw(a, b) -> frozenset:
    out = set()
    for s in a:
        for t in b:
            out.add(frozenset(s) | frozenset(t))
    return _prune(out)


def _join_raw(a, b) -> frozenset:
    return _prune(set(frozenset(s) for s in a) | set(frozenset(t) for t in b))


def _neg_raw(a) -> frozenset:
    """De Morgan dual: meet of joins of negated literals, redistributed."""
    a = list(a)
    if not a:
        return frozenset([frozenset()])  # neg 0 = 1
    choices = []
    for s in a:
        choices.append([(n, 1 - p) for (n, p) in sorted(s)])
        if not choices[-1]:
            return frozenset()  # a meet was empty: the join contains 1, neg = 0
    out = set()
    for combo in itertools.product(*choices):
        out.add(frozenset(combo))
    return _prune(out)


def dm_free(names) -> DMAlg:
    """Close {0, 1, literals} under meet, join and negation in normal form."""
    names = tuple(names)
    if len(names) > 3:
        raise StructureError("free de Morgan algebra capped at 3 names")
    seen = {}
    worklist = []

    def add(nf: frozenset):
        key = _canon(nf)
        if key not in seen:
            seen[key] = nf
            worklist.append(nf)

    add(frozenset())                       # 0
    add(frozenset([frozenset()]))          # 1
    for n in names:
        add(frozenset([frozenset([(n, 1)])]))
        add(frozenset([frozenset([(n, 0)])]))
    while worklist:
        x = worklist.pop()
        add(_neg_raw(x))
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
    neg_table = tuple(index[_canon(_neg_raw(nfs[i]))] for i in range(n))
    return DMAlg(names, elements, index,
                 index[_canon(frozenset())],
                 index[_canon(frozenset([frozenset()]))],
                 meet_table, join_table, neg_table)


def substitute(src: DMAlg, dst: DMAlg, assignment: dict, x: int) -> int:
    """Evaluate element x of src in dst under name |-> dst element."""
    meets = src.elements[x]
    acc = dst.bottom
    for s in meets:
        cur = dst.top
        for (n, p) in s:
            v = assignment[n]
            if p == 0:
                v = dst.neg(v)
            cur = dst.meet(cur, v)
        acc = dst.join(acc, cur)
    return acc


def check_de_morgan_laws(alg: DMAlg) -> bool:
    """Bounded distributive lattice laws plus the involution identities,
    over all element pairs and triples."""
    n = alg.size()
    rng = range(n)
    for x in rng:
        if alg.meet(x, x) != x or alg.join(x, x) != x:
            return False
        if alg.neg(alg.neg(x)) != x:
            return False
        if alg.meet(x, alg.top) != x or alg.join(x, alg.bottom) != x:
            return False
        if alg.meet(x, alg.bottom) != alg.bottom or alg.join(x, alg.top) != alg.top:
            return False
    for x in rng:
        for y in rng:
            if alg.meet(x, y) != alg.meet(y, x) or alg.join(x, y) != alg.join(y, x):
                return False
            if alg.join(x, alg.meet(x, y)) != x or alg.meet(x, alg.join(x, y)) != x:
                return False
            if alg.neg(alg.join(x, y)) != alg.meet(alg.neg(x), alg.neg(y)):
                return False
            if alg.neg(alg.meet(x, y)) != alg.join(alg.neg(x), alg.neg(y)):
                return False
    for x in rng:
        for y in rng:
            for z in rng:
                if alg.meet(x, alg.meet(y, z)) != alg.meet(alg.meet(x, y), z):
                    return False
                if alg.join(x, alg.join(y, z)) != alg.join(alg.join(x, y), z):
                    return False
                if alg.meet(x, alg.join(y, z)) != alg.join(alg.meet(x, y), alg.meet(x, z)):
                    return False
                if alg.join(x, alg.meet(y, z)) != alg.meet(alg.join(x, y), alg.join(x, z)):
                    return False
    return True


# the four-element De Morgan algebra generating the variety: the diamond
# 0 < a, b < 1 with a, b incomparable and negation fixing both
DM4_MEET = (
    (0, 0, 0, 0),
    (0, 1, 0, 1),
    (0, 0, 2, 2),
    (0, 1, 2, 3),
)
DM4_JOIN = (
    (0, 1, 2, 3),
    (1, 1, 3, 3),
    (2, 3, 2, 3),
    (3, 3, 3, 3),
)
DM4_NEG = (3, 1, 2, 0)


def dm_free_size_oracle(n_names: int) -> int:
    """Independent size oracle: the de Morgan variety is generated by the
    four-element diamond, so the free algebra on n names is the closure of
    the projections inside DM4^(DM4^n) under the pointwise operations."""
    points = list(itertools.product(range(4), repeat=n_names))
    projections = []
    for i in range(n_names):
        projections.append(tuple(p[i] for p in points))
    zero = tuple(0 for _ in points)
    one = tuple(3 for _ in points)
    seen = {zero, one, *projections}
    worklist = list(seen)
    while worklist:
        f = worklist.pop()
        candidates = [tuple(DM4_NEG[v] for v in f)]
        for g in list(seen):
            candidates.append(tuple(DM4_MEET[a][b] for a, b in zip(f, g)))
            candidates.append(tuple(DM4_JOIN[a][b] for a, b in zip(f, g)))
        for c in candidates:
            if c not in seen:
                seen.add(c)
                worklist.append(c)
    return len(seen)
