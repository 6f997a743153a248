"""The truncated category of cubes: the Kleisli category of the free de
Morgan algebra monad, restricted to name sets of bounded size.

Every report produced from a truncated cube category carries a banner:
presheaves over the truncation form a genuinely different topos from
untruncated cubical sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..kernel.fincat import FinCat, NOT_COMPOSABLE
from ..kernel.finset import FinMap, FinSet, StructureError
from .demorgan import DMAlg, dm_free, substitute

TRUNCATION_BANNER = ("truncated model - the presheaf theory over a truncated "
                     "cube category differs from untruncated cubical sets")

NAME_POOL = ("a", "b", "c")


@dataclass(frozen=True)
class CubeCatTrunc:
    k: int
    objects: tuple           # sorted tuples of names, size <= k
    algebras: tuple          # DMAlg per object
    homs: dict               # (i, j) -> tuple of assignments (dicts as tuples)

    def hom(self, i: int, j: int):
        return self.homs[(i, j)]

    def compose(self, j_to_l, i_to_j, i: int, j: int, l: int):
        """Kleisli composition: substitute the second map through the first."""
        src_alg = self.algebras[j]
        dst_alg = self.algebras[l]
        second = dict(j_to_l)
        first = dict(i_to_j)
        return tuple(sorted(
            (n, substitute(src_alg, dst_alg, second, first[n]))
            for n in self.objects[i]))

    def identity(self, i: int):
        alg = self.algebras[i]
        return tuple(sorted((n, alg.var(n)) for n in self.objects[i]))


def cube_cat_trunc(k: int, pool=None) -> CubeCatTrunc:
    if pool is None:
        pool = NAME_POOL[:k]
    if k > len(pool):
        raise StructureError("truncation level exceeds the name pool")
    objects = []
    for size in range(k + 1):
        for combo in itertools.combinations(pool, size):
            objects.append(tuple(combo))
    objects = tuple(sorted(objects, key=lambda t: (len(t), t)))
    algebras = tuple(dm_free(names) for names in objects)
    homs = {}
    for i, a in enumerate(objects):
        for j, b in enumerate(objects):
            maps = []
            choices = [range(algebras[j].size()) for _ in a]
            for combo in itertools.product(*choices):
                maps.append(tuple(sorted(zip(a, combo))))
            homs[(i, j)] = tuple(sorted(maps))
    return CubeCatTrunc(k, objects, algebras, homs)


def cube_cat_as_fincat(cc: CubeCatTrunc):
    """Dense FinCat presentation with its morphism decode; feasible for
    k <= 1."""
    objs = FinSet(len(cc.objects))
    mors = []
    for i in range(len(cc.objects)):
        for j in range(len(cc.objects)):
            for m in cc.hom(i, j):
                mors.append((i, j, m))
    mors = tuple(sorted(mors))
    mor_index = {m: n for n, m in enumerate(mors)}
    mfs = FinSet(len(mors))
    src = FinMap(mfs, objs, tuple(m[0] for m in mors))
    tgt = FinMap(mfs, objs, tuple(m[1] for m in mors))
    id_ = FinMap(objs, mfs, tuple(mor_index[(i, i, cc.identity(i))]
                                  for i in range(len(cc.objects))))
    comp = [[NOT_COMPOSABLE] * len(mors) for _ in mors]
    for gi, (gj, gl, gm) in enumerate(mors):
        for fi, (fi_, fj, fm) in enumerate(mors):
            if fj != gj:
                continue
            comp[gi][fi] = mor_index[(fi_, gl, cc.compose(gm, fm, fi_, fj, gl))]
    return FinCat(objs, mfs, src, tgt, id_, tuple(tuple(r) for r in comp)), mors


def check_kleisli_laws(cc: CubeCatTrunc, triple_cap: int = 200000):
    """Unit and associativity; exhaustive when the number of composable
    triples fits the cap, otherwise an explicit "not checked" outcome."""
    n = len(cc.objects)
    for i in range(n):
        for j in range(n):
            ident_i = cc.identity(i)
            ident_j = cc.identity(j)
            for f in cc.hom(i, j):
                if cc.compose(f, ident_i, i, i, j) != f:
                    return "false"
                if cc.compose(ident_j, f, i, j, j) != f:
                    return "false"
    total = 0
    for i in range(n):
        for j in range(n):
            for l in range(n):
                for w in range(n):
                    total += (len(cc.hom(i, j)) * len(cc.hom(j, l))
                              * len(cc.hom(l, w)))
    if total > triple_cap:
        return "not-checked"
    for i in range(n):
        for j in range(n):
            for l in range(n):
                for w in range(n):
                    for f in cc.hom(i, j):
                        for g in cc.hom(j, l):
                            for h in cc.hom(l, w):
                                lhs = cc.compose(h, cc.compose(g, f, i, j, l), i, l, w)
                                rhs = cc.compose(cc.compose(h, g, j, l, w), f, i, j, w)
                                if lhs != rhs:
                                    return "false"
    return "true"
