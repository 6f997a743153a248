"""Seeded random corpora: finite sets, maps, diagrams, and (m, f) pairs
for each fibration instance.

All generation goes through a single Random instance per seed, so corpora
are reproducible bit-for-bit; the seed appears in CLI reports.
"""

from __future__ import annotations

import random

from .fibrations import (
    CodomainFibration,
    FamCatFibration,
    FamObj,
    FamSetFibration,
    PresheafCodomainFibration,
    TotalMor,
    VertMap,
)
from .fibrations.fam_cat import all_diagrams, corpus_categories
from .kernel.fincat import Diagram, arrow_cat, terminal_cat
from .kernel.finset import FinMap, FinSet, identity


def rng_for(seed: int) -> random.Random:
    return random.Random(seed)


def random_finset(r: random.Random, max_size: int, min_size: int = 0) -> FinSet:
    return FinSet(r.randint(min_size, max_size))


def random_finmap(r: random.Random, dom: FinSet, cod: FinSet) -> FinMap:
    if cod.size == 0:
        return FinMap(FinSet(0), cod, ())
    return FinMap(dom, cod, tuple(r.randrange(cod.size) for _ in range(dom.size)))


def random_map_into(r: random.Random, cod: FinSet, max_dom: int) -> FinMap:
    dom = random_finset(r, max_dom)
    return random_finmap(r, dom, cod)


def random_cospan(r: random.Random, max_size: int):
    z = random_finset(r, max_size, 1)
    f = random_map_into(r, z, max_size)
    g = random_map_into(r, z, max_size)
    return f, g


def random_span(r: random.Random, max_size: int):
    z = random_finset(r, max_size)
    x = random_finset(r, max_size, 1)
    y = random_finset(r, max_size, 1)
    return random_finmap(r, z, x), random_finmap(r, z, y)


def random_diagram(r: random.Random, shape, max_size: int) -> Diagram:
    options = all_diagrams(shape, max_size)
    return options[r.randrange(len(options))]


def random_codomain_vertical(r: random.Random, fib: CodomainFibration,
                             base_max: int, fiber_max: int) -> VertMap:
    I = random_finset(r, base_max, 1)
    dom = random_map_into(r, I, fiber_max)
    cod = random_map_into(r, I, fiber_max)
    mors = fib.fiber_mors(dom, cod)
    if not mors:
        # retry with a fresh codomain guaranteed to receive a map
        cod = identity(I)
        mors = fib.fiber_mors(dom, cod)
    return fib.vertical(dom, cod, mors[r.randrange(len(mors))])


def random_famset_vertical(r: random.Random, fib: FamSetFibration,
                           base_max: int, fiber_max: int) -> VertMap:
    I = random_finset(r, base_max, 1)
    dom = FamObj(I, tuple(random_finset(r, fiber_max) for _ in range(I.size)))
    cod = FamObj(I, tuple(random_finset(r, fiber_max, 1) for _ in range(I.size)))
    mors = fib.fiber_mors(dom, cod)
    return fib.vertical(dom, cod, mors[r.randrange(len(mors))])


def random_famcat_vertical(r: random.Random, fib: FamCatFibration,
                           max_size: int, shape=None) -> VertMap:
    cats = corpus_categories()
    shape = shape if shape is not None else cats[r.randrange(len(cats))]
    dom = random_diagram(r, shape, max_size)
    attempts = 0
    while True:
        cod = random_diagram(r, shape, max_size)
        mors = fib.fiber_mors(dom, cod)
        if mors:
            return fib.vertical(dom, cod, mors[r.randrange(len(mors))])
        attempts += 1
        if attempts > 20:
            cod = dom
            mors = fib.fiber_mors(dom, cod)
            return fib.vertical(dom, cod, mors[0])


def random_presheaf_vertical(r: random.Random, fib: PresheafCodomainFibration,
                             base_max: int, fiber_max: int) -> VertMap:
    from .kernel.fincat import all_nat_trans

    bases = all_diagrams(fib.shape, base_max)
    bases = [b for b in bases if all(s.size >= 1 for s in b.on_obj)]
    I = bases[r.randrange(len(bases))]
    totals = fib.enumerate_total_objects_over(I, fiber_max)
    dom = totals[r.randrange(len(totals))]
    attempts = 0
    while True:
        cod = totals[r.randrange(len(totals))]
        mors = fib.fiber_mors(dom, cod)
        if mors:
            return fib.vertical(dom, cod, mors[r.randrange(len(mors))])
        attempts += 1
        if attempts > 20:
            return fib.vertical(dom, dom, fib.fiber_id(dom))


def standard_generators(fib):
    """The named generating families used throughout the examples."""
    out = {}
    if fib.kind == "codomain":
        one = FinSet(1)
        U0 = FinMap(FinSet(0), one, ())
        V0 = FinMap(FinSet(1), one, (0,))
        out["empty_point"] = fib.vertical(U0, V0, fib.fiber_mors(U0, V0)[0])
        I2 = FinSet(2)
        Uc = FinMap(FinSet(1), I2, (0,))
        out["classifier2"] = fib.vertical(
            Uc, identity(I2),
            TotalMor(Uc, identity(I2), identity(I2), FinMap(FinSet(1), FinSet(2), (0,))))
        d0dom = FinMap(FinSet(1), one, (0,))
        d0cod = FinMap(FinSet(2), one, (0, 0))
        out["delta0"] = fib.vertical(
            d0dom, d0cod,
            TotalMor(d0dom, d0cod, identity(one), FinMap(FinSet(1), FinSet(2), (0,))))
    return out
