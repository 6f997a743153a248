"""Finite sets and functions between them.

Elements are always the indices 0..size-1; labels are display-only.
Every construction downstream encodes its elements back into this indexed
form with a fixed lexicographic order, so results are reproducible
bit-for-bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


@dataclass(frozen=True)
class FinSet:
    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 0:
            raise StructureError("FinSet size must be >= 0")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.size:
                raise StructureError("labels must have exactly `size` entries")

    def __iter__(self):
        return iter(range(self.size))

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def __repr__(self):
        if self.labels is None:
            return f"FinSet({self.size})"
        return f"FinSet({self.size}, {list(self.labels)!r})"


class StructureError(ValueError):
    """A construction was handed structurally invalid data."""


class EnumerationBudgetExceeded(RuntimeError):
    """An exhaustive check would exceed its candidate budget.

    Distinct from a falsified property: the outcome is "not checked".
    """


@dataclass(frozen=True)
class FinMap:
    dom: FinSet
    cod: FinSet
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom.size:
            raise StructureError("table length must equal dom.size")
        for v in self.table:
            if not (0 <= v < self.cod.size):
                raise StructureError(f"table entry {v} not below cod.size={self.cod.size}")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def compose(self, other: "FinMap") -> "FinMap":
        """self after other (self ∘ other)."""
        if other.cod.size != self.dom.size:
            raise StructureError("composition mismatch")
        return FinMap(other.dom, self.cod, tuple(self.table[v] for v in other.table))

    def then(self, other: "FinMap") -> "FinMap":
        """other after self."""
        return other.compose(self)

    def is_identity(self) -> bool:
        return self.dom.size == self.cod.size and all(self.table[x] == x for x in range(self.dom.size))

    def is_iso(self) -> bool:
        return self.dom.size == self.cod.size and len(set(self.table)) == self.dom.size

    def inverse(self) -> "FinMap":
        if not self.is_iso():
            raise StructureError("not invertible")
        inv = [0] * self.cod.size
        for x, y in enumerate(self.table):
            inv[y] = x
        return FinMap(self.cod, self.dom, tuple(inv))

    def fiber(self, y: int) -> list[int]:
        return [x for x in range(self.dom.size) if self.table[x] == y]

    def __repr__(self):
        return f"FinMap({self.dom.size}->{self.cod.size}, {list(self.table)})"


def identity(a: FinSet) -> FinMap:
    return FinMap(a, a, tuple(range(a.size)))


def constant(a: FinSet, b: FinSet, value: int) -> FinMap:
    return FinMap(a, b, tuple(value for _ in range(a.size)))


def empty_map(b: FinSet) -> FinMap:
    return FinMap(FinSet(0), b, ())


def terminal_map(a: FinSet) -> FinMap:
    return FinMap(a, FinSet(1), tuple(0 for _ in range(a.size)))


def all_maps(a: FinSet, b: FinSet):
    """All functions a -> b in lexicographic table order."""
    if a.size == 0:
        yield FinMap(a, b, ())
        return
    for table in itertools.product(range(b.size), repeat=a.size):
        yield FinMap(a, b, table)


def count_maps(a: FinSet, b: FinSet) -> int:
    if a.size == 0:
        return 1
    return b.size ** a.size


def maps_with_constraints(a: FinSet, b: FinSet, allowed) -> "list[FinMap]":
    """All maps whose value at x lies in allowed(x), lexicographic order.

    allowed(x) must return an ascending list of candidate targets.
    """
    choices = [allowed(x) for x in range(a.size)]
    if any(len(c) == 0 for c in choices):
        return []
    out = []
    for table in itertools.product(*choices):
        out.append(FinMap(a, b, table))
    return out


@dataclass(frozen=True)
class IndexedSet:
    """A finite set whose elements decode to arbitrary hashable keys.

    Bridges between combinatorial descriptions (pairs, tables, classes)
    and the plain indexed FinSet the rest of the engine consumes. Keys are
    kept sorted, so indexing is canonical.
    """

    keys: tuple

    @staticmethod
    def from_keys(keys) -> "IndexedSet":
        ks = sorted(set(keys))
        return IndexedSet(tuple(ks))

    def __post_init__(self):
        object.__setattr__(self, "_index", {k: i for i, k in enumerate(self.keys)})

    @property
    def finset(self) -> FinSet:
        return FinSet(len(self.keys))

    def index(self, key) -> int:
        return self._index[key]

    def key(self, i: int):
        return self.keys[i]

    def __len__(self):
        return len(self.keys)

    def map_from(self, dom: FinSet, f) -> FinMap:
        """FinMap dom -> self.finset given f: element -> key."""
        return FinMap(dom, self.finset, tuple(self.index(f(x)) for x in range(dom.size)))

    def map_to(self, cod: FinSet, f) -> FinMap:
        """FinMap self.finset -> cod given f: key -> element."""
        return FinMap(self.finset, cod, tuple(f(k) for k in self.keys))
