"""Union-find with canonical minimum-index representatives.

Quotients everywhere in the engine pick the minimum index of each class,
so the induced order on classes is deterministic.
"""

from __future__ import annotations


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        px, py = self.find(x), self.find(y)
        if px == py:
            return
        # keep the smaller index as the representative
        if px > py:
            px, py = py, px
        self.parent[py] = px

    def classes(self) -> dict[int, int]:
        """Map from element to dense class index, classes ordered by min element."""
        reps = sorted({self.find(x) for x in range(len(self.parent))})
        rep_index = {r: i for i, r in enumerate(reps)}
        return {x: rep_index[self.find(x)] for x in range(len(self.parent))}

    def n_classes(self) -> int:
        return len({self.find(x) for x in range(len(self.parent))})
