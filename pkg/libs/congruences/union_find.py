# libs/congruences/union_find.py
from __future__ import annotations

from libs.congruences.partition import Partition


class UnionFind:
    """Union by rank with path compression over 0..k-1."""

    def __init__(self, k: int):
        self.parent = list(range(k))
        self.rank = [0] * k
        self.n_sets = k

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; False if they were already together."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.n_sets -= 1
        return True

    def connected(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def to_partition(self) -> Partition:
        return Partition.from_labels([self.find(x) for x in range(len(self.parent))])

    def __len__(self) -> int:
        return self.n_sets
