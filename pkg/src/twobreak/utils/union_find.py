"""Disjoint-set forest over arbitrary hashable keys."""

from __future__ import annotations

from collections.abc import Hashable, Iterable
from typing import Generic, TypeVar

K = TypeVar("K", bound=Hashable)


class UnionFind(Generic[K]):
    """Union by rank with path compression.

    Used to merge edge labels that a scenario's moves relate to each other.
    """

    def __init__(self, elements: Iterable[K] = ()) -> None:
        self.parent: dict[K, K] = {}
        self.rank: dict[K, int] = {}
        for element in elements:
            self.add(element)

    def add(self, element: K) -> None:
        if element not in self.parent:
            self.parent[element] = element
            self.rank[element] = 0

    def find(self, element: K) -> K:
        """Return the representative of ``element``'s set."""

        root = element
        while self.parent[root] != root:
            root = self.parent[root]

        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def unite(self, first: K, second: K) -> bool:
        """Merge two sets; return ``False`` if they were already one set."""

        rep_first = self.find(first)
        rep_second = self.find(second)

        if rep_first == rep_second:
            return False

        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
            self.parent[rep_second] = rep_first
        elif self.rank[rep_first] > self.rank[rep_second]:
            self.parent[rep_second] = rep_first
        else:
            self.parent[rep_first] = rep_second

        return True

    def groups(self) -> list[list[K]]:
        """Return every set as a list, in first-insertion order of their members."""

        buckets: dict[K, list[K]] = {}
        for element in self.parent:
            buckets.setdefault(self.find(element), []).append(element)
        return list(buckets.values())
