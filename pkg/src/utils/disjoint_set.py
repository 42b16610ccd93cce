from collections import defaultdict
from typing import Dict, Generic, Hashable, List, Tuple, TypeVar

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
    """Union-find with path compression and union by rank"""

    def __init__(self):
        self.parent: Dict[T, T] = {}
        self.rank: Dict[T, int] = {}

    def add(self, element: T) -> None:
        if element not in self.parent:
            self.parent[element] = element
            self.rank[element] = 0

    def find(self, element: T) -> T:
        self.add(element)
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def union(self, x: T, y: T) -> bool:
        """Merge the sets of x and y; False if they were already one set"""
        x_root, y_root = self.find(x), self.find(y)
        if x_root == y_root:
            return False
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1
        return True

    def connected(self, x: T, y: T) -> bool:
        return self.find(x) == self.find(y)

    def groups(self) -> List[Tuple[T, ...]]:
        """Sorted tuple per set, sets ordered by their smallest element"""
        members: Dict[T, List[T]] = defaultdict(list)
        for element in self.parent:
            members[self.find(element)].append(element)
        return sorted(tuple(sorted(group)) for group in members.values())  # type: ignore[type-var]
