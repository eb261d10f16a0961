# app/utility/union_find.py
from typing import Generic, Hashable, Iterable, TypeVar

T = TypeVar("T", bound=Hashable)


class UnionFind(Generic[T]):
    def __init__(self, items: Iterable[T]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}
        self.size = {x: 1 for x in self.parent}

    def find(self, x: T) -> T:
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x: T, y: T) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]
        del self.rank[y]

    def union_all(self, group: Iterable[T]) -> None:
        first = None
        for x in group:
            if first is None:
                first = x
            else:
                self.union(first, x)

    def reps(self) -> set[T]:
        return set(self.rank)

    def classes(self) -> list[frozenset[T]]:
        grouped: dict[T, set[T]] = {rep: set() for rep in self.rank}
        for x in self.parent:
            grouped[self.find(x)].add(x)
        return [frozenset(members) for members in grouped.values()]

    def __len__(self) -> int:
        return len(self.rank)


def common_coarsening(items: Iterable[T], *partitions: Iterable[Iterable[T]]) -> set[frozenset[T]]:
    """The finest partition of ``items`` coarser than every given partition."""
    uf = UnionFind(items)
    for partition in partitions:
        for group in partition:
            uf.union_all(group)
    return set(uf.classes())
