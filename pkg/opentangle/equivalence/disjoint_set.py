#!/usr/bin/env python3
# https://en.wikipedia.org/wiki/Disjoint-set_data_structure
import collections
from collections.abc import Hashable, Iterable
from typing import Generic, TypeVar

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
  def __init__(self, elements: Iterable[T] = ()):
    self.parent: dict[T, T] = {}
    self.rank: dict[T, int] = {}
    for e in elements:
      self.make_set(e)

  def make_set(self, e: T):
    if e in self.parent:
      return
    self.parent[e] = e
    self.rank[e] = 0

  # find with path compression
  def find(self, e: T) -> T:
    self.make_set(e)
    root = e
    while self.parent[root] != root:
      root = self.parent[root]
    while self.parent[e] != root:
      self.parent[e], e = root, self.parent[e]
    return root

  # union by rank, True when two sets were joined
  def union(self, x: T, y: T) -> bool:
    x_root = self.find(x)
    y_root = self.find(y)
    if x_root == y_root:
      return False
    if self.rank[x_root] < self.rank[y_root]:
      x_root, y_root = y_root, x_root
    self.parent[y_root] = x_root
    if self.rank[x_root] == self.rank[y_root]:
      self.rank[x_root] += 1
    return True

  def union_all(self, elements: Iterable[T]) -> bool:
    elements = list(elements)
    changed = False
    for e in elements[1:]:
      changed = self.union(elements[0], e) or changed
    return changed

  def same(self, x: T, y: T) -> bool:
    return self.find(x) == self.find(y)

  def sets(self) -> frozenset[frozenset[T]]:
    sets = collections.defaultdict(set)
    for e in self.parent:
      sets[self.find(e)].add(e)
    return frozenset(frozenset(s) for s in sets.values())

  def sorted(self) -> tuple[tuple[T, ...], ...]:
    """Sorted tuple of sorted tuples edition of sets()."""
    return tuple(sorted(tuple(sorted(s)) for s in self.sets()))
