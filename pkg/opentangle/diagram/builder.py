#!/usr/bin/env python3
from opentangle.diagram.diagram import Crossing, Diagram

UI, UO, OI, OO = 1, 2, 3, 4
IN_SLOTS = (UI, OI)
OUT_SLOTS = (UO, OO)


class DiagramBuilder:
  """Mutable surgery on a diagram.

  Crossings are kept as lists [sign, ui, uo, oi, oo]. Every semiarc carries the set of
  source semiarcs it descends from, which the moves turn into element relations.
  """
  def __init__(self, d: Diagram):
    self.crossings: list[list[int] | None] = [[c.sign, *c.semiarcs] for c in d.crossings]
    self.n = d.n_semiarcs
    self.starts = set(d.starts)
    self.ends = set(d.ends)
    self.origin: dict[int, frozenset[int]] = {s: frozenset([s]) for s in range(self.n)}
    self.alias: dict[int, int] = {}

  def resolve(self, s: int) -> int:
    while s in self.alias:
      s = self.alias[s]
    return s

  def new_semiarc(self) -> int:
    s = self.n
    self.n += 1
    self.origin[s] = frozenset()
    return s

  def head_slot(self, s: int):
    for k, c in enumerate(self.crossings):
      if c is None:
        continue
      for slot in IN_SLOTS:
        if c[slot] == s:
          return k, slot
    return None

  def tail_slot(self, s: int):
    for k, c in enumerate(self.crossings):
      if c is None:
        continue
      for slot in OUT_SLOTS:
        if c[slot] == s:
          return k, slot
    return None

  def split(self, s: int, pieces: int) -> list[int]:
    """Cut s into a chain of pieces; the first keeps the id of s and the head of s moves
    to the last. The new pieces inherit the origin of s."""
    s = self.resolve(s)
    chain = [s] + [self.new_semiarc() for _ in range(pieces - 1)]
    for p in chain[1:]:
      self.origin[p] = self.origin[s]
    head = self.head_slot(s)
    if head is not None:
      k, slot = head
      self.crossings[k][slot] = chain[-1]
    elif s in self.ends:
      self.ends.discard(s)
      self.ends.add(chain[-1])
    return chain

  def add_crossing(self, sign: int, ui: int, uo: int, oi: int, oo: int) -> int:
    self.crossings.append([sign, ui, uo, oi, oo])
    return len(self.crossings) - 1

  def remove_crossing(self, k: int) -> list[int]:
    c = self.crossings[k]
    self.crossings[k] = None
    return c

  def join(self, a: int, b: int) -> int:
    """Glue the dangling head of a to the dangling tail of b."""
    a, b = self.resolve(a), self.resolve(b)
    if a == b:
      return a
    keep, drop = min(a, b), max(a, b)
    head = self.head_slot(b)
    tail = self.tail_slot(a)
    b_ends = b in self.ends
    a_starts = a in self.starts
    self.ends.discard(b)
    self.starts.discard(a)
    if head is not None:
      self.crossings[head[0]][head[1]] = keep
    if tail is not None:
      self.crossings[tail[0]][tail[1]] = keep
    if b_ends:
      self.ends.add(keep)
    if a_starts:
      self.starts.add(keep)
    self.origin[keep] = self.origin[a] | self.origin[b]
    del self.origin[drop]
    self.alias[drop] = keep
    return keep

  def reverse(self, semiarcs, skip: int | None = None):
    """Reverse the orientation of a set of semiarcs. A crossing keeps its rotation, so it
    changes sign for every one of its strands that gets reversed."""
    semiarcs = {self.resolve(s) for s in semiarcs}
    for k, c in enumerate(self.crossings):
      if c is None or k == skip:
        continue
      for i, o in ((UI, UO), (OI, OO)):
        if c[i] in semiarcs and c[o] in semiarcs:
          c[i], c[o] = c[o], c[i]
          c[0] = -c[0]
    flipped_starts = self.starts & semiarcs
    flipped_ends = self.ends & semiarcs
    self.starts = (self.starts - flipped_starts) | flipped_ends
    self.ends = (self.ends - flipped_ends) | flipped_starts

  def build(self) -> tuple[Diagram, dict[int, frozenset[int]], dict[int, int]]:
    """Returns the compacted diagram, the semiarc origins and the surviving crossing map
    from old crossing index to new."""
    alive = sorted(self.origin)
    renumber = {s: k for k, s in enumerate(alive)}
    crossings = []
    crossing_map = {}
    for k, c in enumerate(self.crossings):
      if c is None:
        continue
      crossing_map[k] = len(crossings)
      crossings.append(Crossing(c[0], *(renumber[self.resolve(s)] for s in c[1:])))
    d = Diagram(tuple(crossings), len(alive),
                frozenset(renumber[self.resolve(s)] for s in self.starts),
                frozenset(renumber[self.resolve(s)] for s in self.ends))
    origins = {renumber[s]: self.origin[s] for s in alive}
    return d, origins, crossing_map
