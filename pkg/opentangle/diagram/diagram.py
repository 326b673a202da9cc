#!/usr/bin/env python3
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from opentangle.errors import InvalidDiagram

# counterclockwise corner order at every crossing
CORNERS = ("dr", "ur", "ul", "dl")
CORNER_REGIONS = {"r": "dr", "u": "ur", "l": "ul", "d": "dl"}
OUT_POSITIONS = (1, 2)


class FunctorKind(str, Enum):
  A = "A"
  SA = "SA"
  R = "R"
  C = "C"
  MC = "MC"
  T = "T"


FUNCTORS = tuple(FunctorKind)


@dataclass(frozen=True)
class Crossing:
  sign: int
  under_in: int
  under_out: int
  over_in: int
  over_out: int

  @property
  def corners(self) -> tuple[int, int, int, int]:
    """Semiarcs at (dr, ur, ul, dl)."""
    if self.sign > 0:
      return (self.under_in, self.over_out, self.under_out, self.over_in)
    return (self.over_in, self.under_out, self.over_out, self.under_in)

  def corner(self, name: str) -> int:
    return self.corners[CORNERS.index(name)]

  @property
  def semiarcs(self) -> tuple[int, int, int, int]:
    return (self.under_in, self.under_out, self.over_in, self.over_out)


@dataclass(frozen=True)
class Diagram:
  """Oriented tangle diagram stored as typed darts.

  Semiarc s runs from its tail to its head. Its tail is an out slot of a crossing or a
  boundary start, its head an in slot or a boundary end. A semiarc with neither is a circle.
  The sign of a crossing together with its typed slots fixes the rotation at the vertex.
  """
  crossings: tuple[Crossing, ...]
  n_semiarcs: int
  starts: frozenset[int] = frozenset()
  ends: frozenset[int] = frozenset()

  def __post_init__(self):
    heads = [0] * self.n_semiarcs
    tails = [0] * self.n_semiarcs
    for i, c in enumerate(self.crossings):
      if c.sign not in (1, -1):
        raise InvalidDiagram(f"crossing {i} has sign {c.sign}")
      for s in c.semiarcs:
        if not 0 <= s < self.n_semiarcs:
          raise InvalidDiagram(f"crossing {i} references unknown semiarc {s}")
      heads[c.under_in] += 1
      heads[c.over_in] += 1
      tails[c.under_out] += 1
      tails[c.over_out] += 1
    for s in self.ends:
      heads[s] += 1
    for s in self.starts:
      tails[s] += 1
    for s in range(self.n_semiarcs):
      if (heads[s], tails[s]) not in ((1, 1), (0, 0)):
        raise InvalidDiagram(f"semiarc {s} has {tails[s]} tails and {heads[s]} heads")

  # *** darts ***
  # dart 2s runs along s, dart 2s+1 against it; a dart originates at a vertex

  @cached_property
  def dart_position(self) -> dict[int, tuple[int, int]]:
    pos = {}
    for i, c in enumerate(self.crossings):
      for p, s in enumerate(c.corners):
        if p in OUT_POSITIONS:
          pos[2 * s] = (i, p)
        else:
          pos[2 * s + 1] = (i, p)
    return pos

  def dart_at(self, crossing: int, position: int) -> int:
    s = self.crossings[crossing].corners[position % 4]
    return 2 * s if position % 4 in OUT_POSITIONS else 2 * s + 1

  @cached_property
  def circles(self) -> tuple[int, ...]:
    used = set(self.starts) | set(self.ends)
    for c in self.crossings:
      used.update(c.semiarcs)
    return tuple(s for s in range(self.n_semiarcs) if s not in used)

  def face_successor(self, dart: int) -> int:
    # leave along the reverse dart, then turn clockwise at the vertex reached
    back = dart ^ 1
    if back not in self.dart_position:
      return back  # boundary endpoint
    i, p = self.dart_position[back]
    return self.dart_at(i, p - 1)

  @cached_property
  def faces(self) -> tuple[tuple[int, ...], ...]:
    """Dart cycles of the faces, counterclockwise with the face on the left."""
    circle_darts = {2 * s for s in self.circles} | {2 * s + 1 for s in self.circles}
    seen = set()
    faces = []
    for d in range(2 * self.n_semiarcs):
      if d in seen:
        continue
      if d in circle_darts:
        seen.add(d)
        faces.append((d,))
        continue
      cycle = []
      while d not in seen:
        seen.add(d)
        cycle.append(d)
        d = self.face_successor(d)
      faces.append(tuple(cycle))
    return tuple(faces)

  @cached_property
  def dart_face(self) -> tuple[int, ...]:
    face = [0] * (2 * self.n_semiarcs)
    for f, darts in enumerate(self.faces):
      for d in darts:
        face[d] = f
    return tuple(face)

  # *** connectivity ***

  @cached_property
  def pieces(self) -> tuple[frozenset[int], ...]:
    """Semiarc sets of the connected pieces of the underlying graph."""
    adj: dict[int, set[int]] = {s: set() for s in range(self.n_semiarcs)}
    for c in self.crossings:
      for a in c.semiarcs:
        adj[a].update(c.semiarcs)
    seen = set()
    pieces = []
    for s in range(self.n_semiarcs):
      if s in seen:
        continue
      piece = set()
      queue = deque([s])
      seen.add(s)
      while queue:
        a = queue.popleft()
        piece.add(a)
        for b in adj[a]:
          if b not in seen:
            seen.add(b)
            queue.append(b)
      pieces.append(frozenset(piece))
    return tuple(pieces)

  @cached_property
  def region_of_face(self) -> tuple[int, ...]:
    """Regions are faces, with the face right of the lowest semiarc of every piece merged
    into one shared region, placing the pieces side by side on one sphere.

    A counterclockwise circle thus has its inside on the left."""
    outer = {self.dart_face[2 * min(p) + 1] for p in self.pieces}
    order = []
    labels = {}
    for f, darts in sorted(enumerate(self.faces), key=lambda fd: min(fd[1])):
      key = -1 if f in outer else f
      if key not in labels:
        labels[key] = len(order)
        order.append(key)
    return tuple(labels[-1 if f in outer else f] for f in range(len(self.faces)))

  @property
  def n_regions(self) -> int:
    return len(set(self.region_of_face))

  def region_left(self, s: int) -> int:
    return self.region_of_face[self.dart_face[2 * s]]

  def region_right(self, s: int) -> int:
    return self.region_of_face[self.dart_face[2 * s + 1]]

  def corner_semiarc(self, crossing: int, corner: str) -> int:
    return self.crossings[crossing].corner(corner)

  def corner_region(self, crossing: int, corner: str) -> int:
    p = CORNERS.index(CORNER_REGIONS[corner])
    return self.region_of_face[self.dart_face[self.dart_at(crossing, p)]]

  # *** strands ***

  @cached_property
  def next_semiarc(self) -> dict[int, tuple[int, int, str]]:
    """Maps a semiarc to (crossing, following semiarc, pass) at its head."""
    nxt = {}
    for i, c in enumerate(self.crossings):
      nxt[c.under_in] = (i, c.under_out, "U")
      nxt[c.over_in] = (i, c.over_out, "O")
    return nxt

  @cached_property
  def components(self) -> tuple[tuple[tuple[int, ...], bool], ...]:
    """Semiarc sequences of the link components in traversal order, with a long flag."""
    seen = set()
    comps = []
    for start in sorted(self.starts):
      seq = self._walk(start)
      seen.update(seq)
      comps.append((tuple(seq), True))
    for s in range(self.n_semiarcs):
      if s in seen:
        continue
      seq = self._walk(s)
      seen.update(seq)
      comps.append((tuple(seq), False))
    return tuple(comps)

  def _walk(self, s: int) -> list[int]:
    seq = [s]
    while s in self.next_semiarc:
      s = self.next_semiarc[s][1]
      if s == seq[0]:
        break
      seq.append(s)
    return seq

  @cached_property
  def component_of(self) -> tuple[int, ...]:
    comp = [0] * self.n_semiarcs
    for k, (seq, _) in enumerate(self.components):
      for s in seq:
        comp[s] = k
    return tuple(comp)

  def gauss_sequence(self, component: int) -> list[tuple[int, str]]:
    """(crossing, pass) visits of one component in traversal order."""
    seq, _ = self.components[component]
    return [self.next_semiarc[s][::2] for s in seq if s in self.next_semiarc]

  def is_pure(self, crossing: int) -> bool:
    c = self.crossings[crossing]
    return self.component_of[c.under_in] == self.component_of[c.over_in]

  # *** arcs ***

  @cached_property
  def arc_of(self) -> tuple[int, ...]:
    parent = list(range(self.n_semiarcs))

    def find(x):
      while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
      return x

    for c in self.crossings:
      a, b = find(c.over_in), find(c.over_out)
      if a != b:
        parent[max(a, b)] = min(a, b)
    roots = sorted({find(s) for s in range(self.n_semiarcs)})
    index = {r: k for k, r in enumerate(roots)}
    return tuple(index[find(s)] for s in range(self.n_semiarcs))

  @property
  def n_arcs(self) -> int:
    return len(set(self.arc_of))

  def size(self, kind: FunctorKind) -> int:
    if kind == FunctorKind.A:
      return self.n_arcs
    if kind == FunctorKind.SA:
      return self.n_semiarcs
    if kind == FunctorKind.R:
      return self.n_regions
    return len(self.crossings)

  def elements(self, kind: FunctorKind) -> list[int]:
    return list(range(self.size(FunctorKind(kind))))

  # *** surface ***

  @cached_property
  def genus(self) -> int:
    total = 0
    for piece in self.pieces:
      if len(piece) == 1 and next(iter(piece)) in self.circles:
        continue
      vertices = {i for i, c in enumerate(self.crossings) if c.under_in in piece}
      n_vertices = len(vertices) + sum(1 for s in piece if s in self.starts) + sum(1 for s in piece if s in self.ends)
      n_faces = len({self.dart_face[2 * s + k] for s in piece for k in (0, 1)})
      euler = n_vertices - len(piece) + n_faces
      total += (2 - euler) // 2
    return total

  @property
  def is_closed(self) -> bool:
    return not self.starts
