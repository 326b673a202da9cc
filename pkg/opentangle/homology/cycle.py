#!/usr/bin/env python3
from collections import Counter
from dataclasses import dataclass

from opentangle.algebra.base import Cocycle
from opentangle.diagram.diagram import Diagram
from opentangle.errors import BoundaryNonzero, Unsupported

# semiarc corners and their coefficient in the boundary of a crossing
CROSSING_BOUNDARY = (("ul", 1), ("ur", 1), ("dl", -1), ("dr", -1))


@dataclass(frozen=True)
class CrossingChain:
  """Formal sum of crossings with its semiarc boundary."""
  coefficients: tuple[int, ...]
  boundary: dict[int, int]

  @property
  def is_cycle(self) -> bool:
    return not any(self.boundary.values())

  def evaluate(self, phi: Cocycle, colors) -> int:
    """Pairing with a crossoid cocycle under a crossing coloring."""
    return phi.reduce(sum(k * phi(colors[i]) for i, k in enumerate(self.coefficients)))

  def to_json(self) -> dict:
    return {
      "crossings": list(self.coefficients),
      "boundary": {str(s): k for s, k in sorted(self.boundary.items()) if k},
      "cycle": self.is_cycle,
    }


def crossing_boundary(d: Diagram, i: int) -> Counter:
  """sgn(c) times the boundary of crossing c: ul + ur - dl - dr on semiarcs."""
  out: Counter = Counter()
  for corner, k in CROSSING_BOUNDARY:
    out[d.corner_semiarc(i, corner)] += k
  return out


def region_boundary(d: Diagram, semiarcs: dict[int, int]) -> dict[int, int]:
  """Push a semiarc chain to regions by s ↦ R_l(s) - R_r(s)."""
  out: Counter = Counter()
  for s, k in semiarcs.items():
    out[d.region_left(s)] += k
    out[d.region_right(s)] -= k
  return {r: k for r, k in out.items() if k}


def crossing_cycle(d: Diagram) -> CrossingChain:
  """z(D) = Σ sgn(c)·c; its semiarc boundary cancels on closed diagrams."""
  if not d.is_closed:
    raise Unsupported("the crossing cycle is defined for closed diagrams")
  total: Counter = Counter()
  for i in range(len(d.crossings)):
    part = crossing_boundary(d, i)
    if region_boundary(d, part):
      raise BoundaryNonzero(f"boundary of crossing {i} does not vanish on regions")
    total.update(part)
  boundary = {s: k for s, k in total.items() if k}
  if boundary:
    raise BoundaryNonzero(f"crossing cycle has boundary {boundary}")
  return CrossingChain(tuple(c.sign for c in d.crossings), boundary)
