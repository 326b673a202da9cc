#!/usr/bin/env python3
from dataclasses import dataclass
from enum import Enum

from opentangle.diagram.builder import DiagramBuilder
from opentangle.diagram.diagram import Diagram
from opentangle.errors import MixedCrossing, Unsupported


def _halves(d: Diagram, c: int) -> tuple[list[int], list[int]]:
  comp = d.component_of[d.crossings[c].under_in]
  visits = [i for i, _ in d.gauss_sequence(comp)]
  first, second = (k for k, i in enumerate(visits) if i == c)
  inner = visits[first + 1:second]
  outer = visits[second + 1:] + visits[:first]
  return inner, outer


def wrapping_index(d: Diagram, c: int) -> int:
  """Linking number of the two loops left by the oriented smoothing at a pure crossing."""
  if not d.is_pure(c):
    raise MixedCrossing(f"crossing {c} joins two components")
  inner, outer = _halves(d, c)
  shared = set(inner) & set(outer)
  total = sum(d.crossings[i].sign for i in shared)
  return total // 2


def wrapping_monodromy(d: Diagram, c: int) -> int:
  """Change of the wrapping index under a full turn of the over strand."""
  wrapped, w = wrap_crossing(d, c, 2)
  return wrapping_index(wrapped, w) - wrapping_index(d, c)


def _half_turn(d: Diagram, c: int, direction: int) -> tuple[Diagram, int]:
  b = DiagramBuilder(d)
  sign, ui, uo, oi, oo = b.remove_crossing(c)
  a, bb, e, f = (b.new_semiarc() for _ in range(4))
  if sign * direction > 0:
    b.crossings[c] = [sign, ui, a, oi, e]
    b.add_crossing(sign, bb, uo, f, oo)
  else:
    b.crossings[c] = [sign, bb, uo, oi, e]
    b.add_crossing(sign, ui, a, f, oo)
  center = b.add_crossing(-sign, a, bb, e, f)
  wrapped, _, crossing_map = b.build()
  return wrapped, crossing_map[center]


def wrap_crossing(d: Diagram, c: int, n: int) -> tuple[Diagram, int]:
  """Adds |n| half-turns of the over strand around c, counterclockwise for n > 0.

  Every half-turn replaces the crossing by three: the two side crossings keep its sign and
  the middle one, the new image of c, gets the opposite sign.
  """
  direction = 1 if n > 0 else -1
  for _ in range(abs(n)):
    d, c = _half_turn(d, c, direction)
  return d, c


class OrderType(str, Enum):
  EARLY_OVER = "early_over"
  EARLY_UNDER = "early_under"
  NONE = "none"


@dataclass(frozen=True, order=True)
class TraitClass:
  sign: int
  components: tuple[int, int]
  order: OrderType


def trait_class(d: Diagram, c: int) -> TraitClass:
  if d.genus > 0:
    raise Unsupported("trait classes carry a homotopy coordinate on surfaces of positive genus")
  x = d.crossings[c]
  over, under = d.component_of[x.over_in], d.component_of[x.under_in]
  order = OrderType.NONE
  if over == under and d.components[over][1]:
    first = next(p for i, p in d.gauss_sequence(over) if i == c)
    order = OrderType.EARLY_OVER if first == "O" else OrderType.EARLY_UNDER
  return TraitClass(x.sign, (over, under), order)


def trait_classes(d: Diagram) -> dict[TraitClass, list[int]]:
  classes: dict[TraitClass, list[int]] = {}
  for c in range(len(d.crossings)):
    classes.setdefault(trait_class(d, c), []).append(c)
  return classes
