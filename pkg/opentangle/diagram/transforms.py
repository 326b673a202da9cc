#!/usr/bin/env python3
from dataclasses import replace

from opentangle.diagram.builder import OI, OO, UI, UO, DiagramBuilder
from opentangle.diagram.diagram import Crossing, Diagram


def crossing_change(d: Diagram, c: int) -> Diagram:
  x = d.crossings[c]
  changed = Crossing(-x.sign, x.over_in, x.over_out, x.under_in, x.under_out)
  return replace(d, crossings=d.crossings[:c] + (changed,) + d.crossings[c + 1:])


def mirror(d: Diagram) -> Diagram:
  for c in range(len(d.crossings)):
    d = crossing_change(d, c)
  return d


def reverse(d: Diagram) -> Diagram:
  crossings = tuple(Crossing(x.sign, x.under_out, x.under_in, x.over_out, x.over_in) for x in d.crossings)
  return Diagram(crossings, d.n_semiarcs, d.ends, d.starts)


def oriented_smoothing(d: Diagram, c: int) -> Diagram:
  b = DiagramBuilder(d)
  _, ui, uo, oi, oo = b.remove_crossing(c)
  b.join(ui, oo)
  b.join(oi, uo)
  return b.build()[0]


def _path(d: Diagram, start: int, stop: int) -> list[int] | None:
  # semiarcs from start up to and including stop, None if the strand ends first
  path = [start]
  s = start
  while s != stop:
    if s not in d.next_semiarc:
      return None
    s = d.next_semiarc[s][1]
    path.append(s)
  return path


def non_oriented_smoothing(d: Diagram, c: int) -> Diagram:
  """Reconnects in with in and out with out at c. The orientation of the loop between the
  two passes (or of the whole over component at a mixed crossing) is reversed first."""
  x = d.crossings[c]
  if d.is_pure(c):
    path = _path(d, x.under_out, x.over_in)
    first, second = (UI, UO), (OI, OO)
    if path is None:
      path = _path(d, x.over_out, x.under_in)
      first, second = (OI, OO), (UI, UO)
  else:
    path = list(d.components[d.component_of[x.over_in]][0])
    first, second = (UI, UO), (OI, OO)

  b = DiagramBuilder(d)
  b.reverse(path, skip=c)
  slots = b.remove_crossing(c)
  if d.is_pure(c):
    # the second pass now enters through its old out slot
    b.join(slots[first[0]], slots[second[0]])
    b.join(slots[first[1]], slots[second[1]])
  else:
    b.join(slots[UI], slots[OI])
    b.join(slots[OO], slots[UO])
  return b.build()[0]
