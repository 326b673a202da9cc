#!/usr/bin/env python3
import math
from collections import deque

from opentangle.diagram.diagram import Diagram


def alexander_numbering(d: Diagram, base_region: int = 0, base_value: int = 0) -> tuple[dict[int, int], int]:
  """Numbers regions so that crossing a semiarc from its right to its left adds 1.

  Returns the numbering and the modulus m, the gcd of the defects of closed walks in the
  dual graph; m = 0 means the numbering is integral. Values are reduced mod m when m > 0.
  """
  adj: dict[int, list[tuple[int, int]]] = {r: [] for r in range(d.n_regions)}
  for s in range(d.n_semiarcs):
    left, right = d.region_left(s), d.region_right(s)
    adj[right].append((left, 1))
    adj[left].append((right, -1))

  value = {base_region: base_value}
  modulus = 0
  queue = deque([base_region])
  while queue:
    r = queue.popleft()
    for t, step in adj[r]:
      v = value[r] + step
      if t not in value:
        value[t] = v
        queue.append(t)
      else:
        modulus = math.gcd(modulus, v - value[t])

  if modulus:
    value = {r: v % modulus for r, v in value.items()}
  return dict(sorted(value.items())), modulus


def semiarc_numbering(d: Diagram, base_region: int = 0, base_value: int = 0) -> tuple[dict[int, int], int]:
  """Propagates the region numbering to semiarcs: a semiarc carries the value on its right."""
  regions, modulus = alexander_numbering(d, base_region, base_value)
  return {s: regions[d.region_right(s)] for s in range(d.n_semiarcs) if d.region_right(s) in regions}, modulus
