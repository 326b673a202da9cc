#!/usr/bin/env python3
import logging
from collections import Counter
from dataclasses import dataclass, field

from opentangle.algebra.base import Cocycle, FiniteAlgebra
from opentangle.algebra.biquandloid import Biquandloid
from opentangle.algebra.crossoid import Crossoid
from opentangle.algebra.quandle import Quandle
from opentangle.algebra.tribracket import PartialTribracket, Tribracket
from opentangle.coloring.colorings import Coloring, iter_colorings, split_enumeration, tribracket_corners
from opentangle.diagram.diagram import Diagram
from opentangle.errors import NotACocycle, Unsupported
from opentangle.homology.cocycles import check_cocycle

logger = logging.getLogger(__name__)


@dataclass
class StateSum:
  """Formal sum of coefficient values, one term per coloring."""
  modulus: int
  terms: Counter = field(default_factory=Counter)

  @property
  def total(self) -> int:
    return sum(self.terms.values())

  def as_dict(self) -> dict[int, int]:
    return dict(sorted(self.terms.items()))

  def __eq__(self, other) -> bool:
    return isinstance(other, StateSum) and self.modulus == other.modulus and self.as_dict() == other.as_dict()

  def __str__(self) -> str:
    return " + ".join(f"{k}·[{v}]" for v, k in self.as_dict().items()) or "0"


def boltzmann_weight(d: Diagram, alg: FiniteAlgebra, theta: Cocycle, col: Coloring) -> int:
  """Signed cocycle sum over the crossings of one coloring."""
  total = 0
  for i, c in enumerate(d.crossings):
    if isinstance(alg, Tribracket | PartialTribracket):
      # the 2-chain (a, b, d) of the crossing, d = [a, b, c]
      a, b, _, x = tribracket_corners(d, i)
      total += c.sign * theta(col.colors[a], col.colors[b], col.colors[x])
    elif isinstance(alg, Biquandloid):
      dr, ur = col.colors[c.corner("dr")], col.colors[c.corner("ur")]
      total += theta(dr, ur) if c.sign > 0 else -theta(ur, dr)
    elif isinstance(alg, Crossoid):
      total += c.sign * theta(col.colors[i])
    elif isinstance(alg, Quandle):
      # the under arc the over arc acts on: incoming at positive crossings, outgoing at negative ones
      source = c.under_in if c.sign > 0 else c.under_out
      total += c.sign * theta(col.colors[d.arc_of[source]], col.colors[d.arc_of[c.over_in]])
    else:
      raise Unsupported(f"no state sum for {alg.kind}")
  return theta.reduce(total)


def cocycle_invariant(d: Diagram, alg: FiniteAlgebra, theta: Cocycle, check: bool = True, threads: int = 1) -> StateSum:
  if check:
    report = check_cocycle(alg, theta)
    if not report.ok:
      raise NotACocycle(f"cocycle fails at {report.witness}")

  def partial(fixed: dict[int, int]) -> Counter:
    return Counter(boltzmann_weight(d, alg, theta, col) for col in iter_colorings(d, alg, fixed))

  terms = sum(split_enumeration(d, alg, partial, threads), Counter())
  logger.debug("state sum over %d colorings", sum(terms.values()))
  return StateSum(theta.modulus, terms)
