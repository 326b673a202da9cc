#!/usr/bin/env python3
from collections import Counter
from dataclasses import dataclass, field

from opentangle.algebra.base import Cocycle
from opentangle.algebra.biquandloid import Biquandloid, associated_quandle
from opentangle.algebra.crossoid import biquandloid_crossoid, crossoid_cocycle_from_biquandloid
from opentangle.coloring.colorings import colorings, count
from opentangle.coloring.invariant import boltzmann_weight
from opentangle.diagram.diagram import Diagram


@dataclass
class CountReport:
  name: str
  lhs: int
  rhs: int
  details: dict = field(default_factory=dict)

  @property
  def ok(self) -> bool:
    return self.lhs == self.rhs and self.details.get("bijective", True) and self.details.get("state_sums_agree", True)

  def to_json(self) -> dict:
    return {"check": self.name, "ok": self.ok, "lhs": self.lhs, "rhs": self.rhs, **self.details}


def quandle_vs_biquandloid_check(d: Diagram, b: Biquandloid) -> CountReport:
  """Biquandloid colorings split by the shadow of one region into associated quandle colorings."""
  per_fibre = {x: count(d, associated_quandle(b, x)) for x in range(b.r)}
  return CountReport("quandle_vs_biquandloid", count(d, b), sum(per_fibre.values()), {"fibres": per_fibre})


def crossoid_vs_biquandloid_check(d: Diagram, b: Biquandloid, theta: Cocycle | None = None) -> CountReport:
  """Forgetting crossing colors maps crossoid colorings bijectively onto biquandloid colorings.

  Given a biquandloid 2-cocycle, the state sum of its crossoid image is compared as well."""
  crossoid = biquandloid_crossoid(b)
  crossoid_cols = colorings(d, crossoid)
  images = [col.semiarcs for col in crossoid_cols]
  targets = {col.colors: col for col in colorings(d, b)}
  bijective = len(set(images)) == len(images) and set(images) == set(targets)
  details = {"bijective": bijective}
  if theta is not None:
    phi = crossoid_cocycle_from_biquandloid(b, theta)
    lhs = Counter(boltzmann_weight(d, crossoid, phi, col) for col in crossoid_cols)
    rhs = Counter(boltzmann_weight(d, b, theta, col) for col in targets.values())
    details["state_sums_agree"] = lhs == rhs
  return CountReport("crossoid_vs_biquandloid", len(crossoid_cols), len(targets), details)
