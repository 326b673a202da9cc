#!/usr/bin/env python3
import os

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from opentangle.coloring.colorings import tribracket_corners
from opentangle.diagram.diagram import Diagram

TEMPLATE_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "templates")
KINDS = ("quandle", "tribracket")

env = Environment(loader=FileSystemLoader(TEMPLATE_PATH), trim_blocks=True, lstrip_blocks=True,
                  keep_trailing_newline=True, undefined=StrictUndefined)


def fundamental_presentation(d: Diagram, kind: str) -> str:
  """Generators are arcs (quandle) or regions (tribracket), numbered from 1; one relation per crossing."""
  if kind == "quandle":
    generators = [f"x{k + 1}" for k in range(d.n_arcs)]
    crossings = [{"sign": c.sign, "under_in": d.arc_of[c.under_in] + 1, "under_out": d.arc_of[c.under_out] + 1,
                  "over": d.arc_of[c.over_in] + 1} for c in d.crossings]
  elif kind == "tribracket":
    generators = [f"r{k + 1}" for k in range(d.n_regions)]
    crossings = [dict(zip("abcd", (r + 1 for r in tribracket_corners(d, i)))) for i in range(len(d.crossings))]
  else:
    raise ValueError(f"unknown presentation kind {kind!r}, expected one of {KINDS}")
  return env.get_template(f"{kind}.j2").render(generators=generators, crossings=crossings)
