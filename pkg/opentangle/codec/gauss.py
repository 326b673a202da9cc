#!/usr/bin/env python3
import re
from collections import defaultdict

from opentangle.diagram.diagram import Crossing, Diagram
from opentangle.errors import InvalidDiagram, PdSyntaxError, Unsupported

gauss_token = re.compile(r'([OU])(\d+)([+\-−])')
CIRCLE = "()"


def parse_gauss(text: str) -> Diagram:
  """Signed Gauss code. Components are separated by '/', a crossing-free circle is '()'.

  The sign and the typed passes fix the rotation at every crossing, so the code has exactly
  one realization; its genus is whatever the Euler characteristic gives.
  """
  passes = defaultdict(list)
  n_semiarcs = 0
  n_circles = 0
  for component in text.split("/"):
    tokens = component.split()
    if tokens == [CIRCLE]:
      n_circles += 1
      continue
    if not tokens:
      raise PdSyntaxError("empty Gauss component")
    first = n_semiarcs
    k = len(tokens)
    for j, token in enumerate(tokens):
      m = gauss_token.fullmatch(token)
      if m is None:
        raise PdSyntaxError(f"malformed Gauss token: {token!r}")
      kind, label, sign = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
      incoming = first + (j - 1) % k
      outgoing = first + j
      passes[label].append((kind, sign, incoming, outgoing))
    n_semiarcs += k

  crossings = []
  for label in sorted(passes):
    visits = passes[label]
    kinds = sorted(v[0] for v in visits)
    if kinds != ["O", "U"]:
      raise InvalidDiagram(f"crossing {label} must be visited once over and once under, got {kinds}")
    if visits[0][1] != visits[1][1]:
      raise InvalidDiagram(f"crossing {label} has inconsistent signs")
    over = next(v for v in visits if v[0] == "O")
    under = next(v for v in visits if v[0] == "U")
    crossings.append(Crossing(over[1], under[2], under[3], over[2], over[3]))
  return Diagram(tuple(crossings), n_semiarcs + n_circles)


def serialize_gauss(d: Diagram) -> str:
  if not d.is_closed:
    raise Unsupported("Gauss codes describe closed diagrams only")
  parts = []
  for k, (seq, _) in enumerate(d.components):
    if not any(s in d.next_semiarc for s in seq):
      parts.append(CIRCLE)
      continue
    visits = d.gauss_sequence(k)
    parts.append(" ".join(f"{p}{i + 1}{'+' if d.crossings[i].sign > 0 else '-'}" for i, p in visits))
  return " / ".join(parts)
