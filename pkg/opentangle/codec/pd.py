#!/usr/bin/env python3
import re
from collections import defaultdict

from opentangle.diagram.diagram import Crossing, Diagram
from opentangle.errors import InvalidDiagram, PdSyntaxError

# Xp(ui, oi, uo, oo) and Xm(ui, oo, uo, oi): under-in first, then clockwise around the crossing
record_pattern = re.compile(r'(Xp|Xm)\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)|([OE])\(\s*(\d+)\s*\)')
token_pattern = re.compile(r'\S+\(.*?\)|\S+')


def tokenize(text: str) -> list[str]:
  text = re.sub(r'#.*', '', text)
  return token_pattern.findall(text)


def parse_pd(text: str) -> Diagram:
  crossings = []
  circles = []
  endpoints = []
  for token in tokenize(text):
    m = record_pattern.fullmatch(token)
    if m is None:
      raise PdSyntaxError(f"malformed PD record: {token!r}")
    if m.group(1):
      labels = [int(m.group(k)) for k in range(2, 6)]
      if min(labels) < 1:
        raise PdSyntaxError(f"labels must be positive: {token!r}")
      ui, b, uo, d = labels
      if m.group(1) == "Xp":
        crossings.append((1, ui, uo, b, d))
      else:
        crossings.append((-1, ui, uo, d, b))
    elif m.group(6) == "O":
      circles.append(int(m.group(7)))
    else:
      endpoints.append(int(m.group(7)))

  heads = defaultdict(int)
  tails = defaultdict(int)
  for _, ui, uo, oi, oo in crossings:
    heads[ui] += 1
    heads[oi] += 1
    tails[uo] += 1
    tails[oo] += 1

  labels = set(heads) | set(tails) | set(circles) | set(endpoints)
  starts, ends = set(), set()
  endpoint_count = defaultdict(int)
  for e in endpoints:
    endpoint_count[e] += 1
  for label in sorted(labels):
    h, t, e = heads[label], tails[label], endpoint_count[label]
    if label in circles:
      if h or t or e or circles.count(label) > 1:
        raise InvalidDiagram(f"circle label {label} reused")
      continue
    # endpoints supply the missing tail or head
    if e == 2 and h == 0 and t == 0:
      starts.add(label)
      ends.add(label)
    elif e == 1 and h == 1 and t == 0:
      starts.add(label)
    elif e == 1 and h == 0 and t == 1:
      ends.add(label)
    elif not (e == 0 and h == 1 and t == 1):
      raise InvalidDiagram(f"label {label} used {h + t + e} times with inconsistent strand orientation")

  index = {label: k for k, label in enumerate(sorted(labels))}
  ds = tuple(Crossing(sign, index[ui], index[uo], index[oi], index[oo]) for sign, ui, uo, oi, oo in crossings)
  return Diagram(ds, len(index), frozenset(index[s] for s in starts), frozenset(index[s] for s in ends))


def serialize_pd(d: Diagram) -> str:
  records = []
  for c in d.crossings:
    if c.sign > 0:
      records.append(f"Xp({c.under_in + 1},{c.over_in + 1},{c.under_out + 1},{c.over_out + 1})")
    else:
      records.append(f"Xm({c.under_in + 1},{c.over_out + 1},{c.under_out + 1},{c.over_in + 1})")
  records += [f"O({s + 1})" for s in d.circles]
  for s in sorted(d.starts | d.ends):
    records += [f"E({s + 1})"] * ((s in d.starts) + (s in d.ends))
  return " ".join(records)
