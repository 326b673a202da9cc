#!/usr/bin/env python3
import itertools
import json
from collections import deque
from dataclasses import dataclass

from opentangle.diagram.diagram import Diagram

# canonical_form bytes are stable within a major version
CANONICAL_VERSION = 1


@dataclass(frozen=True)
class Labeling:
  code: tuple
  semiarcs: tuple[int, ...]   # semiarcs in label order
  crossings: tuple[int, ...]  # crossings in label order


def label_from(d: Diagram, seed: int) -> Labeling:
  """Deterministic breadth-first relabeling of the piece containing seed."""
  slots_of: dict[int, list[int]] = {}
  for i, c in enumerate(d.crossings):
    for s in c.semiarcs:
      slots_of.setdefault(s, []).append(i)

  s_label = {seed: 0}
  c_label: dict[int, int] = {}
  queue = deque([seed])
  while queue:
    s = queue.popleft()
    for i in sorted(slots_of.get(s, ()), key=lambda i: _slot_rank(d, i, s)):
      if i in c_label:
        continue
      c_label[i] = len(c_label)
      for t in d.crossings[i].semiarcs:
        if t not in s_label:
          s_label[t] = len(s_label)
          queue.append(t)

  semiarcs = tuple(sorted(s_label, key=s_label.get))
  crossings = tuple(sorted(c_label, key=c_label.get))
  code = (
    tuple((d.crossings[i].sign, *(s_label[t] for t in d.crossings[i].semiarcs)) for i in crossings),
    tuple(sorted(s_label[s] for s in d.starts if s in s_label)),
    tuple(sorted(s_label[s] for s in d.ends if s in s_label)),
  )
  return Labeling(code, semiarcs, crossings)


def _slot_rank(d: Diagram, i: int, s: int) -> int:
  # a semiarc meets at most two crossings: prefer its head, then its tail
  c = d.crossings[i]
  return 0 if s in (c.under_in, c.over_in) else 1


def piece_labelings(d: Diagram, piece: frozenset[int]) -> list[Labeling]:
  return [label_from(d, s) for s in sorted(piece)]


def minimal_labeling(d: Diagram, piece: frozenset[int]) -> Labeling:
  return min(piece_labelings(d, piece), key=lambda lab: lab.code)


def canonical_form(d: Diagram) -> bytes:
  codes = sorted(minimal_labeling(d, p).code for p in d.pieces if not _is_circle(d, p))
  doc = {"v": CANONICAL_VERSION, "pieces": codes, "circles": len(d.circles)}
  return json.dumps(doc, separators=(',', ':')).encode()


def _is_circle(d: Diagram, piece: frozenset[int]) -> bool:
  return len(piece) == 1 and next(iter(piece)) in d.circles


def isomorphism_maps(d1: Diagram, d2: Diagram) -> list[tuple[dict[int, int], dict[int, int]]]:
  """All orientation preserving isomorphisms as (semiarc map, crossing map)."""
  if len(d1.crossings) != len(d2.crossings) or d1.n_semiarcs != d2.n_semiarcs:
    return []
  if len(d1.circles) != len(d2.circles):
    return []

  p1 = [p for p in d1.pieces if not _is_circle(d1, p)]
  p2 = [p for p in d2.pieces if not _is_circle(d2, p)]
  if len(p1) != len(p2):
    return []

  anchors = [label_from(d1, min(p)) for p in p1]
  options = []
  for anchor in anchors:
    opts = []
    for k, p in enumerate(p2):
      for lab in piece_labelings(d2, p):
        if lab.code == anchor.code:
          opts.append((k, lab))
    options.append(opts)

  results = []

  def extend(idx, used, s_map, c_map):
    if idx == len(anchors):
      for perm in itertools.permutations(d2.circles):
        full = dict(s_map)
        full.update(zip(d1.circles, perm))
        results.append((full, dict(c_map)))
      return
    anchor = anchors[idx]
    for k, lab in options[idx]:
      if k in used:
        continue
      s_new = dict(s_map)
      s_new.update(zip(anchor.semiarcs, lab.semiarcs))
      c_new = dict(c_map)
      c_new.update(zip(anchor.crossings, lab.crossings))
      extend(idx + 1, used | {k}, s_new, c_new)

  extend(0, frozenset(), {}, {})
  return results
