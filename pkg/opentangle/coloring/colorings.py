#!/usr/bin/env python3
import itertools
import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from multiprocessing.pool import ThreadPool
from typing import TypeVar

from opentangle.algebra.base import FiniteAlgebra
from opentangle.algebra.biquandloid import Biquandloid
from opentangle.algebra.crossoid import Crossoid, polygon_map
from opentangle.algebra.quandle import Quandle
from opentangle.algebra.tribracket import PartialTribracket, Tribracket
from opentangle.coloring.solver import Problem
from opentangle.diagram.diagram import CORNERS, Diagram
from opentangle.errors import ColoringOverflow, Incompatible, NotFilling

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class Coloring:
  """Colors of one functor's elements; crossoid colorings also color semiarcs."""
  kind: str
  colors: tuple[int, ...]
  regions: tuple[int, ...] = ()
  semiarcs: tuple[int, ...] = field(default=())

  def to_json(self) -> dict:
    out = {"colors": list(self.colors)}
    if self.regions:
      out["regions"] = list(self.regions)
    if self.semiarcs:
      out["semiarcs"] = list(self.semiarcs)
    return out


def tribracket_corners(d: Diagram, i: int) -> tuple[int, int, int, int]:
  """(a, b, c, d) regions with [a, b, c] = d at crossing i.

  a is the region right of both strands, b lies across the under strand from a and c across
  the over strand; d is opposite a.
  """
  if d.crossings[i].sign > 0:
    b, c = d.corner_region(i, "d"), d.corner_region(i, "u")
  else:
    b, c = d.corner_region(i, "u"), d.corner_region(i, "d")
  return d.corner_region(i, "r"), b, c, d.corner_region(i, "l")


def _quandle_problem(d: Diagram, q: Quandle) -> Problem:
  p = Problem([range(q.n)] * d.n_arcs)
  for c in d.crossings:
    x, z, y = d.arc_of[c.under_in], d.arc_of[c.under_out], d.arc_of[c.over_in]
    if c.sign > 0:
      p.add((x, y, z), lambda x, y, z: q.op(x, y) == z)
    else:
      p.add((x, y, z), lambda x, y, z: q.op(z, y) == x)
  return p


def _tribracket_problem(d: Diagram, t: Tribracket | PartialTribracket) -> Problem:
  p = Problem([range(t.n)] * d.n_regions)
  for s in range(d.n_semiarcs):
    p.add((d.region_left(s), d.region_right(s)), t.is_up, "up")
  for i in range(len(d.crossings)):
    p.add(tribracket_corners(d, i), lambda a, b, c, x: t.is_up(b, a) and t.is_up(c, a) and t.op(a, b, c) == x)
  return p


def biquandloid_corners(b: Biquandloid, sign: int, dr: int, ur: int) -> tuple[int | None, int | None]:
  """(ul, dl) colors forced by the incoming pair."""
  if not b.compatible(dr, ur):
    return None, None
  if sign > 0:
    return b.uast[dr][ur], b.oast[ur][dr]
  return b.oast[dr][ur], b.uast[ur][dr]


def _biquandloid_problem(d: Diagram, b: Biquandloid) -> Problem:
  # semiarc variables first, then one shadow variable per region
  ns = d.n_semiarcs
  p = Problem([range(b.n)] * ns + [range(b.r)] * d.n_regions)
  for s in range(ns):
    p.add((s, ns + d.region_left(s)), lambda x, rho: b.sigma_l[x] == rho)
    p.add((s, ns + d.region_right(s)), lambda x, rho: b.sigma_r[x] == rho)
  for c in d.crossings:
    dr, ur, ul, dl = c.corners

    def rule(x, y, z, w, sign=c.sign):
      return biquandloid_corners(b, sign, x, y) == (z, w)

    p.add((dr, ur, ul, dl), rule)
  return p


def face_polygon(d: Diagram, face: int) -> tuple[list[int], list[str], list[int]]:
  """(crossings, orientations, semiarcs) around a face, one entry per dart."""
  darts = d.faces[face]
  crossings = [d.dart_position[x][0] for x in darts]
  orientations = ["r" if x % 2 == 0 else "l" for x in darts]
  return crossings, orientations, [x // 2 for x in darts]


def _crossoid_problem(d: Diagram, x: Crossoid) -> Problem:
  if not d.is_closed or len(d.pieces) != 1:
    raise NotFilling("crossoid colorings need a closed diagram with a single connected piece")
  nc = len(d.crossings)
  p = Problem([range(x.n)] * nc + [range(x.a)] * d.n_semiarcs)
  for i, c in enumerate(d.crossings):
    p.restrict(i, lambda col, sign=c.sign: x.sign[col] == sign)
    for corner, s in zip(CORNERS, c.corners):
      p.add((i, nc + s), lambda col, arc, corner=corner: x.corner(col, corner) == arc)
  for f, darts in enumerate(d.faces):
    if any(dart not in d.dart_position for dart in darts):
      continue
    crossings, orientations, semiarcs = face_polygon(d, f)
    signs = [d.crossings[i].sign for i in crossings]
    if len(darts) == 1:
      scope = (crossings[0], nc + semiarcs[0])
    else:
      scope = tuple(crossings)

    def rule(*cols, signs=signs, orientations=orientations, n=len(darts)):
      inputs = cols[1:] if n > 1 else cols[1:2]
      try:
        return polygon_map(x, signs, orientations, inputs) == cols[0]
      except Incompatible:
        return False

    p.add(scope, rule, f"face {f}")
  return p


def coloring_problem(d: Diagram, alg: FiniteAlgebra) -> Problem:
  if isinstance(alg, Quandle):
    return _quandle_problem(d, alg)
  if isinstance(alg, Tribracket | PartialTribracket):
    return _tribracket_problem(d, alg)
  if isinstance(alg, Biquandloid):
    return _biquandloid_problem(d, alg)
  if isinstance(alg, Crossoid):
    return _crossoid_problem(d, alg)
  raise TypeError(f"cannot color with {type(alg).__name__}")


def _wrap(d: Diagram, alg: FiniteAlgebra, values: tuple[int, ...]) -> Coloring:
  if isinstance(alg, Biquandloid):
    return Coloring(alg.kind, values[:d.n_semiarcs], regions=values[d.n_semiarcs:])
  if isinstance(alg, Crossoid):
    nc = len(d.crossings)
    return Coloring(alg.kind, values[:nc], semiarcs=values[nc:])
  return Coloring(alg.kind, values)


def iter_colorings(d: Diagram, alg: FiniteAlgebra, fixed: dict[int, int] | None = None) -> Iterator[Coloring]:
  for values in coloring_problem(d, alg).solutions(fixed):
    yield _wrap(d, alg, values)


def colorings(d: Diagram, alg: FiniteAlgebra, limit: int | None = None) -> list[Coloring]:
  out = []
  for col in iter_colorings(d, alg):
    if limit is not None and len(out) >= limit:
      raise ColoringOverflow(f"more than {limit} colorings")
    out.append(col)
  logger.debug("%d %s colorings of a diagram with %d crossings", len(out), alg.kind, len(d.crossings))
  return out


def split_enumeration(d: Diagram, alg: FiniteAlgebra, work: Callable[[dict[int, int]], T], threads: int = 1) -> list[T]:
  """Runs work once per value of the first variable on a thread pool, results in value order.

  With one thread, or nothing to color, work runs once on the empty seed."""
  domains = coloring_problem(d, alg).domains
  if threads <= 1 or not domains:
    return [work({})]
  with ThreadPool(threads) as pool:
    return pool.map(work, [{0: x} for x in domains[0]])


def count(d: Diagram, alg: FiniteAlgebra, threads: int = 1) -> int:
  p = coloring_problem(d, alg)
  return sum(split_enumeration(d, alg, p.count, threads))


def verify_coloring(d: Diagram, alg: FiniteAlgebra, col: Coloring) -> bool:
  """Direct rule check of a complete coloring."""
  if isinstance(alg, Biquandloid):
    values = col.colors + col.regions
  elif isinstance(alg, Crossoid):
    values = col.colors + col.semiarcs
  else:
    values = col.colors
  p = coloring_problem(d, alg)
  if len(values) != len(p.domains) or any(v not in dom for v, dom in zip(values, p.domains)):
    return False
  return all(c.check(*(values[v] for v in c.scope)) for c in p.constraints)


def brute_force_count(d: Diagram, alg: FiniteAlgebra) -> int:
  """Count over every raw assignment, for cross-checking the solver on small inputs."""
  p = coloring_problem(d, alg)
  total = 0
  for values in itertools.product(*p.domains):
    if all(c.check(*(values[v] for v in c.scope)) for c in p.constraints):
      total += 1
  return total
