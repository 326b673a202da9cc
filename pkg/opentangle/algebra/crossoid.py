#!/usr/bin/env python3
import itertools
import logging
from dataclasses import dataclass
from typing import ClassVar

from opentangle.algebra.base import Cocycle, FiniteAlgebra, Table, freeze
from opentangle.algebra.biquandloid import Biquandloid
from opentangle.algebra.groups import FiniteGroup
from opentangle.errors import Incompatible

logger = logging.getLogger(__name__)

# orientations of polygon edges: "r" runs with the face boundary, "l" against it
ORIENTATIONS = ("r", "l")
TRIANGLE_KEYS = tuple("".join(k) for k in itertools.product(ORIENTATIONS, repeat=3))
LOOP_MAPS = ("L+l", "L-l", "L+r", "L-r")
BIGON_MAPS = ("i_s", "i_w", "B_u", "B_d", "B_l", "B_r")
INCIDENCES = ("dl", "dr", "ul", "ur")

# corner of the incoming and outgoing polygon edge, keyed by (previous, next) orientation
IN_CORNER = {("r", "r"): "dl", ("l", "r"): "ul", ("r", "l"): "dr", ("l", "l"): "ur"}
OUT_CORNER = {("r", "r"): "ul", ("l", "r"): "ur", ("r", "l"): "dl", ("l", "l"): "dr"}

SIGN_CHANGE = {("r", "r"): ("i_s", "B_l"), ("l", "r"): ("i_w", "B_u"), ("r", "l"): ("i_w", "B_d"), ("l", "l"): ("i_s", "B_r")}
SAME_SIGN_BIGON = {("r", "r"): "B_l", ("l", "l"): "B_r", ("l", "r"): "B_u", ("r", "l"): "B_d"}


def loop_key(sign: int, side: str) -> str:
  return f"L{'+' if sign > 0 else '-'}{side}"


def i_map(o: str, o2: str) -> str:
  return "i_s" if o == o2 else "i_w"


@dataclass(frozen=True)
class Crossoid(FiniteAlgebra):
  """Crossing colors C and arc colors A in the reduced form: loop, bigon and triangle maps."""
  a: int
  sign: tuple[int, ...]
  incidence: dict[str, tuple[int, ...]]
  maps: dict[str, tuple[int, ...]]
  triangles: dict[str, Table]
  kind: ClassVar[str] = "crossoid"

  def __hash__(self):
    return hash((self.a, self.sign))

  @property
  def n(self) -> int:
    return len(self.sign)

  @property
  def size(self) -> int:
    return self.n

  def corner(self, c: int, corner: str) -> int:
    return self.incidence[corner][c]

  def a_in(self, c: int, prev: str, nxt: str) -> int:
    return self.incidence[IN_CORNER[(prev, nxt)]][c]

  def a_out(self, c: int, prev: str, nxt: str) -> int:
    return self.incidence[OUT_CORNER[(prev, nxt)]][c]

  def apply(self, name: str, x: int) -> int:
    return self.maps[name][x]

  def loop(self, sign: int, side: str, x: int) -> int:
    return self.maps[loop_key(sign, side)][x]

  def triangle(self, key: str, c1: int, c2: int) -> int | None:
    return self.triangles[key][c1][c2]

  def sign_change(self, o: str, o2: str, c: int) -> int:
    i, b = SIGN_CHANGE[(o, o2)]
    return self.apply(i, self.apply(b, c))

  @property
  def positive(self) -> list[int]:
    return [c for c in range(self.n) if self.sign[c] > 0]

  def compatible(self, key: str, c1: int, c2: int) -> bool:
    o0, o1, o2 = key
    return self.sign[c1] > 0 and self.sign[c2] > 0 and self.a_out(c1, o0, o1) == self.a_in(c2, o1, o2)


def is_unframed(x: Crossoid) -> bool:
  return x.maps["i_s"] == x.maps["i_w"]


def polygon_map(x: Crossoid, signs, orientations, colors, from_end: bool = False) -> int:
  """Color of the base crossing of a polygonal face from the colors of the others.

  signs and orientations are (ε0, ..., εn-1) and (o0, ..., on-1); colors are c1, ..., cn-1.
  For a monogon colors holds the single arc color instead. Polygons with more than three
  crossings are cut into triangles from the start, or from the end when from_end is set.
  """
  signs, orientations, colors = tuple(signs), tuple(orientations), tuple(colors)
  n = len(signs)
  if n < 1 or len(orientations) != n or len(colors) != max(n - 1, 1):
    raise Incompatible(f"polygon of {n} crossings needs {n} orientations and {max(n - 1, 1)} colors")

  if n == 1:
    (arc,) = colors
    if not 0 <= arc < x.a:
      raise Incompatible(f"arc color {arc} out of range")
    eps = signs[0]
    if orientations[0] == "r":
      return x.loop(eps, "l", x.corner(x.loop(-eps, "r", arc), "ur"))
    return x.loop(eps, "r", x.corner(x.loop(-eps, "l", arc), "ul"))

  for k, c in enumerate(colors, start=1):
    if x.sign[c] != signs[k]:
      raise Incompatible(f"crossing color {c} has sign {x.sign[c]}, expected {signs[k]}")
  for k in range(1, n - 1):
    if x.a_out(colors[k - 1], orientations[k - 1], orientations[k]) != x.a_in(colors[k], orientations[k], orientations[k + 1]):
      raise Incompatible(f"arc between crossings {k} and {k + 1} has mismatched colors")

  if n == 2:
    o = (orientations[0], orientations[1])
    if signs[0] == signs[1]:
      return x.apply(SAME_SIGN_BIGON[o], colors[0])
    return x.apply(i_map(*o), colors[0])

  positive = [x.sign_change(orientations[k - 1], orientations[k], c) if signs[k] < 0 else c for k, c in enumerate(colors, start=1)]
  base = _triangulate(x, list(orientations), positive, from_end)
  if signs[0] > 0:
    base = x.sign_change(orientations[-1], orientations[0], base)
  return base


def _triangulate(x: Crossoid, orientations: list[str], colors: list[int], from_end: bool) -> int:
  while len(orientations) > 3:
    k = len(orientations) - 2 if from_end else 1
    key = "".join(orientations[k - 1:k + 2])
    t = x.triangle(key, colors[k - 1], colors[k])
    if t is None:
      raise Incompatible(f"triangle {key} undefined on ({colors[k - 1]}, {colors[k]})")
    colors[k - 1:k + 1] = [x.apply(i_map(orientations[k - 1], orientations[k + 1]), t)]
    del orientations[k]
  t = x.triangle("".join(orientations), colors[0], colors[1])
  if t is None:
    raise Incompatible(f"triangle {''.join(orientations)} undefined on ({colors[0]}, {colors[1]})")
  return t


# *** constructors ***

def parity_crossoid(g: FiniteGroup, name: str = "") -> Crossoid:
  """C = G × {±1} indexed 2g + (ε < 0) over a single arc color."""
  n = 2 * g.n

  def idx(h, eps):
    return 2 * h + (eps < 0)

  sign = tuple(1 if k % 2 == 0 else -1 for k in range(n))
  incidence = {k: (0,) * n for k in INCIDENCES}
  maps = {loop_key(eps, side): (idx(g.identity, eps),) for eps in (1, -1) for side in ("l", "r")}
  flip = tuple(idx(g.inv(k // 2), -sign[k]) for k in range(n))
  maps["i_s"] = maps["i_w"] = flip
  for b in ("B_u", "B_d", "B_l", "B_r"):
    maps[b] = tuple(idx(g.inv(k // 2), sign[k]) for k in range(n))

  def e(o, o2):
    return 1 if o == o2 else -1

  triangles = {}
  for key in TRIANGLE_KEYS:
    o0, o1, o2 = key
    table = [[None] * n for _ in range(n)]
    for g1, g2 in itertools.product(range(g.n), repeat=2):
      prod = g.mul(g.power(g1, e(o0, o1)), g.power(g2, e(o1, o2)))
      table[idx(g1, 1)][idx(g2, 1)] = idx(g.power(prod, -e(o2, o0)), -1)
    triangles[key] = freeze(table)
  return Crossoid(1, sign, incidence, maps, triangles, name=name or f"parity_{g.n}")


def _bq_corners(b: Biquandloid, x: int, y: int, sign: int) -> dict[str, int]:
  if sign > 0:
    return {"dr": x, "ur": y, "ul": b.uast[x][y], "dl": b.oast[y][x]}
  return {"dr": x, "ur": y, "ul": b.oast[x][y], "dl": b.uast[y][x]}


def biquandloid_crossoid(b: Biquandloid, name: str = "") -> Crossoid:
  """C = (B ×_R B) × {±1} indexed 2k + (ε < 0) over the pair list, A = B."""
  pairs = b.pairs
  n = 2 * len(pairs)
  sign = tuple(1 if k % 2 == 0 else -1 for k in range(n))
  corners = [_bq_corners(b, *pairs[k // 2], sign[k]) for k in range(n)]
  incidence = {k: tuple(cs[k] for cs in corners) for k in INCIDENCES}

  # a crossing is fixed by its sign and any two adjacent corners
  lookup: dict[tuple, int] = {}
  for k in range(n):
    for p, q in itertools.permutations(INCIDENCES, 2):
      lookup.setdefault((sign[k], p, corners[k][p], q, corners[k][q]), k)

  def find(eps, **want):
    (p, vp), (q, vq) = want.items()
    if (eps, p, vp, q, vq) not in lookup:
      raise Incompatible(f"no crossing of sign {eps} with {p}={vp}, {q}={vq}")
    return lookup[(eps, p, vp, q, vq)]

  maps = {}
  for eps in (1, -1):
    maps[loop_key(eps, "l")] = tuple(2 * pairs.index((a, a)) + (eps < 0) for a in range(b.n))
    maps[loop_key(eps, "r")] = tuple(find(eps, ul=a, dl=a) for a in range(b.n))
  maps["i_s"] = maps["i_w"] = tuple(2 * pairs.index(pairs[k // 2][::-1]) + (sign[k] > 0) for k in range(n))
  maps["B_r"] = tuple(2 * pairs.index(pairs[k // 2][::-1]) + (sign[k] < 0) for k in range(n))
  maps["B_u"] = tuple(find(sign[k], dr=corners[k]["ur"], dl=corners[k]["ul"]) for k in range(n))
  maps["B_d"] = tuple(find(sign[k], ur=corners[k]["dr"], ul=corners[k]["dl"]) for k in range(n))
  maps["B_l"] = tuple(find(sign[k], ul=corners[k]["dl"], dl=corners[k]["ul"]) for k in range(n))

  triangles = {}
  for key in TRIANGLE_KEYS:
    o0, o1, o2 = key
    table = [[None] * n for _ in range(n)]
    for c1, c2 in itertools.product(range(0, n, 2), repeat=2):
      if corners[c1][OUT_CORNER[(o0, o1)]] != corners[c2][IN_CORNER[(o1, o2)]]:
        continue
      out_val = corners[c1][IN_CORNER[(o0, o1)]]
      in_val = corners[c2][OUT_CORNER[(o1, o2)]]
      table[c1][c2] = lookup.get((-1, OUT_CORNER[(o2, o0)], out_val, IN_CORNER[(o2, o0)], in_val))
    triangles[key] = freeze(table)
  logger.debug("biquandloid crossoid with %d crossing colors over %d arc colors", n, b.n)
  return Crossoid(b.n, sign, incidence, maps, triangles, name=name or (f"crossoid_{b.name}" if b.name else ""))


def crossoid_cocycle_from_biquandloid(b: Biquandloid, theta: Cocycle) -> Cocycle:
  """φ(x, y, +) = θ(x, y) and φ(x, y, -) = θ(y, x) on crossing colors."""
  values = {}
  for k, (x, y) in enumerate(b.pairs):
    if theta(x, y):
      values[(2 * k,)] = theta(x, y)
    if theta(y, x):
      values[(2 * k + 1,)] = theta(y, x)
  return Cocycle(theta.modulus, values)
