#!/usr/bin/env python3
import logging
from dataclasses import dataclass
from enum import Enum

from opentangle.diagram.builder import DiagramBuilder
from opentangle.diagram.diagram import Crossing, Diagram
from opentangle.errors import NotApplicable
from opentangle.moves.relation import ElementRelation, derive_relation

logger = logging.getLogger(__name__)


class MoveKind(str, Enum):
  R1_ADD = "r1+"
  R1_DEL = "r1-"
  R2_ADD = "r2+"
  R2_DEL = "r2-"
  R3 = "r3"
  ISO = "iso"

  @property
  def dagger(self) -> 'MoveKind':
    return DAGGER[self]


DAGGER = {
  MoveKind.R1_ADD: MoveKind.R1_DEL,
  MoveKind.R1_DEL: MoveKind.R1_ADD,
  MoveKind.R2_ADD: MoveKind.R2_DEL,
  MoveKind.R2_DEL: MoveKind.R2_ADD,
  MoveKind.R3: MoveKind.R3,
  MoveKind.ISO: MoveKind.ISO,
}


@dataclass(frozen=True)
class R1AddSite:
  semiarc: int
  first: str = "under"  # which pass of the kink comes first along the strand
  side: str = "L"       # side of the strand the loop lies on
  kind = MoveKind.R1_ADD


@dataclass(frozen=True)
class R1DelSite:
  crossing: int
  loop: int
  kind = MoveKind.R1_DEL


@dataclass(frozen=True)
class R2AddSite:
  over_dart: int
  under_dart: int
  kind = MoveKind.R2_ADD

  @property
  def over(self) -> int:
    return self.over_dart // 2

  @property
  def under(self) -> int:
    return self.under_dart // 2


@dataclass(frozen=True)
class R2DelSite:
  face: int
  kind = MoveKind.R2_DEL


@dataclass(frozen=True)
class R3Site:
  face: int
  kind = MoveKind.R3


MoveSite = R1AddSite | R1DelSite | R2AddSite | R2DelSite | R3Site


# *** site detection ***

def monogon_loops(d: Diagram) -> dict[int, int]:
  """Crossing to the lowest loop semiarc bounding a monogon face there."""
  loops: dict[int, int] = {}
  for f, darts in enumerate(d.faces):
    if len(darts) != 1:
      continue
    s = darts[0] // 2
    if s in d.circles or d.face_successor(darts[0]) != darts[0]:
      continue
    if darts[0] ^ 1 not in d.dart_position:
      continue
    i, _ = d.dart_position[darts[0] ^ 1]
    if i not in loops or s < loops[i]:
      loops[i] = s
  return loops


def _passes(d: Diagram, s: int) -> tuple[tuple[int, str], tuple[int, str]] | None:
  # (tail crossing, pass) and (head crossing, pass) of a semiarc
  tail = head = None
  for i, c in enumerate(d.crossings):
    if c.under_out == s:
      tail = (i, "U")
    elif c.over_out == s:
      tail = (i, "O")
    if c.under_in == s:
      head = (i, "U")
    elif c.over_in == s:
      head = (i, "O")
  if tail is None or head is None:
    return None
  return tail, head


def bigon_data(d: Diagram, face: int):
  """(over semiarc, under semiarc) of a removable bigon face, else None."""
  darts = d.faces[face]
  if len(darts) != 2:
    return None
  a, b = darts[0] // 2, darts[1] // 2
  if a == b:
    return None
  pa, pb = _passes(d, a), _passes(d, b)
  if pa is None or pb is None:
    return None
  ends_a = {pa[0][0], pa[1][0]}
  if len(ends_a) != 2 or ends_a != {pb[0][0], pb[1][0]}:
    return None
  kinds_a, kinds_b = (pa[0][1], pa[1][1]), (pb[0][1], pb[1][1])
  if kinds_a == ("O", "O") and kinds_b == ("U", "U"):
    return a, b
  if kinds_a == ("U", "U") and kinds_b == ("O", "O"):
    return b, a
  return None


def triangle_data(d: Diagram, face: int):
  """(top, middle, bottom) triangle sides of an R3 face, else None."""
  darts = d.faces[face]
  if len(darts) != 3:
    return None
  sides = [x // 2 for x in darts]
  if len(set(sides)) != 3:
    return None
  passes = [_passes(d, s) for s in sides]
  if any(p is None for p in passes):
    return None
  crossings = {p[k][0] for p in passes for k in (0, 1)}
  if len(crossings) != 3 or any(p[0][0] == p[1][0] for p in passes):
    return None
  roles = {}
  for s, p in zip(sides, passes):
    pattern = {p[0][1], p[1][1]}
    role = "top" if pattern == {"O"} else "bottom" if pattern == {"U"} else "middle"
    roles.setdefault(role, []).append(s)
  if sorted(roles) != ["bottom", "middle", "top"] or any(len(v) != 1 for v in roles.values()):
    return None
  return roles["top"][0], roles["middle"][0], roles["bottom"][0]


def find_sites(d: Diagram, kind: MoveKind) -> list:
  kind = MoveKind(kind)
  if kind == MoveKind.R1_ADD:
    return [R1AddSite(s, first, side) for s in range(d.n_semiarcs) for first in ("under", "over") for side in ("L", "R")]
  if kind == MoveKind.R1_DEL:
    return [R1DelSite(i, s) for i, s in sorted(monogon_loops(d).items())]
  if kind == MoveKind.R2_ADD:
    # separate pieces meet in the shared outer region
    by_region: dict[int, list[int]] = {}
    for dart in range(2 * d.n_semiarcs):
      by_region.setdefault(d.region_of_face[d.dart_face[dart]], []).append(dart)
    return [R2AddSite(do, du) for _, darts in sorted(by_region.items()) for do in darts for du in darts if do // 2 != du // 2]
  if kind == MoveKind.R2_DEL:
    return [R2DelSite(f) for f in range(len(d.faces)) if bigon_data(d, f) is not None]
  if kind == MoveKind.R3:
    return [R3Site(f) for f in range(len(d.faces)) if triangle_data(d, f) is not None]
  return []


# *** moves ***

def _outer_pairs(origins: dict[int, frozenset[int]]) -> set[tuple[int, int]]:
  return {(x, y) for y, xs in origins.items() for x in xs}


def _apply_r1_add(d: Diagram, site: R1AddSite):
  if not 0 <= site.semiarc < d.n_semiarcs:
    raise NotApplicable(f"no semiarc {site.semiarc}")
  circle = site.semiarc in d.circles
  b = DiagramBuilder(d)
  s1, loop, s3 = b.split(site.semiarc, 3)
  b.origin[loop] = frozenset()
  under_first = site.first == "under"
  sign = 1 if under_first == (site.side == "L") else -1
  if under_first:
    b.add_crossing(sign, s1, loop, loop, s3)
  else:
    b.add_crossing(sign, loop, s3, s1, loop)
  if circle:
    b.join(s3, s1)
  return b


def _apply_r1_del(d: Diagram, site: R1DelSite):
  loops = monogon_loops(d)
  if site.crossing not in loops:
    raise NotApplicable(f"crossing {site.crossing} bounds no monogon")
  c = d.crossings[site.crossing]
  if site.loop not in (c.under_in, c.over_in) or site.loop not in (c.under_out, c.over_out):
    raise NotApplicable(f"semiarc {site.loop} is not a loop at crossing {site.crossing}")
  b = DiagramBuilder(d)
  b.origin[site.loop] = frozenset()
  _, ui, uo, oi, oo = b.remove_crossing(site.crossing)
  s1 = ui if oi == site.loop else oi
  s3 = oo if uo == site.loop else uo
  b.join(b.join(s1, site.loop), s3)
  return b


def _apply_r2_add(d: Diagram, site: R2AddSite):
  n = 2 * d.n_semiarcs
  if not (0 <= site.over_dart < n and 0 <= site.under_dart < n):
    raise NotApplicable("dart out of range")
  if site.over == site.under or d.region_of_face[d.dart_face[site.over_dart]] != d.region_of_face[d.dart_face[site.under_dart]]:
    raise NotApplicable("darts must bound one region and belong to distinct semiarcs")
  eo = 1 if site.over_dart % 2 == 0 else -1
  eu = 1 if site.under_dart % 2 == 0 else -1
  b = DiagramBuilder(d)
  o_circle, u_circle = site.over in d.circles, site.under in d.circles
  o1, o2, o3 = b.split(site.over, 3)
  u1, u2, u3 = b.split(site.under, 3)
  b.origin[o2] = frozenset()
  b.origin[u2] = frozenset()
  p = b.add_crossing(eo * eu, 0, 0, 0, 0)
  q = b.add_crossing(-eo * eu, 0, 0, 0, 0)
  over_order = (p, q) if eo > 0 else (q, p)
  under_order = (q, p) if eu > 0 else (p, q)
  b.crossings[over_order[0]][3:5] = [o1, o2]
  b.crossings[over_order[1]][3:5] = [o2, o3]
  b.crossings[under_order[0]][1:3] = [u1, u2]
  b.crossings[under_order[1]][1:3] = [u2, u3]
  if o_circle:
    b.join(o3, o1)
  if u_circle:
    b.join(u3, u1)
  return b


def _apply_r2_del(d: Diagram, site: R2DelSite):
  if not 0 <= site.face < len(d.faces) or bigon_data(d, site.face) is None:
    raise NotApplicable(f"face {site.face} is not a removable bigon")
  over, under = bigon_data(d, site.face)
  (o_tail, _), (o_head, _) = _passes(d, over)
  (u_tail, _), (u_head, _) = _passes(d, under)
  o1 = d.crossings[o_tail].over_in
  o3 = d.crossings[o_head].over_out
  u1 = d.crossings[u_tail].under_in
  u3 = d.crossings[u_head].under_out
  b = DiagramBuilder(d)
  b.origin[over] = frozenset()
  b.origin[under] = frozenset()
  b.remove_crossing(o_tail)
  b.remove_crossing(o_head)
  b.join(b.join(o1, over), o3)
  b.join(b.join(u1, under), u3)
  return b


def _apply_r3(d: Diagram, site: R3Site):
  if not 0 <= site.face < len(d.faces) or triangle_data(d, site.face) is None:
    raise NotApplicable(f"face {site.face} is not an R3 triangle")
  top, middle, bottom = triangle_data(d, site.face)
  crossings = [list((c.sign, *c.semiarcs)) for c in d.crossings]
  for side in (top, middle, bottom):
    (tail, tp), (head, hp) = _passes(d, side)
    ti, to = (1, 2) if tp == "U" else (3, 4)
    hi, ho = (1, 2) if hp == "U" else (3, 4)
    before = d.crossings[tail].semiarcs[ti - 1]
    after = d.crossings[head].semiarcs[ho - 1]
    # the strand now meets the head crossing first and the tail crossing second
    crossings[head][hi], crossings[head][ho] = before, side
    crossings[tail][ti], crossings[tail][to] = side, after

  passes = {s: _passes(d, s) for s in (top, middle, bottom)}
  tm = _shared(passes[top], passes[middle])
  mb = _shared(passes[middle], passes[bottom])
  tb = _shared(passes[top], passes[bottom])
  return crossings, (top, middle, bottom), (tm, mb, tb)


def _shared(p, q) -> int:
  return ({p[0][0], p[1][0]} & {q[0][0], q[1][0]}).pop()


def apply(d: Diagram, site) -> tuple[Diagram, ElementRelation]:
  """Applies one Reidemeister move and returns the target with its element relations."""
  kind = site.kind
  logger.debug("apply %s at %s on %d crossings", kind.value, site, len(d.crossings))
  if kind == MoveKind.R3:
    rows, sides, (tm, mb, tb) = _apply_r3(d, site)
    target = Diagram(tuple(Crossing(*row) for row in rows), d.n_semiarcs, d.starts, d.ends)
    identity = {(s, s) for s in range(d.n_semiarcs)}
    outer = {(s, s) for s in range(d.n_semiarcs) if s not in sides}
    triangle = d.region_of_face[site.face]
    new_face = target.dart_face[d.faces[site.face][0] ^ 1]
    untouched = {(i, i) for i in range(len(d.crossings)) if i not in (tm, mb, tb)}
    rel = derive_relation(d, target, identity, untouched,
                          region_semiarc_pairs=outer,
                          extra_regions={(triangle, target.region_of_face[new_face])},
                          midcrossing_pairs={(tm, tm), (mb, mb)},
                          trait_pairs={(tb, tb)})
    return target, rel

  builders = {
    MoveKind.R1_ADD: _apply_r1_add,
    MoveKind.R1_DEL: _apply_r1_del,
    MoveKind.R2_ADD: _apply_r2_add,
    MoveKind.R2_DEL: _apply_r2_del,
  }
  b = builders[kind](d, site)
  target, origins, crossing_map = b.build()
  survivors = [(k, v) for k, v in crossing_map.items() if k < len(d.crossings)]
  rel = derive_relation(d, target, _outer_pairs(origins), survivors)
  return target, rel
