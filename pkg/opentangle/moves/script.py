#!/usr/bin/env python3
import logging
from dataclasses import dataclass

from opentangle.codec.move_script import MoveCommand
from opentangle.diagram.canonical import canonical_form
from opentangle.diagram.diagram import Diagram, FunctorKind
from opentangle.errors import NotApplicable
from opentangle.moves.reidemeister import (MoveKind, R1AddSite, R1DelSite, R2AddSite, R2DelSite, R3Site,
                                           apply, bigon_data, find_sites, monogon_loops)
from opentangle.moves.relation import ElementRelation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceStep:
  step: int
  kind: MoveKind
  site: object
  crossings: int

  def to_json(self) -> dict:
    return {"step": self.step, "kind": self.kind.value, "site": repr(self.site), "crossings": self.crossings}


def _check(d: Diagram, index: int, size: int, what: str) -> int:
  if not 0 <= index < size:
    raise NotApplicable(f"no {what} {index + 1}")
  return index


def resolve_site(d: Diagram, command: MoveCommand):
  """Turns the 1-based labels of a command into a site of d."""
  kind = command.kind
  if kind == MoveKind.R1_ADD:
    s = _check(d, command.label("semiarc"), d.n_semiarcs, "semiarc")
    return R1AddSite(s, command.get("first", "under"), command.get("side", "L"))
  if kind == MoveKind.R1_DEL:
    c = _check(d, command.label("crossing"), len(d.crossings), "crossing")
    loops = monogon_loops(d)
    if c not in loops:
      raise NotApplicable(f"crossing {c + 1} bounds no monogon")
    return R1DelSite(c, loops[c])
  if kind == MoveKind.R2_ADD:
    over = _check(d, command.label("over"), d.n_semiarcs, "semiarc")
    under = _check(d, command.label("under"), d.n_semiarcs, "semiarc")
    over_dart = 2 * over + (command.get("side", "L") == "R")
    region = d.region_of_face[d.dart_face[over_dart]]
    candidates = [x for x in (2 * under, 2 * under + 1) if d.region_of_face[d.dart_face[x]] == region]
    if "under_side" in dict(command.args):
      candidates = [x for x in candidates if x % 2 == (command.get("under_side") == "R")]
    if not candidates:
      raise NotApplicable(f"semiarcs {over + 1} and {under + 1} share no region on that side")
    return R2AddSite(over_dart, candidates[0])
  face = _check(d, command.label("face"), len(d.faces), "face")
  return R2DelSite(face) if kind == MoveKind.R2_DEL else R3Site(face)


def command_for_site(d: Diagram, site) -> MoveCommand:
  if isinstance(site, R1AddSite):
    args = (("semiarc", str(site.semiarc + 1)), ("first", site.first), ("side", site.side))
  elif isinstance(site, R1DelSite):
    args = (("crossing", str(site.crossing + 1)),)
  elif isinstance(site, R2AddSite):
    args = [("over", str(site.over + 1)), ("under", str(site.under + 1)), ("side", "R" if site.over_dart % 2 else "L")]
    region = d.region_of_face[d.dart_face[site.over_dart]]
    if d.region_of_face[d.dart_face[site.under_dart ^ 1]] == region:
      args.append(("under_side", "R" if site.under_dart % 2 else "L"))
    args = tuple(args)
  else:
    args = (("face", f"F{site.face + 1}"),)
  return MoveCommand(site.kind, args)


def _new_crossings(target: Diagram, rel: ElementRelation) -> set[int]:
  return set(range(len(target.crossings))) - {y for _, y in rel[FunctorKind.C]}


def dagger_site(d: Diagram, site, target: Diagram, rel: ElementRelation):
  """The site of the inverse move in target, the one whose application gives back d."""
  if site.kind == MoveKind.R1_ADD:
    (c,) = _new_crossings(target, rel)
    return R1DelSite(c, monogon_loops(target)[c])
  if site.kind == MoveKind.R2_ADD:
    new = _new_crossings(target, rel)
    for s in find_sites(target, MoveKind.R2_DEL):
      over, _ = bigon_data(target, s.face)
      ends = {i for i, c in enumerate(target.crossings) if over in (c.over_in, c.over_out)}
      if ends == new:
        return s
  if site.kind == MoveKind.R3:
    return R3Site(target.dart_face[d.faces[site.face][0] ^ 1])

  # decreasing moves: the inverse acts on the images of the surviving semiarcs
  touched = {y for _, y in rel[FunctorKind.SA]}
  if site.kind == MoveKind.R1_DEL:
    candidates = [s for s in find_sites(target, MoveKind.R1_ADD) if s.semiarc in touched]
  else:
    candidates = [s for s in find_sites(target, MoveKind.R2_ADD) if s.over in touched and s.under in touched]
  goal = canonical_form(d)
  for s in candidates:
    if canonical_form(apply(target, s)[0]) == goal:
      return s
  raise NotApplicable("no inverse site found")


def run_script(d: Diagram, commands: list[MoveCommand]) -> tuple[Diagram, ElementRelation, list[TraceStep]]:
  rel = ElementRelation.identity(d)
  trace = []
  for k, command in enumerate(commands, start=1):
    try:
      site = resolve_site(d, command)
      d, step_rel = apply(d, site)
    except NotApplicable as e:
      raise NotApplicable(str(e), step=k) from e
    rel = rel.compose(step_rel)
    trace.append(TraceStep(k, command.kind, site, len(d.crossings)))
    logger.debug("step %d: %s, %d crossings", k, command, len(d.crossings))
  return d, rel, trace


def dagger_script(d: Diagram, commands: list[MoveCommand]) -> list[MoveCommand]:
  """Commands undoing a script, in reverse order."""
  inverse = []
  for command in commands:
    site = resolve_site(d, command)
    target, rel = apply(d, site)
    inverse.append(command_for_site(target, dagger_site(d, site, target, rel)))
    d = target
  return inverse[::-1]
