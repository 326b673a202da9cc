#!/usr/bin/env python3
import argparse
import hashlib
import json
import logging
import sys

from opentangle import ALGEBRA_PATH
from opentangle.algebra.axioms import check_axioms
from opentangle.codec import load_diagram
from opentangle.codec.algebra_file import load_algebra
from opentangle.codec.move_script import parse_move_script, save_move_script
from opentangle.codec.pd import serialize_pd
from opentangle.coloring.colorings import colorings, count
from opentangle.coloring.invariant import cocycle_invariant
from opentangle.coloring.presentation import KINDS, fundamental_presentation
from opentangle.config import load_config
from opentangle.diagram.canonical import canonical_form
from opentangle.diagram.diagram import FUNCTORS, Diagram, FunctorKind
from opentangle.diagram.numbering import alexander_numbering, semiarc_numbering
from opentangle.diagram.transforms import crossing_change, mirror, non_oriented_smoothing, oriented_smoothing, reverse
from opentangle.diagram.wrapping import trait_classes, wrap_crossing, wrapping_index, wrapping_monodromy
from opentangle.equivalence.graph import explore
from opentangle.equivalence.partitions import omega2_partition, sh_crossing_test, strong_partition, weak_partition
from opentangle.errors import RangeError, TangleError
from opentangle.generator.generator import create_all
from opentangle.homology.cocycles import check_cocycle
from opentangle.homology.complex import build_complex, homology
from opentangle.homology.cycle import crossing_cycle
from opentangle.moves.reidemeister import MoveKind, find_sites
from opentangle.moves.script import command_for_site, dagger_script, run_script

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
DOMAIN_ERROR = 1


class UsageError(Exception):
  pass


def diagram_hash(d: Diagram) -> str:
  return hashlib.sha256(canonical_form(d)).hexdigest()[:16]


def emit(obj):
  print(json.dumps(obj, sort_keys=True))


def _crossing(d: Diagram, label: int) -> int:
  if not 1 <= label <= len(d.crossings):
    raise RangeError(f"no crossing {label}, the diagram has {len(d.crossings)}")
  return label - 1


def _read_script(path: str):
  with open(path, encoding='utf-8') as f:
    return parse_move_script(f.read())


def _cocycle(alg, name: str):
  try:
    return alg.cocycle(name)
  except KeyError as e:
    raise UsageError(e.args[0]) from e


# *** commands ***

def cmd_validate(args, cfg):
  if args.diagram is None and args.algebra is None:
    raise UsageError("validate needs --diagram or --algebra")
  out = {}
  ok = True
  if args.diagram is not None:
    d = load_diagram(args.diagram)
    out["diagram"] = {
      "hash": diagram_hash(d),
      "crossings": len(d.crossings),
      "components": len(d.components),
      "closed": d.is_closed,
      "genus": d.genus,
    }
  if args.algebra is not None:
    report = check_axioms(load_algebra(args.algebra))
    out["algebra"] = report.to_json()
    ok = report.ok
  emit(out)
  return 0 if ok else DOMAIN_ERROR


def cmd_elements(args, cfg):
  d = load_diagram(args.diagram)
  emit({"hash": diagram_hash(d), "sizes": {k.value: d.size(k) for k in FUNCTORS},
        "arcs": list(d.arc_of), "components": [list(seq) for seq, _ in d.components]})
  return 0


def cmd_numbering(args, cfg):
  d = load_diagram(args.diagram)
  values, modulus = (semiarc_numbering if args.semiarcs else alexander_numbering)(d)
  emit({"modulus": modulus, "values": {str(k): v for k, v in values.items()}})
  return 0


def cmd_wr(args, cfg):
  d = load_diagram(args.diagram)
  c = _crossing(d, args.crossing)
  if args.monodromy:
    emit({"wr": wrapping_index(d, c), "monodromy": wrapping_monodromy(d, c)})
  else:
    emit(wrapping_index(d, c))
  return 0


TRANSFORMS = ("change", "mirror", "reverse", "smooth", "smooth-unoriented", "wrap")


def cmd_transform(args, cfg):
  d = load_diagram(args.diagram)
  if args.action in ("mirror", "reverse"):
    target = (mirror if args.action == "mirror" else reverse)(d)
  else:
    if args.crossing is None:
      raise UsageError(f"{args.action} needs --crossing")
    c = _crossing(d, args.crossing)
    if args.action == "change":
      target = crossing_change(d, c)
    elif args.action == "smooth":
      target = oriented_smoothing(d, c)
    elif args.action == "smooth-unoriented":
      target = non_oriented_smoothing(d, c)
    else:
      target, _ = wrap_crossing(d, c, args.turns)
  if args.output:
    with open(args.output, "w", encoding='utf-8') as f:
      f.write(serialize_pd(target))
  emit({"diagram": serialize_pd(target), "hash": diagram_hash(target), "crossings": len(target.crossings)})
  return 0


def cmd_trait(args, cfg):
  d = load_diagram(args.diagram)
  classes = [{"sign": t.sign, "components": list(t.components), "order": t.order.value, "crossings": [c + 1 for c in cs]}
             for t, cs in sorted(trait_classes(d).items())]
  emit(classes)
  return 0


def cmd_moves(args, cfg):
  d = load_diagram(args.diagram)
  if args.action == "find":
    sites = find_sites(d, MoveKind(args.kind))
    emit([str(command_for_site(d, s)) for s in sites])
    return 0

  commands = _read_script(args.script)
  if args.action == "script":
    print(save_move_script(dagger_script(d, commands)), end="")
    return 0

  target, _, trace = run_script(d, commands)
  if args.output:
    with open(args.output, "w", encoding='utf-8') as f:
      f.write(serialize_pd(target))
  emit({"diagram": serialize_pd(target), "hash": diagram_hash(target), "trace": [t.to_json() for t in trace]})
  return 0


def cmd_equiv(args, cfg):
  d = load_diagram(args.diagram)
  max_crossings = args.max_crossings or cfg.max_crossings
  max_depth = args.depth if args.depth is not None else cfg.max_depth
  if args.action == "sh":
    c1, c2 = (_crossing(d, c) for c in args.crossings)
    emit(sh_crossing_test(d, c1, c2, max_crossings, max_depth, cfg.max_nodes).value)
    return 0

  g = explore(d, max(max_crossings, len(d.crossings)), max_depth, max_nodes=cfg.max_nodes, iso_max_crossings=cfg.iso_max_crossings)
  if args.action == "weak":
    part = weak_partition(g, args.functor)
  elif args.action == "strong":
    part = strong_partition(g, args.functor)
  else:
    part = omega2_partition(g)
  out = part.to_json(g.base)
  out["nodes"] = len(g)
  out["truncated"] = g.truncated
  emit(out)
  return 0


def cmd_color(args, cfg):
  d = load_diagram(args.diagram)
  alg = load_algebra(args.algebra)
  if args.action == "count":
    emit(count(d, alg, args.threads))
    return 0
  cols = colorings(d, alg, args.limit or cfg.max_colorings)
  emit({"structure": alg.name, "diagram": diagram_hash(d), "count": len(cols), "colorings": [c.to_json() for c in cols]})
  return 0


def cmd_invariant(args, cfg):
  d = load_diagram(args.diagram)
  alg = load_algebra(args.algebra)
  state_sum = cocycle_invariant(d, alg, _cocycle(alg, args.cocycle), threads=args.threads)
  terms = {str(k): v for k, v in state_sum.as_dict().items()}
  if args.report:
    emit({"structure": alg.name, "diagram": diagram_hash(d), "count": state_sum.total, "state_sum": terms})
  else:
    emit(terms)
  return 0


def cmd_homology(args, cfg):
  alg = load_algebra(args.algebra)
  max_degree = max(cfg.max_degree, args.max_degree or 0)
  cc = build_complex(alg, args.degree + 1, args.modulus, max_degree=max_degree)
  if args.export:
    with open(args.export, "w", encoding='utf-8') as f:
      json.dump([cc.triplets(n) for n in sorted(cc.boundaries)], f, sort_keys=True)
  emit(homology(cc, args.degree).to_json(cc.name))
  return 0


def cmd_cocycle(args, cfg):
  alg = load_algebra(args.algebra)
  report = check_cocycle(alg, _cocycle(alg, args.cocycle), args.degree)
  emit(report.to_json())
  return 0 if report.ok else DOMAIN_ERROR


def cmd_cycle(args, cfg):
  d = load_diagram(args.diagram)
  emit(crossing_cycle(d).to_json())
  return 0


def cmd_presentation(args, cfg):
  d = load_diagram(args.diagram)
  print(fundamental_presentation(d, args.kind), end="")
  return 0


def cmd_generate(args, cfg):
  create_all(args.output)
  return 0


def build_parser() -> argparse.ArgumentParser:
  parser = argparse.ArgumentParser(prog="opentangle", description="Elements of tangle diagrams and their colorings")
  parser.add_argument("-v", "--verbose", action="store_true")
  parser.add_argument("--config", help="yaml config overriding the packaged defaults")
  sub = parser.add_subparsers(dest="command", required=True)

  def command(name, func, help_text, diagram=True):
    p = sub.add_parser(name, help=help_text)
    if diagram:
      p.add_argument("--diagram", required=True)
    p.set_defaults(func=func)
    return p

  p = command("validate", cmd_validate, "check a diagram file or the axioms of an algebra", diagram=False)
  p.add_argument("--diagram")
  p.add_argument("--algebra")

  command("elements", cmd_elements, "element counts per functor")
  p = command("numbering", cmd_numbering, "Alexander numbering of regions")
  p.add_argument("--semiarcs", action="store_true")
  p = command("wr", cmd_wr, "wrapping index of a pure crossing")
  p.add_argument("--crossing", type=int, required=True)
  p.add_argument("--monodromy", action="store_true", help="also report the change of wr under a full turn")
  p = command("transform", cmd_transform, "crossing changes, smoothings, mirror, reverse and wrapping")
  p.add_argument("action", choices=TRANSFORMS)
  p.add_argument("--crossing", type=int)
  p.add_argument("--turns", type=int, default=1, help="half turns for wrap, negative turns the other way")
  p.add_argument("--output")
  command("trait", cmd_trait, "trait classes of crossings")

  p = command("moves", cmd_moves, "Reidemeister moves")
  p.add_argument("action", choices=("apply", "find", "script"))
  p.add_argument("--script")
  p.add_argument("--kind", choices=[k.value for k in MoveKind if k != MoveKind.ISO], default=MoveKind.R3.value)
  p.add_argument("--output")

  p = command("equiv", cmd_equiv, "equivalence classes of elements")
  p.add_argument("action", choices=("weak", "strong", "omega2", "sh"))
  p.add_argument("--functor", choices=[k.value for k in FunctorKind], default=FunctorKind.C.value)
  p.add_argument("--crossings", type=int, nargs=2, default=(1, 2))
  p.add_argument("--depth", type=int)
  p.add_argument("--max-crossings", type=int)

  p = command("color", cmd_color, "colorings by a finite algebra")
  p.add_argument("action", choices=("count", "list"))
  p.add_argument("--algebra", required=True)
  p.add_argument("--limit", type=int)
  p.add_argument("--threads", type=int, default=1)

  p = command("invariant", cmd_invariant, "cocycle state sum")
  p.add_argument("--algebra", required=True)
  p.add_argument("--cocycle", required=True)
  p.add_argument("--report", action="store_true", help="include structure, diagram hash and count")
  p.add_argument("--threads", type=int, default=1)

  p = command("homology", cmd_homology, "homology of the coloring complex", diagram=False)
  p.add_argument("--algebra", required=True)
  p.add_argument("--degree", type=int, required=True)
  p.add_argument("--modulus", type=int, default=0)
  p.add_argument("--max-degree", type=int)
  p.add_argument("--export", help="write the boundary matrices as sparse triplets")

  p = command("cocycle", cmd_cocycle, "cocycle conditions", diagram=False)
  p.add_argument("action", choices=("check",))
  p.add_argument("--algebra", required=True)
  p.add_argument("--cocycle", required=True)
  p.add_argument("--degree", type=int)

  command("cycle", cmd_cycle, "signed crossing cycle of a closed diagram")
  p = command("presentation", cmd_presentation, "fundamental presentation")
  p.add_argument("--kind", choices=KINDS, default="quandle")

  p = command("generate", cmd_generate, "regenerate the packaged algebra files", diagram=False)
  p.add_argument("--output", default=ALGEBRA_PATH)
  return parser


def _fail(code: int, e: Exception) -> int:
  sys.stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}) + "\n")
  return code


def main(argv=None) -> int:
  args = build_parser().parse_args(argv)
  logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
  if args.command == "moves" and args.action != "find" and not args.script:
    return _fail(USAGE_ERROR, UsageError(f"moves {args.action} needs --script"))

  try:
    cfg = load_config(args.config)
    return args.func(args, cfg)
  except TangleError as e:
    logger.debug("%s failed", args.command, exc_info=True)
    return _fail(DOMAIN_ERROR, e)
  except (UsageError, OSError) as e:
    return _fail(USAGE_ERROR, e)


if __name__ == "__main__":
  sys.exit(main())
