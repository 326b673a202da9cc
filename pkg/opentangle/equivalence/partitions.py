#!/usr/bin/env python3
import hashlib
import logging
from dataclasses import dataclass
from enum import Enum

from opentangle.diagram.canonical import canonical_form
from opentangle.diagram.diagram import Diagram, FunctorKind
from opentangle.diagram.wrapping import wrapping_index
from opentangle.equivalence.disjoint_set import DisjointSet
from opentangle.equivalence.graph import MorphismGraph, explore
from opentangle.errors import Unsupported
from opentangle.moves.reidemeister import MoveKind, bigon_data, find_sites

logger = logging.getLogger(__name__)

Element = tuple[int, int]  # (node, element)


@dataclass
class ElementPartition:
  graph: MorphismGraph
  kind: FunctorKind
  sets: DisjointSet[Element]
  at: int = 0

  def same(self, node: int, x: int, y: int) -> bool:
    return self.sets.same((node, x), (node, y))

  def same_across(self, a: Element, b: Element) -> bool:
    return self.sets.same(a, b)

  def classes(self, node: int | None = None) -> list[list[int]]:
    """Classes of the elements of one node."""
    node = self.at if node is None else node
    groups: dict[Element, list[int]] = {}
    for x in range(self.graph.nodes[node].size(self.kind)):
      groups.setdefault(self.sets.find((node, x)), []).append(x)
    return sorted(groups.values())

  def global_classes(self) -> list[list[Element]]:
    return [list(s) for s in self.sets.sorted()]

  def to_json(self, node: int | None = None) -> dict:
    node = self.at if node is None else node
    digest = hashlib.sha256(canonical_form(self.graph.nodes[node])).hexdigest()[:16]
    return {"node": digest, "functor": self.kind.value, "classes": self.classes(node)}


def _elements(g: MorphismGraph, kind: FunctorKind) -> list[Element]:
  return [(k, x) for k, d in enumerate(g.nodes) for x in range(d.size(kind))]


def weak_partition(g: MorphismGraph, kind) -> ElementPartition:
  """x and y are weakly equivalent when some chain of explored morphisms relates them."""
  kind = FunctorKind(kind)
  sets = DisjointSet(_elements(g, kind))
  for e in g.edges:
    for x, y in e.relation[kind]:
      sets.union((e.source, x), (e.target, y))
  return ElementPartition(g, kind, sets)


def _propagate(g: MorphismGraph, kind: FunctorKind, sets: DisjointSet[Element]):
  # every class of a source maps into one class of the target
  rounds = 0
  changed = True
  while changed:
    changed = False
    rounds += 1
    for e in g.edges:
      images: dict[Element, set[int]] = {}
      for x, y in e.relation[kind]:
        images.setdefault(sets.find((e.source, x)), set()).add(y)
      for ys in images.values():
        if len(ys) > 1:
          changed = sets.union_all((e.target, y) for y in sorted(ys)) or changed
  logger.debug("%s partition stable after %d rounds over %d edges", kind.value, rounds, len(g.edges))


def strong_partition(g: MorphismGraph, kind, at: int | None = None) -> ElementPartition:
  """Fixpoint of the propagation rule starting from the diagonal partition on every node.

  Classes never leave their node; at is the node classes() reports by default.
  """
  kind = FunctorKind(kind)
  sets = DisjointSet(_elements(g, kind))
  _propagate(g, kind, sets)
  return ElementPartition(g, kind, sets, g.base if at is None else at)


def bigon_crossings(d: Diagram) -> list[tuple[int, int]]:
  """Crossing pairs bounding a removable bigon."""
  pairs = []
  for site in find_sites(d, MoveKind.R2_DEL):
    over, _ = bigon_data(d, site.face)
    ends = sorted(i for i, c in enumerate(d.crossings) if over in (c.over_in, c.over_out))
    pairs.append((ends[0], ends[1]))
  return pairs


def omega2_partition(g: MorphismGraph, at: int | None = None) -> ElementPartition:
  sets = DisjointSet(_elements(g, FunctorKind.C))
  for k, d in enumerate(g.nodes):
    for c1, c2 in bigon_crossings(d):
      sets.union((k, c1), (k, c2))
  _propagate(g, FunctorKind.C, sets)
  return ElementPartition(g, FunctorKind.C, sets, g.base if at is None else at)


class ShVerdict(str, Enum):
  EQUIVALENT = "equivalent"
  INEQUIVALENT = "inequivalent"
  UNKNOWN = "unknown"


def sh_crossing_test(d: Diagram, c1: int, c2: int, max_crossings: int, max_depth: int, max_nodes: int = 400) -> ShVerdict:
  """Homotopical strong equivalence of two pure crossings, decided where the budget allows."""
  for c in (c1, c2):
    if not d.is_pure(c):
      raise Unsupported(f"crossing {c} joins two components, its wrapping index is undefined")
  if c1 == c2:
    return ShVerdict.EQUIVALENT
  if d.crossings[c1].sign != d.crossings[c2].sign or wrapping_index(d, c1) != wrapping_index(d, c2):
    return ShVerdict.INEQUIVALENT
  g = explore(d, max(max_crossings, len(d.crossings)), max_depth, max_nodes=max_nodes)
  if omega2_partition(g).same(g.base, c1, c2):
    return ShVerdict.EQUIVALENT
  return ShVerdict.UNKNOWN
