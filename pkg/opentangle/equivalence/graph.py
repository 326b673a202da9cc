#!/usr/bin/env python3
import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field

from opentangle.config import Config
from opentangle.diagram.canonical import canonical_form
from opentangle.diagram.diagram import Diagram
from opentangle.errors import BudgetExceeded
from opentangle.moves.isomorphism import isomorphisms
from opentangle.moves.reidemeister import MoveKind, apply, find_sites
from opentangle.moves.relation import ElementRelation

logger = logging.getLogger(__name__)

DEFAULT_MOVES = (MoveKind.R1_ADD, MoveKind.R1_DEL, MoveKind.R2_ADD, MoveKind.R2_DEL, MoveKind.R3)


@dataclass(frozen=True)
class Edge:
  source: int
  target: int
  kind: MoveKind
  relation: ElementRelation
  dagger: int  # index of the reverse edge


@dataclass
class MorphismGraph:
  """Diagrams reachable from a base diagram, one node per isomorphism class.

  Every move edge comes with its dagger, the transposed relation in the opposite direction,
  and every node carries its non-trivial automorphisms as self-edges.
  """
  nodes: list[Diagram] = field(default_factory=list)
  depth: list[int] = field(default_factory=list)
  edges: list[Edge] = field(default_factory=list)
  index: dict[bytes, int] = field(default_factory=dict)
  base: int = 0
  truncated: bool = False
  iso_max_crossings: int = Config.iso_max_crossings

  def __len__(self) -> int:
    return len(self.nodes)

  def node_of(self, d: Diagram) -> int | None:
    return self.index.get(canonical_form(d))

  def add_node(self, d: Diagram, depth: int) -> int:
    k = len(self.nodes)
    self.nodes.append(d)
    self.depth.append(depth)
    self.index[canonical_form(d)] = k
    for rel in isomorphisms(d, d, self.iso_max_crossings):
      if any(x != y for x, y in rel["SA"]):
        self._add_pair(k, k, MoveKind.ISO, rel)
    return k

  def add_edge(self, source: int, target: int, kind: MoveKind, rel: ElementRelation):
    self._add_pair(source, target, kind, rel)

  def _add_pair(self, source: int, target: int, kind: MoveKind, rel: ElementRelation):
    k = len(self.edges)
    self.edges.append(Edge(source, target, kind, rel, k + 1))
    self.edges.append(Edge(target, source, kind.dagger, rel.transpose(), k))

  def out_edges(self, node: int) -> list[Edge]:
    return [e for e in self.edges if e.source == node]


def _to_node(g: MorphismGraph, target: Diagram, node: int, rel: ElementRelation) -> ElementRelation:
  """Rewrites a relation ending at target so it ends at the stored representative."""
  stored = g.nodes[node]
  if stored is target:
    return rel
  (iso, *_) = isomorphisms(target, stored, g.iso_max_crossings)
  return rel.compose(iso)


def explore(d0: Diagram, max_crossings: int, max_depth: int, moves: Iterable[MoveKind] | None = None,
            max_nodes: int = 400, iso_max_crossings: int = Config.iso_max_crossings) -> MorphismGraph:
  """Breadth first closure of d0 under Reidemeister moves within the crossing and depth budget."""
  if len(d0.crossings) > max_crossings:
    raise BudgetExceeded(f"diagram has {len(d0.crossings)} crossings, budget is {max_crossings}")
  moves = tuple(MoveKind(m) for m in (DEFAULT_MOVES if moves is None else moves))
  g = MorphismGraph(iso_max_crossings=iso_max_crossings)
  g.add_node(d0, 0)
  queue = deque([0])
  while queue:
    node = queue.popleft()
    if g.depth[node] >= max_depth:
      continue
    d = g.nodes[node]
    for kind in moves:
      for site in find_sites(d, kind):
        target, rel = apply(d, site)
        if len(target.crossings) > max_crossings:
          continue
        k = g.node_of(target)
        if k is None:
          if len(g) >= max_nodes:
            g.truncated = True
            continue
          k = g.add_node(target, g.depth[node] + 1)
          queue.append(k)
        g.add_edge(node, k, kind, _to_node(g, target, k, rel))
    logger.debug("explored node %d at depth %d: %d nodes, %d edges", node, g.depth[node], len(g), len(g.edges))
  return g
