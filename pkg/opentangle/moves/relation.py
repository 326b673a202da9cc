#!/usr/bin/env python3
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from opentangle.diagram.diagram import FUNCTORS, Diagram, FunctorKind

Pairs = frozenset[tuple[int, int]]


@dataclass(frozen=True)
class ElementRelation:
  """Relations, one per functor, between the elements of a source and a target diagram."""
  source_sizes: Mapping[FunctorKind, int]
  target_sizes: Mapping[FunctorKind, int]
  pairs: Mapping[FunctorKind, Pairs] = field(default_factory=dict)

  def __getitem__(self, kind) -> Pairs:
    return self.pairs.get(FunctorKind(kind), frozenset())

  def image(self, kind, x: int) -> frozenset[int]:
    return frozenset(y for a, y in self[kind] if a == x)

  def transpose(self) -> 'ElementRelation':
    return ElementRelation(self.target_sizes, self.source_sizes,
                           {k: frozenset((y, x) for x, y in v) for k, v in self.pairs.items()})

  def compose(self, other: 'ElementRelation') -> 'ElementRelation':
    """This relation followed by other."""
    if dict(self.target_sizes) != dict(other.source_sizes):
      raise ValueError("relation shapes do not match")
    pairs = {}
    for k in FUNCTORS:
      forward: dict[int, set[int]] = {}
      for y, z in other[k]:
        forward.setdefault(y, set()).add(z)
      pairs[k] = frozenset((x, z) for x, y in self[k] for z in forward.get(y, ()))
    return ElementRelation(self.source_sizes, other.target_sizes, pairs)

  def is_bijection(self, kind) -> bool:
    pairs = self[kind]
    k = FunctorKind(kind)
    xs = [x for x, _ in pairs]
    ys = [y for _, y in pairs]
    return (len(set(xs)) == len(xs) == self.source_sizes[k] and len(set(ys)) == len(ys) == self.target_sizes[k])

  @classmethod
  def identity(cls, d: Diagram) -> 'ElementRelation':
    sizes = sizes_of(d)
    return cls(sizes, sizes, {k: frozenset((x, x) for x in range(n)) for k, n in sizes.items()})


def sizes_of(d: Diagram) -> dict[FunctorKind, int]:
  return {k: d.size(k) for k in FUNCTORS}


def derive_relation(src: Diagram, dst: Diagram, semiarc_pairs: Iterable[tuple[int, int]],
                    crossing_pairs: Iterable[tuple[int, int]], *,
                    region_semiarc_pairs: Iterable[tuple[int, int]] | None = None,
                    extra_regions: Iterable[tuple[int, int]] = (),
                    midcrossing_pairs: Iterable[tuple[int, int]] = (),
                    trait_pairs: Iterable[tuple[int, int]] = ()) -> ElementRelation:
  """Builds all six relations from the semiarc and crossing correspondences of a morphism.

  Arcs follow their semiarcs; regions follow the sides of corresponding semiarcs. Crossing
  survival widens from C to MC to T.
  """
  sa = frozenset(semiarc_pairs)
  rsa = sa if region_semiarc_pairs is None else frozenset(region_semiarc_pairs)
  arcs = frozenset((src.arc_of[x], dst.arc_of[y]) for x, y in sa)
  regions = set(extra_regions)
  for x, y in rsa:
    regions.add((src.region_left(x), dst.region_left(y)))
    regions.add((src.region_right(x), dst.region_right(y)))
  c = frozenset(crossing_pairs)
  mc = c | frozenset(midcrossing_pairs)
  t = mc | frozenset(trait_pairs)
  pairs = {
    FunctorKind.A: arcs,
    FunctorKind.SA: sa,
    FunctorKind.R: frozenset(regions),
    FunctorKind.C: c,
    FunctorKind.MC: mc,
    FunctorKind.T: t,
  }
  return ElementRelation(sizes_of(src), sizes_of(dst), pairs)
