#!/usr/bin/env python3
import itertools
from dataclasses import dataclass
from functools import cached_property

from opentangle.algebra.base import Table, freeze


@dataclass(frozen=True)
class FiniteGroup:
  """Multiplication table of a finite group, table[g][h] = gh."""
  table: Table
  labels: tuple[str, ...] = ()

  @property
  def n(self) -> int:
    return len(self.table)

  def mul(self, g: int, h: int) -> int:
    return self.table[g][h]

  @cached_property
  def identity(self) -> int:
    return next(e for e in range(self.n) if all(self.table[e][g] == g for g in range(self.n)))

  @cached_property
  def inverses(self) -> tuple[int, ...]:
    e = self.identity
    return tuple(next(h for h in range(self.n) if self.table[g][h] == e) for g in range(self.n))

  def inv(self, g: int) -> int:
    return self.inverses[g]

  def power(self, g: int, k: int) -> int:
    base = g if k >= 0 else self.inv(g)
    out = self.identity
    for _ in range(abs(k)):
      out = self.mul(out, base)
    return out

  def product(self, elements) -> int:
    out = self.identity
    for g in elements:
      out = self.mul(out, g)
    return out


def cyclic_group(n: int) -> FiniteGroup:
  return FiniteGroup(freeze([(g + h) % n for h in range(n)] for g in range(n)), tuple(str(g) for g in range(n)))


def symmetric_group(k: int) -> FiniteGroup:
  """Permutations of range(k) in lexicographic order, composed as (pq)(i) = p(q(i))."""
  perms = list(itertools.permutations(range(k)))
  index = {p: i for i, p in enumerate(perms)}
  table = [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
  return FiniteGroup(freeze(table), tuple("".join(map(str, p)) for p in perms))
