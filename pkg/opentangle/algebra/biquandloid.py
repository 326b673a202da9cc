#!/usr/bin/env python3
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar

from opentangle.algebra.base import FiniteAlgebra, Table, freeze
from opentangle.algebra.quandle import Quandle
from opentangle.algebra.tribracket import PartialTribracket, Tribracket, full_to_partial


@dataclass(frozen=True)
class Biquandloid(FiniteAlgebra):
  """Semiarc colors B fibred over region colors R by the shadow maps.

  uast[a][b] = a∗b and oast[a][b] = a⊛b are defined exactly when sigma_r[a] == sigma_r[b].
  """
  r: int
  sigma_l: tuple[int, ...]
  sigma_r: tuple[int, ...]
  uast: Table
  oast: Table
  kind: ClassVar[str] = "biquandloid"

  @property
  def n(self) -> int:
    return len(self.sigma_l)

  @property
  def size(self) -> int:
    return self.n

  def compatible(self, a: int, b: int) -> bool:
    return self.sigma_r[a] == self.sigma_r[b]

  @cached_property
  def pairs(self) -> tuple[tuple[int, int], ...]:
    """B ×_R B in lexicographic order."""
    return tuple((a, b) for a in range(self.n) for b in range(self.n) if self.compatible(a, b))

  def fibre(self, x: int) -> list[int]:
    return [a for a in range(self.n) if self.sigma_r[a] == x]

  @cached_property
  def _left_solutions(self) -> dict[tuple[str, int, int], list[int]]:
    sols: dict[tuple[str, int, int], list[int]] = {}
    for a, b in self.pairs:
      sols.setdefault(("u", self.uast[a][b], b), []).append(a)
      sols.setdefault(("o", self.oast[a][b], b), []).append(a)
    return sols

  def u_left(self, c: int, b: int) -> int | None:
    """The a with a∗b = c."""
    sols = self._left_solutions.get(("u", c, b), [])
    return sols[0] if len(sols) == 1 else None

  def o_left(self, c: int, b: int) -> int | None:
    """The a with a⊛b = c."""
    sols = self._left_solutions.get(("o", c, b), [])
    return sols[0] if len(sols) == 1 else None


def biquandle_double(q: Quandle) -> Biquandloid:
  """B = X × Z_2 indexed x + n ε over R = Z_2."""
  n = q.n
  sigma_r = tuple(k // n for k in range(2 * n))
  sigma_l = tuple((k // n + 1) % 2 for k in range(2 * n))
  uast = [[None] * (2 * n) for _ in range(2 * n)]
  oast = [[None] * (2 * n) for _ in range(2 * n)]
  for eps in (0, 1):
    nxt = (eps + 1) % 2
    for x in range(n):
      for y in range(n):
        uast[x + n * eps][y + n * eps] = q.op(x, y) + n * nxt
        oast[x + n * eps][y + n * eps] = x + n * nxt
  return Biquandloid(2, sigma_l, sigma_r, freeze(uast), freeze(oast), name=f"double_{q.name}" if q.name else "")


def tribracket_biquandloid(t: PartialTribracket | Tribracket) -> Biquandloid:
  """B = {(x, y): x↑y} in lexicographic order over R = X."""
  if isinstance(t, Tribracket):
    t = full_to_partial(t)
  elems = [(x, y) for x in range(t.n) for y in range(t.n) if t.is_up(x, y)]
  index = {p: k for k, p in enumerate(elems)}
  size = len(elems)
  uast = [[None] * size for _ in range(size)]
  oast = [[None] * size for _ in range(size)]
  for i, (x, y) in enumerate(elems):
    for j, (z, w) in enumerate(elems):
      if w != y:
        continue
      uast[i][j] = index.get((t.op(y, x, z), z))
      oast[i][j] = index.get((t.op(y, z, x), z))
  return Biquandloid(t.n, tuple(x for x, _ in elems), tuple(y for _, y in elems), freeze(uast), freeze(oast),
                     name=f"pairs_{t.name}" if t.name else "")


def associated_quandle(b: Biquandloid, x: int) -> Quandle:
  """Quandle on the fibre over x with u◁v = (u∗v)⊛^-1 v, elements numbered in index order."""
  fibre = b.fibre(x)
  index = {a: k for k, a in enumerate(fibre)}
  table = [[index.get(b.o_left(b.uast[u][v], v)) for v in fibre] for u in fibre]
  return Quandle(freeze(table), name=f"{b.name}_{x}" if b.name else "")
