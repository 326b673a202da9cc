#!/usr/bin/env python3
import math
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar

from opentangle.algebra.base import FiniteAlgebra, Table, freeze
from opentangle.errors import NonUnit


@dataclass(frozen=True)
class Quandle(FiniteAlgebra):
  """table[x][y] = x * y."""
  table: Table
  kind: ClassVar[str] = "quandle"

  @property
  def n(self) -> int:
    return len(self.table)

  @property
  def size(self) -> int:
    return self.n

  def op(self, x: int, y: int) -> int:
    return self.table[x][y]

  @cached_property
  def inverse_table(self) -> Table:
    """inverse_table[z][y] = x with x * y = z, None where the column is not a permutation."""
    inv = [[None] * self.n for _ in range(self.n)]
    for x in range(self.n):
      for y in range(self.n):
        inv[self.table[x][y]][y] = x
    return freeze(inv)

  def inv(self, z: int, y: int) -> int | None:
    return self.inverse_table[z][y]


def check_unit(t: int, m: int, what: str = "t"):
  if math.gcd(t, m) != 1:
    raise NonUnit(f"{what} = {t} is not invertible mod {m}")


def alexander_quandle(m: int, t: int) -> Quandle:
  """x * y = t x + (1 - t) y on Z_m."""
  check_unit(t, m)
  table = [[(t * x + (1 - t) * y) % m for y in range(m)] for x in range(m)]
  return Quandle(freeze(table), name=f"alexander_{m}_{t}")


def quandle_from_group(g, name: str = "") -> Quandle:
  """Conjugation quandle x * y = y^-1 x y."""
  table = [[g.mul(g.mul(g.inv(y), x), y) for y in range(g.n)] for x in range(g.n)]
  return Quandle(freeze(table), name=name)
