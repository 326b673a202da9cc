#!/usr/bin/env python3
from dataclasses import dataclass, field
from typing import ClassVar

Table = tuple[tuple[int | None, ...], ...]


@dataclass(frozen=True)
class Cocycle:
  """Coefficient function on tuples of structure elements; missing tuples are 0.

  modulus 0 means integer coefficients.
  """
  modulus: int
  values: dict[tuple[int, ...], int] = field(default_factory=dict, hash=False)

  def __call__(self, *key: int) -> int:
    return self.reduce(self.values.get(tuple(key), 0))

  def reduce(self, x: int) -> int:
    return x % self.modulus if self.modulus else x

  @classmethod
  def zero(cls, modulus: int = 0) -> 'Cocycle':
    return cls(modulus, {})


@dataclass(frozen=True, kw_only=True)
class FiniteAlgebra:
  kind: ClassVar[str] = ""
  name: str = field(default="", compare=False)
  comment: str = field(default="", compare=False)
  cocycles: dict[str, Cocycle] = field(default_factory=dict, compare=False, hash=False)

  @property
  def size(self) -> int:
    raise NotImplementedError

  def cocycle(self, name: str) -> Cocycle:
    if name not in self.cocycles:
      raise KeyError(f"{self.kind} {self.name!r} has no cocycle {name!r}")
    return self.cocycles[name]


def freeze(rows) -> Table:
  return tuple(tuple(r) for r in rows)
