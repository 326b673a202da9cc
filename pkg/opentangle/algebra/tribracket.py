#!/usr/bin/env python3
import itertools
from dataclasses import dataclass
from typing import ClassVar

from opentangle.algebra.base import FiniteAlgebra, Table, freeze
from opentangle.algebra.groups import FiniteGroup, cyclic_group
from opentangle.algebra.quandle import check_unit
from opentangle.errors import ClosureViolation


@dataclass(frozen=True)
class Tribracket(FiniteAlgebra):
  """Horizontal ternary quasigroup, tensor[a][b][c] = [a, b, c]."""
  tensor: tuple[Table, ...]
  kind: ClassVar[str] = "tribracket"

  @property
  def n(self) -> int:
    return len(self.tensor)

  @property
  def size(self) -> int:
    return self.n

  def op(self, a: int, b: int, c: int) -> int:
    return self.tensor[a][b][c]

  def is_up(self, a: int, b: int) -> bool:
    return True


@dataclass(frozen=True)
class PartialTribracket(FiniteAlgebra):
  """Partial ternary quasigroup: up[a][b] is a↑b, tensor[a][b][c] is None unless b↑a and c↑a."""
  up: tuple[tuple[bool, ...], ...]
  tensor: tuple[Table, ...]
  kind: ClassVar[str] = "partial_tribracket"

  @property
  def n(self) -> int:
    return len(self.tensor)

  @property
  def size(self) -> int:
    return self.n

  def op(self, a: int, b: int, c: int) -> int | None:
    return self.tensor[a][b][c]

  def is_up(self, a: int, b: int) -> bool:
    return self.up[a][b]

  def up_from(self, a: int) -> list[int]:
    """All x with x↑a."""
    return [x for x in range(self.n) if self.up[x][a]]


def _build(n: int, f) -> tuple[Table, ...]:
  return tuple(freeze([f(a, b, c) for c in range(n)] for b in range(n)) for a in range(n))


def dehn_tribracket(g: FiniteGroup, name: str = "") -> Tribracket:
  """[a, b, c] = c a^-1 b."""
  return Tribracket(_build(g.n, lambda a, b, c: g.product((c, g.inv(a), b))), name=name or f"dehn_{g.n}")


def alexander_tribracket(m: int, t: int, s: int) -> Tribracket:
  """[a, b, c] = t b + s c - t s a on Z_m."""
  check_unit(t, m, "t")
  check_unit(s, m, "s")
  return Tribracket(_build(m, lambda a, b, c: (t * b + s * c - t * s * a) % m), name=f"alexander_{m}_{t}_{s}")


def full_to_partial(t: Tribracket) -> PartialTribracket:
  up = freeze([True] * t.n for _ in range(t.n))
  return PartialTribracket(up, t.tensor, name=t.name, comment=t.comment, cocycles=dict(t.cocycles))


def dehn_partial(g: FiniteGroup, h: set[int] | frozenset[int], name: str = "") -> PartialTribracket:
  """a↑b iff b^-1 a lies in h, with [a, b, c] = b a^-1 c on the ↑-compatible triples."""
  h = frozenset(h)
  for x, y in itertools.product(sorted(h), repeat=2):
    conj = g.product((g.inv(x), y, x))
    if conj not in h:
      raise ClosureViolation(f"conjugate of {y} by {x} is {conj}, outside the subset {sorted(h)}")
  up = freeze([g.mul(g.inv(b), a) in h for b in range(g.n)] for a in range(g.n))

  def op(a, b, c):
    if up[b][a] and up[c][a]:
      return g.product((b, g.inv(a), c))
    return None

  return PartialTribracket(up, _build(g.n, op), name=name or f"dehn_partial_{g.n}")


def alexander_numbering_tribracket(m: int) -> PartialTribracket:
  """Z_m with a↑b iff b = a - 1 and [a, b, c] = a + 2."""
  up = freeze([b == (a - 1) % m for b in range(m)] for a in range(m))

  def op(a, b, c):
    return (a + 2) % m if up[b][a] and up[c][a] else None

  return PartialTribracket(up, _build(m, op), name=f"numbering_{m}")


def z2_tribracket() -> Tribracket:
  return dehn_tribracket(cyclic_group(2), name="dehn_2")
