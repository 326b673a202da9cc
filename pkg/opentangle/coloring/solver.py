#!/usr/bin/env python3
"""Backtracking over finite domains with forward checking.

Each step picks the unassigned variable with the fewest values consistent with the constraints
that would become fully assigned, so functional coloring rules propagate one variable at a time.
"""
import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Constraint:
  scope: tuple[int, ...]
  check: Callable[..., bool]
  label: str = ""


class Problem:
  def __init__(self, domains: Sequence[Sequence[int]]):
    self.domains = [list(d) for d in domains]
    self.constraints: list[Constraint] = []
    self.watch: list[list[Constraint]] = [[] for _ in self.domains]

  def add(self, scope: Sequence[int], check: Callable[..., bool], label: str = ""):
    c = Constraint(tuple(scope), check, label)
    self.constraints.append(c)
    for v in set(c.scope):
      self.watch[v].append(c)

  def restrict(self, var: int, allowed: Callable[[int], bool]):
    self.domains[var] = [x for x in self.domains[var] if allowed(x)]

  def solutions(self, fixed: dict[int, int] | None = None) -> Iterator[tuple[int, ...]]:
    """Every complete consistent assignment, extending fixed when given."""
    n = len(self.domains)
    values: list[int | None] = [None] * n
    stats = {"nodes": 0}

    def consistent(var: int, x: int) -> bool:
      values[var] = x
      try:
        for c in self.watch[var]:
          args = [values[v] for v in c.scope]
          if None not in args and not c.check(*args):
            return False
        return True
      finally:
        values[var] = None

    def candidates(var: int) -> list[int]:
      ready = any(sum(values[v] is None for v in c.scope if v != var) == 0 for c in self.watch[var])
      if not ready:
        return self.domains[var]
      return [x for x in self.domains[var] if consistent(var, x)]

    def search(remaining: int) -> Iterator[tuple[int, ...]]:
      stats["nodes"] += 1
      if remaining == 0:
        yield tuple(values)
        return
      best, best_vals = None, None
      for v in range(n):
        if values[v] is not None:
          continue
        vals = candidates(v)
        if best is None or len(vals) < len(best_vals):
          best, best_vals = v, vals
          if len(vals) <= 1:
            break
      for x in best_vals:
        values[best] = x
        yield from search(remaining - 1)
      values[best] = None

    fixed = fixed or {}
    for var, x in sorted(fixed.items()):
      if x not in self.domains[var] or not consistent(var, x):
        return
      values[var] = x
    yield from search(n - len(fixed))
    logger.debug("search visited %d nodes over %d variables", stats["nodes"], n)

  def count(self, fixed: dict[int, int] | None = None) -> int:
    return sum(1 for _ in self.solutions(fixed))
