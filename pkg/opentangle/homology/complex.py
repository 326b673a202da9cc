#!/usr/bin/env python3
import logging
from collections import Counter
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from opentangle.algebra.axioms import require_axioms
from opentangle.algebra.biquandloid import Biquandloid
from opentangle.algebra.crossoid import Crossoid, is_unframed, polygon_map
from opentangle.algebra.tribracket import PartialTribracket, Tribracket, full_to_partial
from opentangle.config import Config
from opentangle.errors import RangeError, RecursionUnsolvable, Unsupported
from opentangle.homology.snf import count_full_mod, smith_diagonal, torsion_mod

logger = logging.getLogger(__name__)

Chain = tuple[int, ...]


@dataclass
class ChainComplex:
  """Integer chain complex with labelled bases; boundaries[n] maps degree n to degree n - 1."""
  name: str
  modulus: int
  low: int
  bases: dict[int, list[Chain]]
  boundaries: dict[int, np.ndarray]
  degenerate: dict[int, frozenset[Chain]] = field(default_factory=dict)

  @property
  def top(self) -> int:
    return max(self.bases)

  @cached_property
  def _index(self) -> dict[int, dict[Chain, int]]:
    return {n: {c: k for k, c in enumerate(basis)} for n, basis in self.bases.items()}

  def index(self, n: int, chain: Chain) -> int:
    return self._index[n][tuple(chain)]

  def rank(self, n: int) -> int:
    return len(self.bases[n])

  def boundary(self, n: int, chain: Chain) -> dict[Chain, int]:
    col = self.boundaries[n][:, self.index(n, chain)]
    return {self.bases[n - 1][k]: int(v) for k, v in enumerate(col) if v}

  def square_zero_failures(self) -> list[int]:
    bad = []
    for n in range(self.low + 2, self.top + 1):
      if np.any(self.boundaries[n - 1].dot(self.boundaries[n])):
        bad.append(n)
    return bad

  def is_subcomplex(self, n: int) -> bool:
    """Whether the degenerate chains of degree n bound into degenerate chains."""
    if n - 1 < self.low:
      return True
    lower = self.degenerate.get(n - 1, frozenset())
    for chain in self.degenerate.get(n, ()):
      if any(c not in lower for c in self.boundary(n, chain)):
        return False
    return True

  def quotient(self) -> 'ChainComplex':
    keep = {n: [k for k, c in enumerate(basis) if c not in self.degenerate.get(n, ())] for n, basis in self.bases.items()}
    bases = {n: [self.bases[n][k] for k in ks] for n, ks in keep.items()}
    boundaries = {}
    for n, mat in self.boundaries.items():
      rows = keep.get(n - 1, [])
      boundaries[n] = mat[np.ix_(rows, keep[n])] if rows else np.zeros((0, len(keep[n])), dtype=object)
    return ChainComplex(self.name, self.modulus, self.low, bases, boundaries)

  def triplets(self, n: int) -> dict:
    """Sparse export: row and column labels and the nonzero (row, col, value) entries."""
    mat = self.boundaries[n]
    rows, cols = np.nonzero(mat)
    return {
      "structure": self.name,
      "degree": n,
      "rows": [list(c) for c in self.bases.get(n - 1, [])],
      "cols": [list(c) for c in self.bases[n]],
      "entries": [[int(i), int(j), int(mat[i, j])] for i, j in zip(rows, cols, strict=True)],
    }


@dataclass(frozen=True)
class HomologyGroup:
  degree: int
  rank: int
  torsion: tuple[int, ...] = ()
  modulus: int = 0

  def to_json(self, structure: str = "") -> dict:
    return {"structure": structure, "degree": self.degree, "rank": self.rank, "torsion": list(self.torsion)}

  def __str__(self) -> str:
    base = f"Z_{self.modulus}" if self.modulus else "Z"
    parts = [f"{base}^{self.rank}"] if self.rank else []
    parts += [f"Z_{d}" for d in self.torsion]
    return " + ".join(parts) or "0"


def homology(cc: ChainComplex, n: int) -> HomologyGroup:
  if n < cc.low or n + 1 > cc.top:
    raise RangeError(f"H_{n} of {cc.name} needs degrees {n} and {n + 1}, built {cc.low}..{cc.top}")
  lower = smith_diagonal(cc.boundaries[n])
  upper = smith_diagonal(cc.boundaries[n + 1])
  free = cc.rank(n) - len(lower) - len(upper)
  torsion = [d for d in upper if d > 1]
  if not cc.modulus:
    return HomologyGroup(n, free, tuple(torsion))

  # universal coefficients: H_n ⊗ Z_m plus Tor(H_{n-1}, Z_m)
  m = cc.modulus
  below = [d for d in lower if d > 1]
  full = free + count_full_mod(torsion, m) + count_full_mod(below, m)
  return HomologyGroup(n, full, tuple(torsion_mod(torsion + below, m)), m)


# *** builders ***

def _build(name: str, modulus: int, low: int, n_max: int,
           generators: Callable[[int], Iterable[Chain]],
           boundary: Callable[[int, Chain], Counter],
           degenerate: Callable[[int, Chain], bool]) -> ChainComplex:
  bases = {n: sorted(generators(n)) for n in range(low, n_max + 1)}
  index = {n: {c: k for k, c in enumerate(basis)} for n, basis in bases.items()}
  boundaries = {low: np.zeros((0, len(bases[low])), dtype=object)}
  for n in range(low + 1, n_max + 1):
    mat = np.zeros((len(bases[n - 1]), len(bases[n])), dtype=object)
    for j, chain in enumerate(bases[n]):
      for face, coef in boundary(n, chain).items():
        if coef:
          mat[index[n - 1][face], j] += coef
    boundaries[n] = mat
  degen = {n: frozenset(c for c in bases[n] if degenerate(n, c)) for n in bases}
  cc = ChainComplex(name, modulus, low, bases, boundaries, degen)
  logger.debug("%s: ranks %s", name, {n: len(b) for n, b in bases.items()})
  assert not cc.square_zero_failures(), f"{name}: boundary squares to nonzero in degrees {cc.square_zero_failures()}"
  return cc


def _check_degree(n_max: int, low: int, max_degree: int):
  if n_max < low + 1:
    raise RangeError(f"complex needs at least degree {low + 1}, got {n_max}")
  if n_max > max_degree:
    raise RangeError(f"degree {n_max} exceeds the configured bound {max_degree}")


# tribracket

def _solve(t: PartialTribracket, p: int, q: int, r: int) -> int:
  """The c with [p, q, c] = r."""
  sols = [c for c in range(t.n) if t.op(p, q, c) == r]
  if len(sols) != 1:
    raise RecursionUnsolvable(f"[{p}, {q}, c] = {r} has {len(sols)} solutions")
  return sols[0]


def tribracket_boundary(t: PartialTribracket, a: Chain) -> Counter:
  n = len(a) - 1
  out: Counter = Counter()
  if n == 1:
    out[(a[1],)] += 1
    out[(a[0],)] -= 1
    return out

  for i in range(1, n + 1):
    y: dict[int, int] = {}
    if i >= 2:
      y[i - 1] = _solve(t, a[i - 2], a[i - 1], a[i])
      for j in range(i - 2, 0, -1):
        y[j] = _solve(t, a[j - 1], a[j], y[j + 1])
    if i <= n - 1:
      y[i] = _solve(t, a[i - 1], a[i], a[i + 1])
      for j in range(i + 1, n):
        y[j] = _solve(t, y[j - 1], a[j], a[j + 1])
    sign = -1 if i % 2 else 1
    out[a[:i] + tuple(y[j] for j in range(i, n))] += sign
    out[tuple(y[j] for j in range(1, i)) + a[i:]] -= sign
  return out


def _up_chains(t: PartialTribracket, length: int) -> list[Chain]:
  chains = [(a,) for a in range(t.n)]
  for _ in range(length - 1):
    chains = [c + (x,) for c in chains for x in range(t.n) if t.is_up(x, c[-1])]
  return chains


def tribracket_complex(t: PartialTribracket | Tribracket, n_max: int, m: int = 0, normalized: bool = True,
                       max_degree: int = Config.max_degree) -> ChainComplex:
  """Chains (a0, ..., an) with an↑...↑a0, degenerate when [a(i-1), ai, ai] = a(i+1) for some i."""
  _check_degree(n_max, 0, max_degree)
  require_axioms(t)
  if isinstance(t, Tribracket):
    t = full_to_partial(t)

  def degenerate(n, a):
    return any(t.op(a[i - 1], a[i], a[i]) == a[i + 1] for i in range(1, n))

  cc = _build(f"tribracket {t.name}".strip(), m, 0, n_max,
              lambda n: _up_chains(t, n + 1), lambda n, a: tribracket_boundary(t, a), degenerate)
  return cc.quotient() if normalized else cc


# biquandloid

def biquandloid_boundary(b: Biquandloid, a: Chain) -> Counter:
  n = len(a)
  out: Counter = Counter()
  if n == 1:
    out[(b.sigma_r[a[0]],)] += 1
    out[(b.sigma_l[a[0]],)] -= 1
    return out

  for i in range(n):
    sign = -1 if i % 2 == 0 else 1
    pivot = a[i]
    out[a[:i] + a[i + 1:]] += sign
    acted = tuple(b.uast[x][pivot] for x in a[:i]) + tuple(b.oast[x][pivot] for x in a[i + 1:])
    out[acted] -= sign
  return out


def _fibre_chains(b: Biquandloid, n: int) -> list[Chain]:
  if n == 0:
    return [(r,) for r in range(b.r)]
  chains = []
  for r in range(b.r):
    fibre = b.fibre(r)
    level = [(x,) for x in fibre]
    for _ in range(n - 1):
      level = [c + (x,) for c in level for x in fibre]
    chains += level
  return chains


def biquandloid_complex(b: Biquandloid, n_max: int, m: int = 0, normalized: bool = True,
                        max_degree: int = Config.max_degree) -> ChainComplex:
  """Chains of σ_r-constant tuples over C_0 = R, degenerate when two neighbours agree."""
  _check_degree(n_max, 0, max_degree)
  require_axioms(b)

  def degenerate(n, a):
    return n >= 2 and any(a[i] == a[i + 1] for i in range(n - 1))

  cc = _build(f"biquandloid {b.name}".strip(), m, 0, n_max,
              lambda n: _fibre_chains(b, n), lambda n, a: biquandloid_boundary(b, a), degenerate)
  return cc.quotient() if normalized else cc


# crossoid

class _CrossoidFaces:
  """Triangle composites of the crossoid differential on positive crossing colors."""

  def __init__(self, x: Crossoid):
    self.x = x

  def _iota(self, c: int) -> int:
    return self.x.apply("i_s", c)

  def merge(self, c1: int, c2: int) -> int:
    """The crossing replacing c2, c1 when their shared arc is removed."""
    return self._iota(polygon_map(self.x, (-1, 1, 1), "lll", (c1, c2)))

  def act(self, c1: int, c2: int) -> int:
    return polygon_map(self.x, (1, 1, 1), "lrl", (c1, c2))

  def left(self, c: int, along: int) -> int:
    return self._iota(polygon_map(self.x, (-1, 1, 1), "lrr", (self.act(c, along), along)))

  def right(self, c: int, along: int) -> int:
    return self._iota(polygon_map(self.x, (-1, 1, 1), "rrl", (along, self.act(along, c))))


def crossoid_boundary(x: Crossoid, cs: Chain, faces: _CrossoidFaces | None = None) -> Counter:
  """Boundary of a chain of positive crossings c1, ..., c(n-1) in degree n."""
  m = len(cs)
  n = m + 1
  out: Counter = Counter()
  if m == 1:
    (c,) = cs
    for corner, sign in (("ul", 1), ("ur", 1), ("dl", -1), ("dr", -1)):
      out[(x.corner(c, corner),)] += sign
    return out

  f = faces or _CrossoidFaces(x)
  c = (None,) + tuple(cs)

  out[cs[1:]] += 1
  out[cs[:-1]] += (-1) ** m
  for i in range(2, n):
    out[cs[:i - 2] + (f.merge(c[i], c[i - 1]),) + cs[i:]] += (-1) ** (i - 1)

  for i in range(1, n + 1):
    xs: dict[int, int] = {}
    if i - 2 >= 1:
      xs[i - 2] = c[i - 1]
      for k in range(i - 3, 0, -1):
        xs[k] = f.merge(xs[k + 1], c[k + 1])
    if i + 1 <= m:
      xs[i + 1] = c[i]
      for k in range(i + 2, m + 1):
        xs[k] = f.merge(c[k - 1], xs[k - 1])
    mid = (f.act(c[i - 1], c[i]),) if 2 <= i <= m else ()
    head = tuple(f.left(c[k], xs[k]) for k in range(1, i - 1))
    tail = tuple(f.right(c[k], xs[k]) for k in range(i + 1, m + 1))
    out[head + mid + tail] += (-1) ** i
  return out


def _crossing_chains(x: Crossoid, length: int) -> list[Chain]:
  chains = [(c,) for c in x.positive]
  for _ in range(length - 1):
    chains = [ch + (c,) for ch in chains for c in x.positive if x.corner(c, "dr") == x.corner(ch[-1], "ur")]
  return chains


def loop_crossings(x: Crossoid) -> frozenset[int]:
  """Positive crossing colors of monogons."""
  return frozenset(polygon_map(x, (1,), (o,), (a,)) for a in range(x.a) for o in ("r", "l"))


def crossoid_complex(x: Crossoid, n_max: int, m: int = 0, normalized: bool = True,
                     max_degree: int = Config.max_degree) -> ChainComplex:
  """C_1 = A and C_n spanned by chains of n - 1 positive crossings with A_ur(ci) = A_dr(ci+1)."""
  _check_degree(n_max, 1, max_degree)
  require_axioms(x)
  if not is_unframed(x):
    raise Unsupported(f"crossoid {x.name!r} is framed, homology needs i_s = i_w")
  faces = _CrossoidFaces(x)
  loops = loop_crossings(x)

  def generators(n):
    return [(a,) for a in range(x.a)] if n == 1 else _crossing_chains(x, n - 1)

  def degenerate(n, cs):
    return n >= 2 and any(c in loops for c in cs)

  cc = _build(f"crossoid {x.name}".strip(), m, 1, n_max, generators,
              lambda n, cs: crossoid_boundary(x, cs, faces), degenerate)
  return cc.quotient() if normalized else cc


def build_complex(alg, n_max: int, m: int = 0, normalized: bool = True, max_degree: int = Config.max_degree) -> ChainComplex:
  if isinstance(alg, Tribracket | PartialTribracket):
    return tribracket_complex(alg, n_max, m, normalized, max_degree)
  if isinstance(alg, Biquandloid):
    return biquandloid_complex(alg, n_max, m, normalized, max_degree)
  if isinstance(alg, Crossoid):
    return crossoid_complex(alg, n_max, m, normalized, max_degree)
  raise Unsupported(f"no chain complex for {alg.kind}")
