#!/usr/bin/env python3
import itertools
import logging
from dataclasses import dataclass

import numpy as np

from opentangle.algebra.axioms import require_axioms
from opentangle.algebra.base import Cocycle, FiniteAlgebra
from opentangle.algebra.biquandloid import Biquandloid
from opentangle.algebra.crossoid import Crossoid, i_map, polygon_map
from opentangle.algebra.quandle import Quandle
from opentangle.algebra.tribracket import PartialTribracket, Tribracket
from opentangle.config import Config
from opentangle.errors import Incompatible, Unsupported
from opentangle.homology.complex import Chain, ChainComplex, build_complex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CocycleReport:
  kind: str
  degree: int
  ok: bool
  witness: tuple = ()
  detail: str = ""

  def to_json(self) -> dict:
    return {"kind": self.kind, "degree": self.degree, "ok": self.ok, "witness": list(self.witness), "detail": self.detail}


def cocycle_vector(cc: ChainComplex, theta: Cocycle, n: int) -> np.ndarray:
  """θ as a row vector on the degree-n basis."""
  return np.array([theta(*c) for c in cc.bases[n]], dtype=object)


def coboundary_check(cc: ChainComplex, theta: Cocycle, n: int) -> Chain | None:
  """First chain of degree n + 1 on which θ∘∂ does not vanish, None for a cocycle."""
  v = cocycle_vector(cc, theta, n).dot(cc.boundaries[n + 1]) if cc.rank(n) else np.zeros(cc.rank(n + 1), dtype=object)
  for k, value in enumerate(v):
    if theta.reduce(value):
      return cc.bases[n + 1][k]
  return None


def _complex_check(alg: FiniteAlgebra, theta: Cocycle, degree: int) -> CocycleReport:
  full = build_complex(alg, degree + 1, theta.modulus, normalized=False, max_degree=max(Config.max_degree, degree + 1))
  for chain in sorted(full.degenerate.get(degree, ())):
    if theta(*chain):
      return CocycleReport(alg.kind, degree, False, chain, "nonzero on a degenerate chain")
  bad = coboundary_check(full.quotient(), theta, degree)
  if bad is not None:
    return CocycleReport(alg.kind, degree, False, bad, "coboundary does not vanish")
  return CocycleReport(alg.kind, degree, True)


def _quandle_check(q: Quandle, theta: Cocycle) -> CocycleReport:
  for x in range(q.n):
    if theta(x, x):
      return CocycleReport(q.kind, 2, False, (x, x), "θ(x, x) must vanish")
  op = q.op
  for x, y, z in itertools.product(range(q.n), repeat=3):
    if theta.reduce(theta(x, y) + theta(op(x, y), z) - theta(x, z) - theta(op(x, z), op(y, z))):
      return CocycleReport(q.kind, 2, False, (x, y, z), "θ(x,y) + θ(x∗y,z) = θ(x,z) + θ(x∗z,y∗z)")
  return CocycleReport(q.kind, 2, True)


def _crossoid_check(x: Crossoid, phi: Cocycle) -> CocycleReport:
  def fail(witness, detail):
    return CocycleReport(x.kind, 2, False, tuple(witness), detail)

  for a, eps, o in itertools.product(range(x.a), (1, -1), ("r", "l")):
    loop = polygon_map(x, (eps,), (o,), (a,))
    if phi(loop):
      return fail(("loop", eps, o, a), "φ must vanish on monogon crossings")

  for c, o, o2 in itertools.product(range(x.n), ("r", "l"), ("r", "l")):
    if phi.reduce(phi(x.apply(i_map(o, o2), c)) - phi(c)):
      return fail(("bigon", o + o2, c), "φ must be invariant under the bigon maps")

  pos = x.positive
  for o, y, z in itertools.product(("r", "l"), pos, pos):
    if x.a_out(y, o, o) != x.a_in(z, o, o):
      continue
    ob = "l" if o == "r" else "r"
    try:
      xx = polygon_map(x, (-1, 1, 1), o * 3, (y, z))
      x1 = polygon_map(x, (-1, 1), o * 2, (polygon_map(x, (1, 1, 1), o + ob + o, (z, y)),))
      y1 = polygon_map(x, (1, -1), o * 2, (polygon_map(x, (-1, -1, 1), o + ob + o, (xx, z)),))
      z1 = polygon_map(x, (1, -1), o * 2, (polygon_map(x, (-1, 1, -1), o + ob + o, (y, xx)),))
    except Incompatible as e:
      return fail(("omega3", o, y, z), f"triangle maps undefined: {e}")
    if phi.reduce(-phi(xx) + phi(y) + phi(z) + phi(x1) - phi(y1) - phi(z1)):
      return fail(("omega3", o, y, z), "-φ(x)+φ(y)+φ(z) = -φ(x')+φ(y')+φ(z')")
  return CocycleReport(x.kind, 2, True)


def check_cocycle(alg: FiniteAlgebra, theta: Cocycle, degree: int | None = None) -> CocycleReport:
  """Cocycle test for a coefficient function on the given algebra.

  Tribracket and biquandloid cochains are checked against the normalized complex: θ must vanish
  on degenerate chains and θ∘∂ must vanish. Quandle 2-cocycles and crossoid cocycles are checked
  by their defining identities.
  """
  require_axioms(alg)
  if isinstance(alg, Tribracket | PartialTribracket | Biquandloid):
    report = _complex_check(alg, theta, 2 if degree is None else degree)
  elif degree not in (None, 2):
    raise Unsupported(f"{alg.kind} cocycles are checked in degree 2 only")
  elif isinstance(alg, Quandle):
    report = _quandle_check(alg, theta)
  elif isinstance(alg, Crossoid):
    report = _crossoid_check(alg, theta)
  else:
    raise Unsupported(f"no cocycle check for {alg.kind}")
  logger.debug("cocycle check on %s %r: %s", alg.kind, alg.name, "pass" if report.ok else f"fail at {report.witness}")
  return report
