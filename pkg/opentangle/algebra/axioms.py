#!/usr/bin/env python3
"""Exhaustive axiom checks for the finite coloring structures.

Every check walks its tuples in lexicographic order and keeps the first witness per axiom.
Axiom ids:
  quandle             Q1 idempotence, Q2 right invertibility, Q3 self-distributivity
  tribracket          T1 unique solvability, T2 compatibility identity
  partial_tribracket  P0 domain, P1 ↑ of the result, P2-P4 unique solvability, P5 compatibility
  biquandloid         B0 domain, B1 shadows, B2 one-sided solvability, B3 joint solvability,
                      B4 a∗a = a⊛a, B5 exchange laws
  crossoid            domain, sign, incidence, omega1, omega2, rotation, omega3, flip
"""
import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field

from opentangle.algebra.base import FiniteAlgebra
from opentangle.algebra.biquandloid import Biquandloid
from opentangle.algebra.crossoid import BIGON_MAPS, IN_CORNER, INCIDENCES, LOOP_MAPS, TRIANGLE_KEYS, Crossoid, i_map
from opentangle.algebra.quandle import Quandle
from opentangle.algebra.tribracket import PartialTribracket, Tribracket
from opentangle.errors import AxiomsNotVerified

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
  axiom: str
  witness: tuple
  detail: str = ""

  def to_json(self) -> dict:
    return {"axiom": self.axiom, "witness": list(self.witness), "detail": self.detail}


@dataclass
class AxiomReport:
  kind: str
  name: str = ""
  checked: list[str] = field(default_factory=list)
  violations: list[Violation] = field(default_factory=list)

  @property
  def ok(self) -> bool:
    return not self.violations

  def failed(self, axiom: str) -> bool:
    return any(v.axiom == axiom for v in self.violations)

  def expect(self, axiom: str, cond: bool, witness: tuple, detail: str = "") -> bool:
    if axiom not in self.checked:
      self.checked.append(axiom)
    if not cond and not self.failed(axiom):
      self.violations.append(Violation(axiom, tuple(witness), detail))
    return cond

  def to_json(self) -> dict:
    return {
      "kind": self.kind,
      "name": self.name,
      "ok": self.ok,
      "checked": self.checked,
      "violations": [v.to_json() for v in self.violations],
    }


def check_axioms(alg: FiniteAlgebra) -> AxiomReport:
  report = AxiomReport(alg.kind, alg.name)
  if isinstance(alg, Quandle):
    _check_quandle(alg, report)
  elif isinstance(alg, Tribracket):
    _check_tribracket(alg, report)
  elif isinstance(alg, PartialTribracket):
    _check_partial(alg, report)
  elif isinstance(alg, Biquandloid):
    _check_biquandloid(alg, report)
  elif isinstance(alg, Crossoid):
    _check_crossoid(alg, report)
  else:
    raise TypeError(f"no axioms known for {type(alg).__name__}")
  logger.debug("checked %s %r: %d violations", alg.kind, alg.name, len(report.violations))
  return report


def require_axioms(alg: FiniteAlgebra) -> AxiomReport:
  report = check_axioms(alg)
  if not report.ok:
    v = report.violations[0]
    raise AxiomsNotVerified(f"{alg.kind} {alg.name!r} violates {v.axiom} at {v.witness}")
  return report


def _in_range(x, n) -> bool:
  return x is not None and 0 <= x < n


# *** quandle ***

def _check_quandle(q: Quandle, r: AxiomReport):
  n = q.n
  for x, y in itertools.product(range(n), repeat=2):
    if not r.expect("Q0", _in_range(q.op(x, y), n), (x, y), "entry out of range"):
      return
  for x in range(n):
    r.expect("Q1", q.op(x, x) == x, (x,))
  for y in range(n):
    column = [q.op(x, y) for x in range(n)]
    r.expect("Q2", len(set(column)) == n, (y,), "column is not a permutation")
  for x, y, z in itertools.product(range(n), repeat=3):
    r.expect("Q3", q.op(q.op(x, y), z) == q.op(q.op(x, z), q.op(y, z)), (x, y, z))


# *** tribrackets ***

def _check_tribracket(t: Tribracket, r: AxiomReport):
  n = t.n
  for a, b, c in itertools.product(range(n), repeat=3):
    if not r.expect("T0", _in_range(t.op(a, b, c), n), (a, b, c), "entry out of range"):
      return
  for x, y in itertools.product(range(n), repeat=2):
    r.expect("T1", len({t.op(x, y, z) for z in range(n)}) == n, ("c", x, y))
    r.expect("T1", len({t.op(x, z, y) for z in range(n)}) == n, ("b", x, y))
    r.expect("T1", len({t.op(z, x, y) for z in range(n)}) == n, ("a", x, y))
  for a, b, c, d in itertools.product(range(n), repeat=4):
    abc, abd, acd = t.op(a, b, c), t.op(a, b, d), t.op(a, c, d)
    vals = {t.op(b, abc, abd), t.op(c, abc, acd), t.op(d, abd, acd)}
    r.expect("T2", len(vals) == 1, (a, b, c, d))


def _check_partial(t: PartialTribracket, r: AxiomReport):
  n = t.n
  up = t.is_up

  def op(a, b, c):
    return t.op(a, b, c) if up(b, a) and up(c, a) else None

  for a, b, c in itertools.product(range(n), repeat=3):
    defined = up(b, a) and up(c, a)
    value = t.op(a, b, c)
    ok = _in_range(value, n) if defined else value is None
    if not r.expect("P0", ok, (a, b, c), "tensor must be defined exactly where b↑a and c↑a"):
      return
  for a, b, c in itertools.product(range(n), repeat=3):
    d = op(a, b, c)
    if d is not None:
      r.expect("P1", up(d, b) and up(d, c), (a, b, c))
  for a, b, d in itertools.product(range(n), repeat=3):
    if up(d, b) and up(b, a):
      sols = [c for c in range(n) if up(c, a) and op(a, b, c) == d]
      r.expect("P2", len(sols) == 1, (a, b, d), f"{len(sols)} solutions")
  for a, c, d in itertools.product(range(n), repeat=3):
    if up(d, c) and up(c, a):
      sols = [b for b in range(n) if up(b, a) and op(a, b, c) == d]
      r.expect("P3", len(sols) == 1, (a, c, d), f"{len(sols)} solutions")
  for b, c, d in itertools.product(range(n), repeat=3):
    if up(d, b) and up(d, c):
      sols = [a for a in range(n) if up(b, a) and up(c, a) and op(a, b, c) == d]
      r.expect("P4", len(sols) == 1, (b, c, d), f"{len(sols)} solutions")
  for a in range(n):
    lower = t.up_from(a)
    for b, c, d in itertools.product(lower, repeat=3):
      abc, abd, acd = op(a, b, c), op(a, b, d), op(a, c, d)
      vals = {op(b, abc, abd), op(c, abc, acd), op(d, abd, acd)}
      r.expect("P5", len(vals) == 1 and None not in vals, (a, b, c, d))


# *** biquandloid ***

def _check_biquandloid(bq: Biquandloid, r: AxiomReport):
  n = bq.n
  ok = all(r.expect("B0", 0 <= bq.sigma_l[a] < bq.r and 0 <= bq.sigma_r[a] < bq.r, (a,), "shadow out of range") for a in range(n))
  for a, b in itertools.product(range(n), repeat=2):
    comp = bq.sigma_r[a] == bq.sigma_r[b]
    for table in (bq.uast, bq.oast):
      good = _in_range(table[a][b], n) if comp else table[a][b] is None
      ok = r.expect("B0", good, (a, b), "operations must be defined exactly on σ_r-compatible pairs") and ok
  if not ok:
    return
  u, o, sl, sr = bq.uast, bq.oast, bq.sigma_l, bq.sigma_r
  for a, b in bq.pairs:
    r.expect("B1", sr[u[a][b]] == sl[b] and sr[o[a][b]] == sl[b] and sl[u[a][b]] == sl[o[b][a]], (a, b))
  for b, c in itertools.product(range(n), repeat=2):
    if sl[b] != sr[c]:
      continue
    under = [a for a in bq.fibre(sr[b]) if u[a][b] == c]
    over = [a for a in bq.fibre(sr[b]) if o[a][b] == c]
    r.expect("B2", len(under) == 1 and len(over) == 1, (b, c))
  joint = defaultdict(list)
  for a, b in bq.pairs:
    joint[(o[a][b], u[b][a])].append((a, b))
  for c, d in itertools.product(range(n), repeat=2):
    if sl[c] == sl[d]:
      r.expect("B3", len(joint[(c, d)]) == 1, (c, d), f"{len(joint[(c, d)])} solutions")
  for a in range(n):
    r.expect("B4", u[a][a] == o[a][a], (a,))
  for a, b, c in itertools.product(range(n), repeat=3):
    if not sr[a] == sr[b] == sr[c]:
      continue
    r.expect("B5", u[u[a][b]][u[c][b]] == u[u[a][c]][o[b][c]], (a, b, c), "(a∗b)∗(c∗b) = (a∗c)∗(b⊛c)")
    r.expect("B5", o[u[a][b]][u[c][b]] == u[o[a][c]][o[b][c]], (a, b, c), "(a∗b)⊛(c∗b) = (a⊛c)∗(b⊛c)")
    r.expect("B5", o[o[a][b]][o[c][b]] == o[o[a][c]][u[b][c]], (a, b, c), "(a⊛b)⊛(c⊛b) = (a⊛c)⊛(b∗c)")


# *** crossoid ***

class _Maps:
  """None-propagating access to crossoid maps."""

  def __init__(self, x: Crossoid):
    self.x = x

  def __call__(self, name, c):
    return None if c is None else self.x.maps[name][c]

  def A(self, corner, c):
    return None if c is None else self.x.incidence[corner][c]

  def L(self, eps, side, a):
    return None if a is None else self.x.loop(eps, side, a)

  def T(self, key, c1, c2):
    if c1 is None or c2 is None:
      return None
    return self.x.triangles[key][c1][c2]

  def S(self, o, o2, c):
    return None if c is None else self.x.sign_change(o, o2, c)

  def P(self, o, a):
    """Negative monogon map P^-_o."""
    if o == "r":
      return self.L(-1, "l", self.A("ur", self.L(1, "r", a)))
    return self.L(-1, "r", self.A("ul", self.L(1, "l", a)))


def _check_crossoid(x: Crossoid, r: AxiomReport):
  if not _crossoid_domain(x, r):
    return
  m = _Maps(x)
  n, na = x.n, x.a
  sgn = x.sign
  pos = x.positive

  # sign relations
  for c in range(n):
    r.expect("sign", sgn[m("i_s", c)] == -sgn[c] and sgn[m("i_w", c)] == -sgn[c], (c,), "i maps flip the sign")
    r.expect("sign", all(sgn[m(b, c)] == sgn[c] for b in ("B_u", "B_d", "B_l", "B_r")), (c,), "B maps keep the sign")

  # incidence relations
  for eps, a in itertools.product((1, -1), range(na)):
    r.expect("incidence", m.A("ul", m.L(eps, "l", a)) == m.A("dl", m.L(eps, "l", a)), ("L_l", eps, a))
    r.expect("incidence", m.A("ur", m.L(eps, "r", a)) == m.A("dr", m.L(eps, "r", a)), ("L_r", eps, a))
  swaps = {
    "i_s": (("dr", "ur"), ("dl", "ul"), ("ur", "dr"), ("ul", "dl")),
    "i_w": (("dr", "ur"), ("dl", "ul"), ("ur", "dr"), ("ul", "dl")),
    "B_u": (("dr", "ur"), ("dl", "ul")),
    "B_d": (("ur", "dr"), ("ul", "dl")),
    "B_l": (("ul", "dl"), ("dl", "ul")),
    "B_r": (("ur", "dr"), ("dr", "ur")),
  }
  for name, rules in swaps.items():
    for c in range(n):
      r.expect("incidence", all(m.A(p, m(name, c)) == m.A(q, c) for p, q in rules), (name, c))
  for key in TRIANGLE_KEYS:
    o0, o1, o2 = key
    for c1, c2 in itertools.product(pos, repeat=2):
      t = m.T(key, c1, c2)
      if t is None:
        continue
      r.expect("incidence", x.a_out(t, o2, o0) == x.a_in(c1, o0, o1) and x.a_in(t, o2, o0) == x.a_out(c2, o1, o2), (key, c1, c2))

  # omega1 relations
  for eps, a in itertools.product((1, -1), range(na)):
    ll, lr = m.L(eps, "l", a), m.L(eps, "r", a)
    r.expect("omega1", m.A("ur", ll) == a and m.A("dr", ll) == a and m.A("ul", lr) == a and m.A("dl", lr) == a, ("loop", eps, a))
    r.expect("omega1", m("i_s", ll) == m.L(-eps, "r", m.A("ul", ll)), ("i_s L_l", eps, a))
    r.expect("omega1", m("i_s", lr) == m.L(-eps, "l", m.A("ur", lr)), ("i_s L_r", eps, a))
    r.expect("omega1", m("B_l", ll) == m.L(eps, "r", m.A("ul", ll)), ("B_l L_l", eps, a))
    r.expect("omega1", m("B_r", lr) == m.L(eps, "l", m.A("ur", lr)), ("B_r L_r", eps, a))
  for c in pos:
    r.expect("omega1", m.T("rrr", c, m("B_l", c)) == m.L(-1, "r", m.A("dl", c)), ("rrr", c))
    r.expect("omega1", m.T("rlr", c, m("B_d", c)) == m.L(-1, "r", m.A("dr", c)), ("rlr", c))
    r.expect("omega1", m.T("lrl", c, m("B_u", c)) == m.L(-1, "l", m.A("ul", c)), ("lrl", c))
    r.expect("omega1", m.T("lll", c, m("B_r", c)) == m.L(-1, "l", m.A("ur", c)), ("lll", c))
  for a in range(na):
    right = m.L(-1, "l", m.A("ur", m.L(1, "r", a)))
    left = m.L(-1, "r", m.A("ul", m.L(1, "l", a)))
    pl, pr = m.L(1, "l", a), m.L(1, "r", a)
    nl, nr = m.L(-1, "l", a), m.L(-1, "r", a)
    r.expect("omega1", m.T("rlr", pl, pl) == right, ("degenerate rlr", a))
    r.expect("omega1", m.T("lrl", pr, pr) == left, ("degenerate lrl", a))
    r.expect("omega1", m.T("rlr", m("i_w", m("B_d", nl)), m("i_w", m("B_u", nl))) == right, ("degenerate rlr", a, "negative"))
    r.expect("omega1", m.T("lrl", m("i_w", m("B_u", nr)), m("i_w", m("B_d", nr))) == left, ("degenerate lrl", a, "negative"))

  # omega2 relations
  for c in pos:
    sl = m("i_s", m("B_l", m("i_w", c)))
    sr = m("i_s", m("B_r", m("i_w", c)))
    wu = m("i_w", m("B_u", m("i_s", c)))
    wd = m("i_w", m("B_d", m("i_s", c)))
    rules = (
      ("rrr", c, sl, m.P("r", m.A("dl", c))),
      ("rrr", sl, c, m.P("r", m.A("ul", c))),
      ("rlr", c, wu, m.P("r", m.A("dr", c))),
      ("rlr", wd, c, m.P("r", m.A("ur", c))),
      ("lrl", c, wd, m.P("l", m.A("ul", c))),
      ("lrl", wu, c, m.P("l", m.A("dl", c))),
      ("lll", c, sr, m.P("l", m.A("ur", c))),
      ("lll", sr, c, m.P("l", m.A("dr", c))),
    )
    for k, (key, c1, c2, want) in enumerate(rules):
      r.expect("omega2", want is not None and m.T(key, c1, c2) == want, ("loop", k + 1, c))
  for c in range(n):
    r.expect("omega2", m("B_l", m("i_s", m("B_l", c))) == m("i_s", c) and m("B_r", m("i_s", m("B_r", c))) == m("i_s", c), ("bigon", "i_s", c))
    r.expect("omega2", m("B_u", m("i_w", m("B_u", c))) == m("i_w", c) and m("B_d", m("i_w", m("B_d", c))) == m("i_w", c), ("bigon", "i_w", c))

  # rotation relations
  for c in range(n):
    r.expect("rotation", m("i_s", m("i_s", c)) == c and m("i_w", m("i_w", c)) == c, ("involution", c))
    r.expect("rotation", m("B_u", m("B_d", c)) == c and m("B_d", m("B_u", c)) == c, ("B_u B_d", c))
    r.expect("rotation", m("B_r", m("B_r", c)) == c and m("B_l", m("B_l", c)) == c, ("B_l B_r", c))
  by_in = _by_incoming(x)
  for key in TRIANGLE_KEYS:
    o0, o1, o2 = key
    for c1 in pos:
      for c2 in by_in[(o1, o2)][x.a_out(c1, o0, o1)]:
        # the rotated base sits between edges o0 and o1
        back = m.S(o0, o1, m.T(o1 + o2 + o0, c2, m.S(o2, o0, m.T(key, c1, c2))))
        r.expect("rotation", back == c1, (key, c1, c2))

  # omega3 relation
  for y in pos:
    for z in by_in[("r", "r")][x.a_out(y, "r", "r")]:
      xx = m.T("rrr", y, z)
      x1 = m("B_l", m.T("rlr", z, y))
      y1 = m("i_s", m.T("rlr", m("i_w", m("B_d", xx)), z))
      z1 = m("i_s", m.T("rlr", y, m("i_w", m("B_u", xx))))
      good = None not in (x1, y1, z1) and m.A("dr", y1) == m.A("ur", z1) and x1 == m.T("lll", y1, z1)
      r.expect("omega3", good, (y, z))

  # flip relation
  for o0, o1, o2, o3 in itertools.product("rl", repeat=4):
    for c1 in pos:
      for c2 in by_in[(o1, o2)][x.a_out(c1, o0, o1)]:
        for c3 in by_in[(o2, o3)][x.a_out(c2, o1, o2)]:
          lhs = m.T(o0 + o2 + o3, m(i_map(o0, o2), m.T(o0 + o1 + o2, c1, c2)), c3)
          rhs = m.T(o0 + o1 + o3, c1, m(i_map(o1, o3), m.T(o1 + o2 + o3, c2, c3)))
          r.expect("flip", lhs is not None and lhs == rhs, (o0 + o1 + o2 + o3, c1, c2, c3))


def _by_incoming(x: Crossoid) -> dict[tuple[str, str], dict[int, list[int]]]:
  """Positive crossing colors grouped by incoming arc color for each orientation pair."""
  out: dict[tuple[str, str], dict[int, list[int]]] = {}
  for pair in IN_CORNER:
    groups = defaultdict(list)
    for c in x.positive:
      groups[x.a_in(c, *pair)].append(c)
    out[pair] = groups
  return out


def _crossoid_domain(x: Crossoid, r: AxiomReport) -> bool:
  n, na = x.n, x.a
  ok = True
  for c in range(n):
    ok = r.expect("domain", x.sign[c] in (1, -1), (c,), "sign must be ±1") and ok
    ok = r.expect("domain", all(_in_range(x.incidence[k][c], na) for k in INCIDENCES), (c,), "incidence out of range") and ok
    ok = r.expect("domain", all(_in_range(x.maps[k][c], n) for k in BIGON_MAPS), (c,), "bigon map out of range") and ok
  if not ok:
    return False
  for key in LOOP_MAPS:
    eps = 1 if key[1] == "+" else -1
    for a in range(na):
      good = _in_range(x.maps[key][a], n) and x.sign[x.maps[key][a]] == eps
      ok = r.expect("domain", good, (key, a), "loop map must land in crossings of its sign") and ok
  for key in TRIANGLE_KEYS:
    for c1, c2 in itertools.product(range(n), repeat=2):
      t = x.triangles[key][c1][c2]
      if x.compatible(key, c1, c2):
        good = _in_range(t, n) and x.sign[t] < 0
      else:
        good = t is None
      ok = r.expect("domain", good, (key, c1, c2), "triangle maps are defined exactly on compatible positive pairs") and ok
  return ok
