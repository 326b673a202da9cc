#!/usr/bin/env python3
import random
import unittest

from opentangle.algebra.groups import cyclic_group
from opentangle.algebra.tribracket import dehn_tribracket
from opentangle.coloring.colorings import count
from opentangle.coloring.invariant import cocycle_invariant
from opentangle.homology.cocycles import check_cocycle
from opentangle.homology.cycle import crossing_cycle
from opentangle.moves.reidemeister import MoveKind, apply, find_sites
from opentangle.tests import ALL_DIAGRAMS, named_algebra, named_diagram

KINDS = (MoveKind.R1_ADD, MoveKind.R1_DEL, MoveKind.R2_ADD, MoveKind.R2_DEL, MoveKind.R3)
MAX_CROSSINGS = 6
MAX_MOVES = 6
TRIALS = 200


def structures():
  """(label, algebra, cocycle name or None for a plain count)."""
  return [
    ("s4", named_algebra("s4.quandle.json"), "theta"),
    ("s4double", named_algebra("s4double.biquandloid.json"), "theta"),
    ("dehn_z2", named_algebra("dehn_z2.tribracket.json"), "theta"),
    ("dehn_z3", dehn_tribracket(cyclic_group(3)), None),
    ("parity_z2", named_algebra("parity_z2.crossoid.json"), "phi"),
  ]


def invariant(d, alg, cocycle):
  if cocycle is None:
    return count(d, alg)
  return cocycle_invariant(d, alg, alg.cocycle(cocycle), check=False).as_dict()


class TestMoveInvariance(unittest.TestCase):
  def test_cocycles(self):
    for label, alg, cocycle in structures():
      if cocycle is not None:
        with self.subTest(structure=label):
          self.assertTrue(check_cocycle(alg, alg.cocycle(cocycle)).ok)

  def test_random_move_sequences(self):
    rng = random.Random(7)
    pool = structures()
    for trial in range(TRIALS):
      label, alg, cocycle = pool[trial % len(pool)]
      name = rng.choice(ALL_DIAGRAMS)
      d = named_diagram(name)
      expected = invariant(d, alg, cocycle)
      moves = []
      for _ in range(rng.randint(1, MAX_MOVES)):
        sites = [s for kind in KINDS for s in find_sites(d, kind)]
        site = rng.choice(sites)
        target, _ = apply(d, site)
        if len(target.crossings) <= MAX_CROSSINGS:
          d = target
          moves.append(site.kind.value)
      with self.subTest(trial=trial, name=name, structure=label, moves=moves):
        self.assertEqual(d.genus, 0)
        self.assertEqual(len(d.pieces), 1)
        self.assertEqual(invariant(d, alg, cocycle), expected)
        self.assertTrue(crossing_cycle(d).is_cycle)


if __name__ == "__main__":
  unittest.main()
