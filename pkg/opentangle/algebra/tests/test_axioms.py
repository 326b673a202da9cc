#!/usr/bin/env python3
import unittest

from opentangle.algebra.axioms import check_axioms, require_axioms
from opentangle.algebra.base import Cocycle, freeze
from opentangle.algebra.biquandloid import associated_quandle, biquandle_double
from opentangle.algebra.crossoid import biquandloid_crossoid, is_unframed, parity_crossoid
from opentangle.algebra.groups import cyclic_group, symmetric_group
from opentangle.algebra.quandle import Quandle, alexander_quandle, quandle_from_group
from opentangle.algebra.tribracket import (Tribracket, alexander_numbering_tribracket, alexander_tribracket, dehn_partial,
                                           dehn_tribracket, full_to_partial, z2_tribracket)
from opentangle.errors import AxiomsNotVerified, ClosureViolation, NonUnit
from opentangle.tests import ALL_ALGEBRAS, named_algebra


class TestAxioms(unittest.TestCase):
  def test_packaged_algebras(self):
    for name in ALL_ALGEBRAS:
      with self.subTest(name=name):
        report = check_axioms(named_algebra(name))
        self.assertTrue(report.ok, report.to_json())
        self.assertTrue(report.checked)

  def test_builders(self):
    algebras = [
      alexander_quandle(5, 2),
      alexander_quandle(7, 3),
      quandle_from_group(symmetric_group(3), "s3"),
      z2_tribracket(),
      dehn_tribracket(cyclic_group(3)),
      alexander_tribracket(3, 1, 2),
      alexander_tribracket(5, 2, 3),
      full_to_partial(z2_tribracket()),
      dehn_partial(cyclic_group(4), {0, 2}),
      alexander_numbering_tribracket(5),
      biquandle_double(alexander_quandle(3, 2)),
      parity_crossoid(cyclic_group(2)),
    ]
    for alg in algebras:
      with self.subTest(kind=alg.kind, name=alg.name):
        self.assertTrue(check_axioms(alg).ok, check_axioms(alg).to_json())

  def test_biquandloid_crossoids(self):
    for q in (named_algebra("s4.quandle.json"), alexander_quandle(3, 2)):
      x = biquandloid_crossoid(biquandle_double(q))
      with self.subTest(quandle=q.name):
        report = check_axioms(x)
        self.assertTrue(report.ok, report.to_json())
        self.assertEqual(x.n, 2 * len(biquandle_double(q).pairs))

  def test_broken_quandle(self):
    q = Quandle(freeze([[1, 0], [0, 1]]), name="broken")
    report = check_axioms(q)
    self.assertFalse(report.ok)
    self.assertTrue(report.failed("Q1"))
    self.assertEqual(report.violations[0].witness, (0,))
    with self.assertRaises(AxiomsNotVerified):
      require_axioms(q)

  def test_one_witness_per_axiom(self):
    # constant table: idempotence fails everywhere but one
    q = Quandle(freeze([[0] * 3] * 3))
    report = check_axioms(q)
    self.assertEqual(len([v for v in report.violations if v.axiom == "Q1"]), 1)

  def test_broken_tribracket(self):
    t = Tribracket(tuple(freeze([[0, 0], [0, 0]]) for _ in range(2)))
    self.assertTrue(check_axioms(t).failed("T1"))

  def test_non_units(self):
    with self.assertRaises(NonUnit):
      alexander_quandle(4, 2)
    with self.assertRaises(NonUnit):
      alexander_tribracket(4, 2, 1)
    with self.assertRaises(NonUnit):
      alexander_tribracket(6, 1, 3)

  def test_partial_closure(self):
    # two transpositions of S3 conjugate to the third
    with self.assertRaises(ClosureViolation):
      dehn_partial(symmetric_group(3), {1, 2})


class TestStructures(unittest.TestCase):
  def test_groups(self):
    s3 = symmetric_group(3)
    self.assertEqual(s3.n, 6)
    self.assertEqual(s3.identity, 0)
    for g in range(s3.n):
      self.assertEqual(s3.mul(g, s3.inv(g)), s3.identity)
    self.assertEqual(cyclic_group(5).power(2, 3), 1)
    self.assertEqual(cyclic_group(5).power(2, -1), 3)

  def test_alexander_quandle_table(self):
    q = alexander_quandle(3, 2)
    # x * y = 2x - y
    self.assertEqual(q.table, ((0, 2, 1), (2, 1, 0), (1, 0, 2)))
    for x in range(3):
      for y in range(3):
        self.assertEqual(q.inv(q.op(x, y), y), x)

  def test_double_fibres(self):
    s4 = named_algebra("s4.quandle.json")
    b = biquandle_double(s4)
    self.assertEqual(b.n, 8)
    self.assertEqual(b.r, 2)
    self.assertEqual(b.fibre(0), [0, 1, 2, 3])
    self.assertEqual(len(b.pairs), 32)
    self.assertIsNone(b.uast[0][4])
    for x in (0, 1):
      with self.subTest(fibre=x):
        self.assertEqual(associated_quandle(b, x).table, s4.table)

  def test_parity_crossoid(self):
    x = parity_crossoid(cyclic_group(3))
    self.assertEqual(x.n, 6)
    self.assertEqual(x.a, 1)
    self.assertEqual(x.positive, [0, 2, 4])
    self.assertTrue(is_unframed(x))

  def test_cocycle_values(self):
    theta = Cocycle(2, {(0, 1): 3})
    self.assertEqual(theta(0, 1), 1)
    self.assertEqual(theta(1, 0), 0)
    self.assertEqual(Cocycle.zero()(5, 5), 0)
    self.assertEqual(Cocycle(0, {(1,): -4})(1), -4)

  def test_missing_cocycle(self):
    with self.assertRaises(KeyError):
      named_algebra("s4.quandle.json").cocycle("missing")


if __name__ == "__main__":
  unittest.main()
