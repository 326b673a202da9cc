#!/usr/bin/env python3
import random
import re
import unittest

from opentangle.codec.gauss import parse_gauss, serialize_gauss
from opentangle.codec.pd import parse_pd, serialize_pd, tokenize
from opentangle.diagram.canonical import canonical_form
from opentangle.errors import InvalidDiagram, PdSyntaxError, Unsupported
from opentangle.tests import ALL_DIAGRAMS, named_diagram

TREFOIL = "Xp(1,4,2,5) Xp(3,6,4,1) Xp(5,2,6,3)"
FIGURE8 = "Xp(4,1,5,2) Xp(8,5,1,6) Xm(6,4,7,3) Xm(2,8,3,7)"


class TestPd(unittest.TestCase):
  def test_tokenize(self):
    self.assertEqual(tokenize("# comment\nXp(1, 2,3,4)  O(5)"), ["Xp(1, 2,3,4)", "O(5)"])

  def test_trefoil(self):
    d = parse_pd(TREFOIL)
    self.assertEqual(len(d.crossings), 3)
    self.assertEqual(d.n_semiarcs, 6)
    self.assertEqual([c.sign for c in d.crossings], [1, 1, 1])
    self.assertTrue(d.is_closed)
    self.assertEqual(len(d.components), 1)

  def test_serialize_keeps_labels(self):
    for text in (TREFOIL, FIGURE8, "Xp(1,3,2,4) Xp(4,2,3,1)"):
      with self.subTest(text=text):
        self.assertEqual(serialize_pd(parse_pd(text)), text)

  def test_mixed_signs(self):
    d = parse_pd(FIGURE8)
    self.assertEqual([c.sign for c in d.crossings], [1, 1, -1, -1])

  def test_circle(self):
    d = parse_pd("O(1)")
    self.assertEqual(d.crossings, ())
    self.assertEqual(d.circles, (0,))
    self.assertEqual(serialize_pd(d), "O(1)")

  def test_packaged_diagrams_parse(self):
    for name in ALL_DIAGRAMS:
      with self.subTest(name=name):
        d = named_diagram(name)
        self.assertTrue(d.is_closed)

  def test_syntax_errors(self):
    for text in ("Xq(1,2,3,4)", "Xp(0,1,2,3)", "Xp(1,2,3)", "hello"):
      with self.subTest(text=text), self.assertRaises(PdSyntaxError):
        parse_pd(text)

  def test_mutations_are_rejected(self):
    # a fresh label inside a crossing record leaves two labels used once
    rng = random.Random(0)
    for name in ALL_DIAGRAMS:
      text = serialize_pd(named_diagram(name))
      spans = [m.span() for m in re.finditer(r"\d+", text) if text.rfind("X", 0, m.start()) > text.rfind(")", 0, m.start())]
      for _ in range(min(5, len(spans))):
        lo, hi = rng.choice(spans)
        mutated = text[:lo] + "99" + text[hi:]
        with self.subTest(name=name, mutated=mutated), self.assertRaises(InvalidDiagram):
          parse_pd(mutated)

  def test_inconsistent_orientation(self):
    # every label appears once, so no strand closes up
    with self.assertRaises(InvalidDiagram):
      parse_pd("Xp(1,2,3,4)")
    with self.assertRaises(InvalidDiagram):
      parse_pd("O(1) O(1)")


class TestGauss(unittest.TestCase):
  def test_trefoil(self):
    d = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")
    self.assertEqual(len(d.crossings), 3)
    self.assertEqual(d.n_semiarcs, 6)
    self.assertEqual(len(d.components), 1)

  def test_pd_and_gauss_agree(self):
    d = parse_pd(TREFOIL)
    again = parse_gauss(serialize_gauss(d))
    self.assertEqual(canonical_form(again), canonical_form(d))

  def test_circle(self):
    d = parse_gauss("()")
    self.assertEqual(d.circles, (0,))

  def test_virtual_trefoil(self):
    self.assertEqual(parse_gauss("O1+ O2+ U1+ U2+").genus, 1)

  def test_errors(self):
    with self.assertRaises(InvalidDiagram):
      parse_gauss("O1+ O1+")
    with self.assertRaises(InvalidDiagram):
      parse_gauss("O1+ U1-")
    with self.assertRaises(PdSyntaxError):
      parse_gauss("X1+ U1+")

  def test_open_diagram_has_no_gauss_code(self):
    d = parse_pd("E(1) E(1)")
    self.assertFalse(d.is_closed)
    with self.assertRaises(Unsupported):
      serialize_gauss(d)


if __name__ == "__main__":
  unittest.main()
