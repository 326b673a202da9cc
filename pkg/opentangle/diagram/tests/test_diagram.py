#!/usr/bin/env python3
import unittest

from opentangle.codec.pd import parse_pd
from opentangle.diagram.canonical import canonical_form, isomorphism_maps
from opentangle.diagram.diagram import FUNCTORS, Crossing, Diagram, FunctorKind
from opentangle.diagram.numbering import alexander_numbering, semiarc_numbering
from opentangle.diagram.transforms import crossing_change, mirror, non_oriented_smoothing, oriented_smoothing, reverse
from opentangle.diagram.wrapping import OrderType, TraitClass, trait_classes, wrap_crossing, wrapping_index, wrapping_monodromy
from opentangle.equivalence.graph import explore
from opentangle.equivalence.partitions import omega2_partition
from opentangle.moves.reidemeister import MoveKind, apply, find_sites
from opentangle.errors import InvalidDiagram, MixedCrossing
from opentangle.tests import ALL_DIAGRAMS, named_diagram

# faces of the trefoil have 2, 3, 3, 2 and 2 sides
TREFOIL_FACES = [2, 3, 3, 2, 2]


class TestDiagram(unittest.TestCase):
  def test_trefoil_faces(self):
    d = named_diagram("trefoil")
    self.assertEqual([len(f) for f in d.faces], TREFOIL_FACES)
    self.assertEqual(d.n_regions, 5)
    self.assertEqual(d.genus, 0)
    self.assertEqual(d.n_arcs, 3)

  def test_sizes(self):
    expected = {
      "trefoil": {"A": 3, "SA": 6, "R": 5, "C": 3},
      "hopf": {"A": 2, "SA": 4, "R": 4, "C": 2},
      "kink": {"A": 1, "SA": 2, "R": 3, "C": 1},
      "unknot": {"A": 1, "SA": 1, "R": 2, "C": 0},
    }
    for name, sizes in expected.items():
      d = named_diagram(name)
      for kind, n in sizes.items():
        with self.subTest(name=name, kind=kind):
          self.assertEqual(d.size(FunctorKind(kind)), n)

  def test_every_dart_in_one_face(self):
    for name in ALL_DIAGRAMS:
      with self.subTest(name=name):
        d = named_diagram(name)
        darts = sorted(x for f in d.faces for x in f)
        self.assertEqual(darts, list(range(2 * d.n_semiarcs)))
        self.assertEqual(d.genus, 0)

  def test_components(self):
    self.assertEqual(len(named_diagram("trefoil").components), 1)
    hopf = named_diagram("hopf")
    self.assertEqual(len(hopf.components), 2)
    self.assertFalse(hopf.is_pure(0))
    self.assertTrue(named_diagram("trefoil").is_pure(0))

  def test_elements(self):
    d = named_diagram("figure8")
    for kind in FUNCTORS:
      with self.subTest(kind=kind):
        self.assertEqual(d.elements(kind), list(range(d.size(kind))))

  def test_separate_circles(self):
    # both circles have their insides on the left and share the outside on the right
    d = parse_pd("O(1) O(2)")
    self.assertEqual(d.n_regions, 3)
    self.assertEqual(d.region_right(0), d.region_right(1))
    self.assertNotEqual(d.region_left(0), d.region_left(1))
    self.assertNotEqual(d.region_left(0), d.region_right(0))

  def test_invalid(self):
    with self.assertRaises(InvalidDiagram):
      Diagram((Crossing(2, 0, 1, 1, 0),), 2)
    with self.assertRaises(InvalidDiagram):
      Diagram((Crossing(1, 0, 1, 1, 5),), 2)
    with self.assertRaises(InvalidDiagram):
      Diagram((Crossing(1, 0, 0, 0, 1),), 2)


class TestNumbering(unittest.TestCase):
  def test_trefoil(self):
    values, modulus = alexander_numbering(named_diagram("trefoil"))
    self.assertEqual(modulus, 0)
    self.assertEqual(values, {0: 0, 1: -1, 2: 1, 3: 0, 4: 0})

  def test_semiarcs_step_by_one(self):
    for name in ALL_DIAGRAMS:
      with self.subTest(name=name):
        d = named_diagram(name)
        regions, modulus = alexander_numbering(d)
        self.assertEqual(modulus, 0)
        for s in range(d.n_semiarcs):
          self.assertEqual(regions[d.region_left(s)] - regions[d.region_right(s)], 1)
        semiarcs, _ = semiarc_numbering(d)
        self.assertEqual(semiarcs, {s: regions[d.region_right(s)] for s in range(d.n_semiarcs)})


class TestCanonical(unittest.TestCase):
  def test_crossing_order_does_not_matter(self):
    a = parse_pd("Xp(1,4,2,5) Xp(3,6,4,1) Xp(5,2,6,3)")
    b = parse_pd("Xp(5,2,6,3) Xp(1,4,2,5) Xp(3,6,4,1)")
    self.assertEqual(canonical_form(a), canonical_form(b))

  def test_mirror_differs(self):
    d = named_diagram("trefoil")
    self.assertNotEqual(canonical_form(d), canonical_form(mirror(d)))

  def test_trefoil_rotations(self):
    d = named_diagram("trefoil")
    maps = isomorphism_maps(d, d)
    self.assertGreaterEqual(len(maps), 3)
    # the rotation moves every arc
    self.assertTrue(any(s_map[0] != 0 for s_map, _ in maps))

  def test_no_isomorphism(self):
    self.assertEqual(isomorphism_maps(named_diagram("trefoil"), named_diagram("hopf")), [])


class TestTransforms(unittest.TestCase):
  def test_mirror_is_involution(self):
    d = named_diagram("figure8")
    self.assertEqual(mirror(mirror(d)), d)
    self.assertEqual([c.sign for c in mirror(d).crossings], [-1, -1, 1, 1])

  def test_crossing_change(self):
    d = named_diagram("trefoil")
    changed = crossing_change(d, 1)
    self.assertEqual([c.sign for c in changed.crossings], [1, -1, 1])
    self.assertEqual(changed.crossings[1].over_in, d.crossings[1].under_in)

  def test_reverse_is_involution(self):
    d = named_diagram("trefoil")
    self.assertEqual(reverse(reverse(d)), d)

  def test_oriented_smoothing(self):
    d = oriented_smoothing(named_diagram("trefoil"), 0)
    self.assertEqual(len(d.crossings), 2)
    self.assertEqual(len(d.components), 2)

  def test_non_oriented_smoothing(self):
    d = non_oriented_smoothing(named_diagram("trefoil"), 0)
    self.assertEqual(len(d.crossings), 2)
    self.assertEqual(len(d.components), 1)
    self.assertEqual(d.genus, 0)
    self.assertEqual([c.sign for c in d.crossings], [-1, -1])


class TestWrapping(unittest.TestCase):
  def test_trefoil(self):
    d = named_diagram("trefoil")
    for c in range(3):
      with self.subTest(crossing=c):
        self.assertEqual(wrapping_index(d, c), 1)

  def test_kink(self):
    self.assertEqual(wrapping_index(named_diagram("kink"), 0), 0)

  def test_mixed(self):
    with self.assertRaises(MixedCrossing):
      wrapping_index(named_diagram("hopf"), 0)

  def test_trait_classes(self):
    classes = trait_classes(named_diagram("trefoil"))
    self.assertEqual(classes, {TraitClass(1, (0, 0), OrderType.NONE): [0, 1, 2]})

  def test_figure8_traits(self):
    classes = trait_classes(named_diagram("figure8"))
    self.assertEqual(sorted(classes.values()), [[0, 1], [2, 3]])

  def test_half_turn_flips_sign(self):
    d = named_diagram("trefoil")
    for n in (1, -1, 2):
      with self.subTest(n=n):
        wrapped, c = wrap_crossing(d, 0, n)
        self.assertEqual(len(wrapped.crossings), 3 + 2 * abs(n))
        self.assertEqual(wrapped.crossings[c].sign, (-1) ** n)
        self.assertEqual(wrapped.genus, 0)
        self.assertEqual(len(wrapped.components), 1)

  def test_full_turn_shifts_wrapping_index(self):
    for name in ("trefoil", "figure8"):
      d = named_diagram(name)
      with self.subTest(name=name):
        wrapped, w = wrap_crossing(d, 0, 2)
        self.assertEqual(wrapping_index(wrapped, w), wrapping_index(d, 0) + 1)
        self.assertEqual(wrapping_monodromy(d, 0), 1)

  def test_half_turn_bigons(self):
    d = named_diagram("trefoil")
    wrapped, w = wrap_crossing(d, 0, 1)
    sites = find_sites(wrapped, MoveKind.R2_DEL)
    self.assertEqual(len(sites), 2)
    for site in sites:
      with self.subTest(face=site.face):
        self.assertEqual(canonical_form(apply(wrapped, site)[0]), canonical_form(d))

    g = explore(wrapped, 5, 0)
    merged = next(c for c in omega2_partition(g).classes() if w in c)
    self.assertEqual(len(merged), 3)
    self.assertIn(0, merged)


if __name__ == "__main__":
  unittest.main()
