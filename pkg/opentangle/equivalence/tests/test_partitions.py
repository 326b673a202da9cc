#!/usr/bin/env python3
import unittest

from opentangle.equivalence.disjoint_set import DisjointSet
from opentangle.equivalence.graph import explore
from opentangle.equivalence.partitions import ShVerdict, omega2_partition, sh_crossing_test, strong_partition, weak_partition
from opentangle.errors import BudgetExceeded, Unsupported
from opentangle.moves.reidemeister import MoveKind, R2AddSite, apply
from opentangle.tests import named_diagram


class TestDisjointSet(unittest.TestCase):
  def test_union(self):
    s = DisjointSet(range(5))
    self.assertTrue(s.union(0, 1))
    self.assertFalse(s.union(1, 0))
    self.assertTrue(s.union_all([2, 3, 4]))
    self.assertTrue(s.same(3, 4))
    self.assertFalse(s.same(0, 4))
    self.assertEqual(s.sorted(), ((0, 1), (2, 3, 4)))


class TestGraph(unittest.TestCase):
  def test_depth_zero(self):
    g = explore(named_diagram("trefoil"), 3, 0)
    self.assertEqual(len(g), 1)
    self.assertFalse(g.truncated)
    self.assertTrue(g.edges)
    for k, e in enumerate(g.edges):
      self.assertEqual(e.kind, MoveKind.ISO)
      self.assertEqual(g.edges[e.dagger].dagger, k)

  def test_kinks_of_a_circle(self):
    # positive and negative kinks, each reachable two ways
    g = explore(named_diagram("unknot"), 1, 1, moves=["r1+"])
    self.assertEqual(len(g), 3)
    self.assertEqual(sorted(g.depth), [0, 1, 1])

  def test_budget(self):
    with self.assertRaises(BudgetExceeded):
      explore(named_diagram("trefoil"), 2, 1)

  def test_node_limit(self):
    g = explore(named_diagram("trefoil"), 4, 1, moves=["r1+"], max_nodes=2)
    self.assertEqual(len(g), 2)
    self.assertTrue(g.truncated)


class TestPartitions(unittest.TestCase):
  def test_trefoil_arcs(self):
    g = explore(named_diagram("trefoil"), 3, 0)
    # the rotation relates every arc weakly, but no morphism merges two arcs
    self.assertEqual(weak_partition(g, "A").classes(g.base), [[0, 1, 2]])
    self.assertEqual(strong_partition(g, "A").classes(), [[0], [1], [2]])
    self.assertEqual(weak_partition(g, "C").classes(g.base), [[0, 1, 2]])

  def test_to_json(self):
    g = explore(named_diagram("trefoil"), 3, 0)
    out = strong_partition(g, "C").to_json()
    self.assertEqual(out["functor"], "C")
    self.assertEqual(out["classes"], [[0], [1], [2]])
    self.assertEqual(len(out["node"]), 16)

  def test_omega2_bigon(self):
    d, _ = apply(named_diagram("trefoil"), R2AddSite(1, 5))
    g = explore(d, 5, 0)
    self.assertTrue(omega2_partition(g).same(g.base, 3, 4))


class TestShCrossings(unittest.TestCase):
  def test_same_crossing(self):
    self.assertEqual(sh_crossing_test(named_diagram("trefoil"), 1, 1, 3, 0), ShVerdict.EQUIVALENT)

  def test_signs_differ(self):
    self.assertEqual(sh_crossing_test(named_diagram("figure8"), 0, 2, 4, 0), ShVerdict.INEQUIVALENT)

  def test_mixed(self):
    with self.assertRaises(Unsupported):
      sh_crossing_test(named_diagram("hopf"), 0, 1, 2, 0)


if __name__ == "__main__":
  unittest.main()
