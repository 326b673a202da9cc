#!/usr/bin/env python3
import unittest

from opentangle.codec.move_script import MoveCommand, parse_command, parse_move_script, save_move_script
from opentangle.codec.pd import parse_pd
from opentangle.diagram.canonical import canonical_form
from opentangle.diagram.diagram import FUNCTORS, FunctorKind
from opentangle.errors import BudgetExceeded, NotApplicable, ScriptSyntaxError
from opentangle.moves.isomorphism import isomorphisms
from opentangle.moves.reidemeister import MoveKind, R1AddSite, R1DelSite, R2AddSite, apply, find_sites, monogon_loops
from opentangle.moves.relation import ElementRelation
from opentangle.moves.script import command_for_site, dagger_script, resolve_site, run_script
from opentangle.tests import named_diagram

# over semiarc 1 and under semiarc 3 of the trefoil share the triangle on the right of both
TREFOIL_R2 = "r2+ over=1 under=3 side=R"


class TestSites(unittest.TestCase):
  def test_alternating_trefoil(self):
    d = named_diagram("trefoil")
    for kind in (MoveKind.R1_DEL, MoveKind.R2_DEL, MoveKind.R3):
      with self.subTest(kind=kind):
        self.assertEqual(find_sites(d, kind), [])
    self.assertEqual(len(find_sites(d, MoveKind.R1_ADD)), 4 * d.n_semiarcs)

  def test_kink_loop(self):
    d = named_diagram("kink")
    self.assertEqual(monogon_loops(d), {0: 0})
    self.assertEqual(find_sites(d, "r1-"), [R1DelSite(0, 0)])


class TestApply(unittest.TestCase):
  def test_r1_add_on_circle(self):
    target, rel = apply(named_diagram("unknot"), R1AddSite(0, "under", "L"))
    self.assertEqual(canonical_form(target), canonical_form(named_diagram("kink")))
    self.assertEqual(rel[FunctorKind.C], frozenset())

  def test_r1_del(self):
    target, rel = apply(named_diagram("kink"), R1DelSite(0, 0))
    self.assertEqual(canonical_form(target), canonical_form(named_diagram("unknot")))
    self.assertEqual(rel["SA"], frozenset({(1, 0)}))

  def test_r1_add_splits_semiarc(self):
    d = named_diagram("trefoil")
    target, rel = apply(d, R1AddSite(0))
    self.assertEqual(len(target.crossings), 4)
    self.assertEqual(len(rel.image("SA", 0)), 2)
    for s in range(1, d.n_semiarcs):
      self.assertEqual(len(rel.image("SA", s)), 1)
    self.assertEqual(rel[FunctorKind.C], frozenset((i, i) for i in range(3)))
    self.assertFalse(rel.is_bijection("C"))

  def test_r2_add(self):
    d = named_diagram("trefoil")
    target, _ = apply(d, R2AddSite(1, 5))
    self.assertEqual(len(target.crossings), 5)
    self.assertEqual(sorted(c.sign for c in target.crossings[3:]), [-1, 1])
    self.assertTrue(find_sites(target, MoveKind.R2_DEL))

  def test_r2_add_between_pieces(self):
    d = parse_pd("O(1) O(2)")
    sites = find_sites(d, MoveKind.R2_ADD)
    self.assertEqual(sites, [R2AddSite(1, 3), R2AddSite(3, 1)])
    for site in sites:
      with self.subTest(site=site):
        self.assertEqual(resolve_site(d, command_for_site(d, site)), site)
    target, _ = apply(d, sites[0])
    self.assertEqual(len(target.crossings), 2)
    self.assertEqual(len(target.components), 2)
    self.assertEqual(target.genus, 0)
    self.assertTrue(find_sites(target, MoveKind.R2_DEL))

  def test_r2_add_outer_region(self):
    d = parse_pd("Xp(1,4,2,5) Xp(3,6,4,1) Xp(5,2,6,3) O(7)")
    # the circle adds its outside dart to the trefoil face right of semiarc 0
    k = len(d.faces[d.dart_face[1]])
    self.assertEqual(len(find_sites(d, MoveKind.R2_ADD)), 18 + 2 * k)
    self.assertEqual(len(find_sites(named_diagram("trefoil"), MoveKind.R2_ADD)), 18)

  def test_r2_add_needs_shared_face(self):
    with self.assertRaises(NotApplicable):
      apply(named_diagram("trefoil"), R2AddSite(0, 1))

  def test_r1_del_needs_monogon(self):
    with self.assertRaises(NotApplicable):
      apply(named_diagram("trefoil"), R1DelSite(0, 0))


class TestRelations(unittest.TestCase):
  def test_identity(self):
    d = named_diagram("figure8")
    rel = ElementRelation.identity(d)
    for kind in FUNCTORS:
      with self.subTest(kind=kind):
        self.assertTrue(rel.is_bijection(kind))
    self.assertEqual(rel.compose(rel), rel)
    self.assertEqual(rel.transpose(), rel)

  def test_compose_checks_shapes(self):
    a = ElementRelation.identity(named_diagram("trefoil"))
    b = ElementRelation.identity(named_diagram("hopf"))
    with self.assertRaises(ValueError):
      a.compose(b)

  def test_isomorphisms_are_bijections(self):
    d = named_diagram("trefoil")
    rels = isomorphisms(d, d)
    self.assertGreaterEqual(len(rels), 3)
    for rel in rels:
      for kind in ("A", "SA", "C"):
        self.assertTrue(rel.is_bijection(kind))

  def test_isomorphism_budget(self):
    d = named_diagram("trefoil")
    with self.assertRaises(BudgetExceeded):
      isomorphisms(d, d, max_crossings=2)
    self.assertTrue(isomorphisms(d, d, max_crossings=3))


class TestScripts(unittest.TestCase):
  def test_parse(self):
    commands = parse_move_script("# grow a bigon\nr2+ over=1 under=3 side=R\n\nr2- face=F4  # and remove it\n")
    self.assertEqual([c.kind for c in commands], [MoveKind.R2_ADD, MoveKind.R2_DEL])
    self.assertEqual(commands[1].label("face"), 3)
    self.assertEqual(save_move_script(commands), "r2+ over=1 under=3 side=R\nr2- face=F4\n")

  def test_syntax_errors(self):
    for line in ("r4 face=1", "iso", "r3", "r2+ over=1", "r1+ semiarc=1 side=X", "r1- crossing=1 crossing=2", "r3 face=F1 over=2"):
      with self.subTest(line=line), self.assertRaises(ScriptSyntaxError):
        parse_command(line)

  def test_command_site_agree(self):
    d = named_diagram("trefoil")
    for kind in (MoveKind.R1_ADD, MoveKind.R2_ADD):
      for site in find_sites(d, kind)[:8]:
        with self.subTest(site=site):
          self.assertEqual(resolve_site(d, command_for_site(d, site)).kind, kind)

  def test_run_and_undo(self):
    d = named_diagram("trefoil")
    commands = parse_move_script(TREFOIL_R2)
    target, rel, trace = run_script(d, commands)
    self.assertEqual(len(trace), 1)
    self.assertEqual(trace[0].crossings, 5)
    self.assertEqual(rel.source_sizes[FunctorKind.C], 3)

    back, _, _ = run_script(target, dagger_script(d, commands))
    self.assertEqual(canonical_form(back), canonical_form(d))

  def test_kink_round_trip(self):
    d = named_diagram("unknot")
    commands = [MoveCommand(MoveKind.R1_ADD, (("semiarc", "1"),))]
    target, _, _ = run_script(d, commands)
    self.assertEqual(len(target.crossings), 1)
    back, _, _ = run_script(target, dagger_script(d, commands))
    self.assertEqual(canonical_form(back), canonical_form(d))

  def test_failing_step(self):
    with self.assertRaises(NotApplicable) as ctx:
      run_script(named_diagram("trefoil"), parse_move_script("r1+ semiarc=1\nr3 face=F1"))
    self.assertEqual(ctx.exception.step, 2)


if __name__ == "__main__":
  unittest.main()
