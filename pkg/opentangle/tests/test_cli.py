#!/usr/bin/env python3
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from opentangle.cli import main
from opentangle.tests import algebra_path, diagram_path

DEHN = algebra_path("dehn_z2.tribracket.json")
S4 = algebra_path("s4.quandle.json")
DOUBLE = algebra_path("s4double.biquandloid.json")


def run(*argv: str) -> tuple[int, str, str]:
  out, err = io.StringIO(), io.StringIO()
  with redirect_stdout(out), redirect_stderr(err):
    code = main(list(argv))
  return code, out.getvalue(), err.getvalue()


class TestCli(unittest.TestCase):
  def test_color_count(self):
    self.assertEqual(run("color", "count", "--diagram", diagram_path("hopf"), "--algebra", DEHN), (0, "8\n", ""))

  def test_color_list(self):
    code, out, _ = run("color", "list", "--diagram", diagram_path("trefoil"), "--algebra", S4)
    self.assertEqual(code, 0)
    self.assertEqual(json.loads(out)["count"], 16)

  def test_invariant(self):
    code, out, _ = run("invariant", "--diagram", diagram_path("trefoil"), "--algebra", DOUBLE, "--cocycle", "theta")
    self.assertEqual((code, out), (0, '{"0": 8, "1": 24}\n'))

  def test_unknown_cocycle(self):
    code, _, err = run("invariant", "--diagram", diagram_path("trefoil"), "--algebra", DOUBLE, "--cocycle", "nope")
    self.assertEqual(code, 2)
    self.assertEqual(json.loads(err)["error"], "UsageError")

  def test_wr(self):
    self.assertEqual(run("wr", "--diagram", diagram_path("trefoil"), "--crossing", "1"), (0, "1\n", ""))

  def test_wr_monodromy(self):
    code, out, _ = run("wr", "--diagram", diagram_path("trefoil"), "--crossing", "1", "--monodromy")
    self.assertEqual((code, json.loads(out)), (0, {"wr": 1, "monodromy": 1}))

  def test_transform(self):
    for action, crossings in (("change", 3), ("mirror", 3), ("reverse", 3), ("smooth", 2), ("smooth-unoriented", 2), ("wrap", 5)):
      with self.subTest(action=action):
        code, out, _ = run("transform", action, "--diagram", diagram_path("trefoil"), "--crossing", "1")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["crossings"], crossings)

    _, out, _ = run("transform", "wrap", "--diagram", diagram_path("trefoil"), "--crossing", "1", "--turns", "-2")
    self.assertEqual(json.loads(out)["crossings"], 7)
    self.assertEqual(run("transform", "smooth", "--diagram", diagram_path("trefoil"))[0], 2)

  def test_threads(self):
    for threads in ("1", "3"):
      with self.subTest(threads=threads):
        self.assertEqual(run("color", "count", "--diagram", diagram_path("hopf"), "--algebra", DEHN, "--threads", threads), (0, "8\n", ""))
        code, out, _ = run("invariant", "--diagram", diagram_path("trefoil"), "--algebra", DOUBLE, "--cocycle", "theta", "--threads", threads)
        self.assertEqual((code, out), (0, '{"0": 8, "1": 24}\n'))

  def test_wr_errors(self):
    code, out, err = run("wr", "--diagram", diagram_path("hopf"), "--crossing", "1")
    self.assertEqual((code, out), (1, ""))
    self.assertEqual(json.loads(err)["error"], "MixedCrossing")

    code, _, err = run("wr", "--diagram", diagram_path("trefoil"), "--crossing", "9")
    self.assertEqual(code, 1)
    self.assertEqual(json.loads(err)["error"], "RangeError")

  def test_missing_file(self):
    code, _, err = run("color", "count", "--diagram", "/nonexistent/knot.pd", "--algebra", DEHN)
    self.assertEqual(code, 2)
    self.assertEqual(json.loads(err)["error"], "FileNotFoundError")

  def test_bad_command(self):
    with self.assertRaises(SystemExit) as ctx:
      run("untangle")
    self.assertEqual(ctx.exception.code, 2)

  def test_validate(self):
    code, out, _ = run("validate", "--diagram", diagram_path("figure8"), "--algebra", S4)
    self.assertEqual(code, 0)
    report = json.loads(out)
    self.assertEqual(report["diagram"]["crossings"], 4)
    self.assertTrue(report["algebra"]["ok"])
    self.assertEqual(run("validate")[0], 2)

  def test_cocycle_check(self):
    code, out, _ = run("cocycle", "check", "--algebra", DEHN, "--cocycle", "theta")
    self.assertEqual(code, 0)
    self.assertTrue(json.loads(out)["ok"])

  def test_homology(self):
    code, out, _ = run("homology", "--algebra", DEHN, "--degree", "1")
    self.assertEqual(code, 0)
    self.assertEqual(set(json.loads(out)), {"structure", "degree", "rank", "torsion"})

  def test_homology_export(self):
    with tempfile.TemporaryDirectory() as d:
      path = os.path.join(d, "boundaries.json")
      self.assertEqual(run("homology", "--algebra", DEHN, "--degree", "1", "--export", path)[0], 0)
      with open(path, encoding='utf-8') as f:
        self.assertEqual([m["degree"] for m in json.load(f)], [0, 1, 2])

  def test_cycle(self):
    code, out, _ = run("cycle", "--diagram", diagram_path("trefoil"))
    self.assertEqual(code, 0)
    self.assertEqual(json.loads(out), {"boundary": {}, "crossings": [1, 1, 1], "cycle": True})

  def test_moves(self):
    self.assertEqual(run("moves", "find", "--diagram", diagram_path("trefoil"), "--kind", "r2-"), (0, "[]\n", ""))
    self.assertEqual(run("moves", "apply", "--diagram", diagram_path("trefoil"))[0], 2)

    with tempfile.TemporaryDirectory() as d:
      script = os.path.join(d, "grow.moves")
      with open(script, "w", encoding='utf-8') as f:
        f.write("r2+ over=1 under=3 side=R\n")
      code, out, _ = run("moves", "apply", "--diagram", diagram_path("trefoil"), "--script", script)
      self.assertEqual(code, 0)
      self.assertEqual(len(json.loads(out)["trace"]), 1)

      code, out, _ = run("moves", "script", "--diagram", diagram_path("trefoil"), "--script", script)
      self.assertEqual(code, 0)
      self.assertTrue(out.startswith("r2- face=F"))

  def test_equiv(self):
    code, out, _ = run("equiv", "strong", "--diagram", diagram_path("trefoil"), "--depth", "0")
    self.assertEqual(code, 0)
    out = json.loads(out)
    self.assertEqual(out["classes"], [[0], [1], [2]])
    self.assertEqual(out["nodes"], 1)

    code, out, _ = run("equiv", "sh", "--diagram", diagram_path("figure8"), "--crossings", "1", "3", "--depth", "0")
    self.assertEqual((code, json.loads(out)), (0, "inequivalent"))

  def test_presentation(self):
    code, out, _ = run("presentation", "--diagram", diagram_path("trefoil"), "--kind", "tribracket")
    self.assertEqual(code, 0)
    self.assertIn("generators: r1, r2, r3, r4, r5", out)

  def test_generate(self):
    with tempfile.TemporaryDirectory() as d:
      self.assertEqual(run("generate", "--output", d)[0], 0)
      self.assertEqual(len([f for f in os.listdir(d) if f.endswith(".json")]), 5)


if __name__ == "__main__":
  unittest.main()
