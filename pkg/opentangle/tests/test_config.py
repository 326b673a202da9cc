#!/usr/bin/env python3
import os
import tempfile
import unittest
from unittest import mock

from opentangle.config import BUDGET_ENV, Config, load_config


class TestConfig(unittest.TestCase):
  def test_packaged_defaults(self):
    with mock.patch.dict(os.environ):
      os.environ.pop(BUDGET_ENV, None)
      self.assertEqual(load_config(), Config())

  def test_budget_env(self):
    with mock.patch.dict(os.environ, {BUDGET_ENV: "3"}):
      cfg = load_config()
    self.assertEqual(cfg.max_depth, 3)
    self.assertEqual(cfg.max_crossings, Config.max_crossings)

  def test_partial_file(self):
    with tempfile.TemporaryDirectory() as d, mock.patch.dict(os.environ):
      os.environ.pop(BUDGET_ENV, None)
      path = os.path.join(d, "config.yaml")
      with open(path, "w", encoding='utf-8') as f:
        f.write("explore:\n  max_crossings: 9\nhomology:\n  max_degree: 6\n")
      cfg = load_config(path)
    self.assertEqual(cfg.max_crossings, 9)
    self.assertEqual(cfg.max_degree, 6)
    self.assertEqual(cfg.max_nodes, Config.max_nodes)

  def test_empty_file(self):
    with tempfile.NamedTemporaryFile("w", suffix=".yaml") as f, mock.patch.dict(os.environ):
      os.environ.pop(BUDGET_ENV, None)
      self.assertEqual(load_config(f.name), Config())


if __name__ == "__main__":
  unittest.main()
