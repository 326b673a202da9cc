#!/usr/bin/env python3
import json
import unittest

from opentangle.algebra.quandle import Quandle
from opentangle.algebra.tribracket import Tribracket
from opentangle.codec.algebra_file import dump_algebra, parse_algebra
from opentangle.errors import RangeError, SchemaError
from opentangle.tests import ALL_ALGEBRAS, algebra_path


class TestAlgebraFile(unittest.TestCase):
  def test_packaged_files_reproduce(self):
    for name in ALL_ALGEBRAS:
      with self.subTest(name=name):
        with open(algebra_path(name), encoding='utf-8') as f:
          text = f.read()
        self.assertEqual(dump_algebra(parse_algebra(text)), text)

  def test_kinds(self):
    q = parse_algebra('{"kind": "quandle", "n": 2, "table": [[0, 0], [1, 1]]}')
    self.assertIsInstance(q, Quandle)
    self.assertEqual(q.table, ((0, 0), (1, 1)))
    t = parse_algebra(json.dumps({"kind": "tribracket", "n": 2, "tensor": [[[0, 1], [1, 0]], [[1, 0], [0, 1]]]}))
    self.assertIsInstance(t, Tribracket)
    self.assertEqual(t.size, 2)

  def test_cocycles(self):
    q = parse_algebra('{"kind": "quandle", "n": 2, "table": [[0, 0], [1, 1]], "cocycles": {"c": {"modulus": 0, "values": {"0,1": -3}}}}')
    self.assertEqual(q.cocycle("c")(0, 1), -3)
    self.assertEqual(q.cocycle("c")(1, 0), 0)

  def test_range_errors(self):
    for text in ('{"kind": "quandle", "n": 4, "table": [[0, 1, 2, 3], [0, 1, 2, 3], [0, 1, 2, 7], [0, 1, 2, 3]]}',
                 '{"kind": "quandle", "n": 2, "table": [[0, 0], [1, 1]], "cocycles": {"c": {"modulus": 2, "values": {"0,5": 1}}}}'):
      with self.subTest(text=text), self.assertRaises(RangeError):
        parse_algebra(text)

  def test_schema_errors(self):
    for text in ("[]", "{", '{"kind": "group", "n": 2}', '{"kind": "quandle", "n": 2}',
                 '{"kind": "quandle", "n": 2, "table": [[0, 0]]}',
                 '{"kind": "quandle", "n": 2, "table": [[0, 0], [1, 1]], "extra": 1}',
                 '{"kind": "quandle", "n": 2, "table": [[0, 0], [1, 1]], "cocycles": {"c": {"values": {}}}}'):
      with self.subTest(text=text), self.assertRaises(SchemaError):
        parse_algebra(text)


if __name__ == "__main__":
  unittest.main()
