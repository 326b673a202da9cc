#!/usr/bin/env python3
"""Algebras committed under opentangle/algebras, keyed by file name."""
from dataclasses import replace

from opentangle.algebra.base import Cocycle, freeze
from opentangle.algebra.biquandloid import biquandle_double
from opentangle.algebra.crossoid import parity_crossoid
from opentangle.algebra.groups import cyclic_group
from opentangle.algebra.quandle import Quandle
from opentangle.algebra.tribracket import alexander_tribracket, z2_tribracket

S4_TABLE = [[0, 2, 3, 1], [3, 1, 0, 2], [1, 3, 2, 0], [2, 0, 1, 3]]

# nonzero entries of the S4 2-cocycle over Z_2
S4_THETA = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]


def s4_quandle() -> Quandle:
  return Quandle(freeze(S4_TABLE), name="s4", cocycles={"theta": Cocycle(2, dict.fromkeys(S4_THETA, 1))})


def s4_double():
  b = biquandle_double(s4_quandle())
  values = {(x + 4 * eps, y + 4 * eps): 1 for eps in (0, 1) for x, y in S4_THETA}
  return replace(b, cocycles={"theta": Cocycle(2, values)})


def dehn_z2():
  return replace(z2_tribracket(), cocycles={"theta": Cocycle(2, {(0, 0, 1): 1, (1, 1, 0): 1})})


def ternary3():
  # [a, b, c] = a + b - c on Z_3
  return alexander_tribracket(3, 1, 2)


def parity_z2():
  return replace(parity_crossoid(cyclic_group(2)), cocycles={"phi": Cocycle(2, {(2,): 1, (3,): 1})})


RECIPES = {
  "s4.quandle.json": s4_quandle,
  "s4double.biquandloid.json": s4_double,
  "dehn_z2.tribracket.json": dehn_z2,
  "ternary3.tribracket.json": ternary3,
  "parity_z2.crossoid.json": parity_z2,
}
