#!/usr/bin/env python3
"""Smith normal form of integer matrices, exact over big integers."""
import math

import numpy as np
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors


def smith_diagonal(matrix) -> list[int]:
  """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
  a = np.array(matrix, dtype=object)
  if a.ndim != 2 or 0 in a.shape:
    return []
  factors = invariant_factors(Matrix(a.tolist()), domain=ZZ)
  return [abs(int(f)) for f in factors if f]


def rank(matrix) -> int:
  return len(smith_diagonal(matrix))


def reduce_mod(matrix, m: int) -> np.ndarray:
  a = np.array(matrix, dtype=object)
  return a % m if m else a


def torsion_mod(orders: list[int], m: int) -> list[int]:
  """Cyclic orders of the summands Z_d ⊗ Z_m = Z_gcd(d, m) that are neither 0 nor all of Z_m."""
  return sorted(g for g in (math.gcd(d, m) for d in orders) if 1 < g < m)


def count_full_mod(orders: list[int], m: int) -> int:
  return sum(1 for d in orders if d % m == 0)
