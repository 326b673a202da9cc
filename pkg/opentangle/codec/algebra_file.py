#!/usr/bin/env python3
"""JSON files for finite coloring structures.

Elements are 0-based indices. Every file carries "kind", "name", "comment" and "n", then the
tables of its kind and optional named cocycles. Undefined entries of partial tables are null.
dump_algebra writes one top-level key per line, so load then dump reproduces a file byte for byte.
"""
import json
from dataclasses import replace

from opentangle.algebra.base import Cocycle, FiniteAlgebra, freeze
from opentangle.algebra.biquandloid import Biquandloid
from opentangle.algebra.crossoid import BIGON_MAPS, INCIDENCES, LOOP_MAPS, TRIANGLE_KEYS, Crossoid
from opentangle.algebra.quandle import Quandle
from opentangle.algebra.tribracket import PartialTribracket, Tribracket
from opentangle.errors import RangeError, SchemaError

KINDS = ("quandle", "tribracket", "partial_tribracket", "biquandloid", "crossoid")
TABLE_KEYS = {
  "quandle": ("table",),
  "tribracket": ("tensor",),
  "partial_tribracket": ("up", "tensor"),
  "biquandloid": ("r", "sigma_l", "sigma_r", "uast", "oast"),
  "crossoid": ("a", "sign", "incidence", "maps", "triangles"),
}
COMMON_KEYS = ("kind", "name", "comment", "n")


def _int(value, what: str, lo: int = 0, hi: int | None = None, nullable: bool = False) -> int | None:
  if value is None and nullable:
    return None
  if not isinstance(value, int) or isinstance(value, bool):
    raise SchemaError(f"{what} must be an integer, got {value!r}")
  if value < lo or (hi is not None and value >= hi):
    raise RangeError(f"{what} = {value} outside [{lo}, {hi})")
  return value


def _array(value, shape: tuple[int, ...], what: str, hi: int, nullable: bool = False):
  if not shape:
    return _int(value, what, 0, hi, nullable)
  if not isinstance(value, list) or len(value) != shape[0]:
    raise SchemaError(f"{what} must be a list of length {shape[0]}")
  rows = [_array(v, shape[1:], f"{what}[{k}]", hi, nullable) for k, v in enumerate(value)]
  return tuple(rows)


def _section(obj: dict, key: str, what: str = ""):
  if key not in obj:
    raise SchemaError(f"missing key {what or key!r}")
  return obj[key]


def _cocycles(raw, arity_ok) -> dict[str, Cocycle]:
  if not isinstance(raw, dict):
    raise SchemaError("cocycles must be an object")
  out = {}
  for name, body in raw.items():
    if not isinstance(body, dict) or set(body) != {"modulus", "values"}:
      raise SchemaError(f"cocycle {name!r} needs exactly 'modulus' and 'values'")
    modulus = _int(body["modulus"], f"cocycle {name!r} modulus")
    if not isinstance(body["values"], dict):
      raise SchemaError(f"cocycle {name!r} values must be an object")
    values = {}
    for key, v in body["values"].items():
      try:
        elems = tuple(int(x) for x in key.split(","))
      except ValueError:
        raise SchemaError(f"cocycle {name!r} has malformed key {key!r}") from None
      if not arity_ok(elems):
        raise RangeError(f"cocycle {name!r} key {key!r} is not a tuple of elements")
      values[elems] = _int(v, f"cocycle {name!r} value at {key!r}", lo=-(1 << 62))
    out[name] = Cocycle(modulus, values)
  return out


def parse_algebra(text: str) -> FiniteAlgebra:
  try:
    obj = json.loads(text)
  except json.JSONDecodeError as e:
    raise SchemaError(f"invalid JSON: {e}") from None
  if not isinstance(obj, dict):
    raise SchemaError("algebra file must hold a JSON object")
  kind = _section(obj, "kind")
  if kind not in KINDS:
    raise SchemaError(f"unknown kind {kind!r}")
  extra = set(obj) - set(COMMON_KEYS) - set(TABLE_KEYS[kind]) - {"cocycles"}
  if extra:
    raise SchemaError(f"unexpected keys {sorted(extra)}")
  n = _int(_section(obj, "n"), "n", lo=1)
  name, comment = obj.get("name", ""), obj.get("comment", "")
  if not isinstance(name, str) or not isinstance(comment, str):
    raise SchemaError("name and comment must be strings")

  if kind == "quandle":
    alg = Quandle(_array(_section(obj, "table"), (n, n), "table", n), name=name, comment=comment)
  elif kind == "tribracket":
    alg = Tribracket(_array(_section(obj, "tensor"), (n, n, n), "tensor", n), name=name, comment=comment)
  elif kind == "partial_tribracket":
    up = _section(obj, "up")
    if not isinstance(up, list) or len(up) != n or any(not isinstance(r, list) or len(r) != n or any(not isinstance(v, bool) for v in r) for r in up):
      raise SchemaError(f"up must be a {n}x{n} array of booleans")
    alg = PartialTribracket(freeze(up), _array(_section(obj, "tensor"), (n, n, n), "tensor", n, nullable=True), name=name, comment=comment)
  elif kind == "biquandloid":
    r = _int(_section(obj, "r"), "r", lo=1)
    alg = Biquandloid(r, _array(_section(obj, "sigma_l"), (n,), "sigma_l", r), _array(_section(obj, "sigma_r"), (n,), "sigma_r", r),
                      _array(_section(obj, "uast"), (n, n), "uast", n, nullable=True),
                      _array(_section(obj, "oast"), (n, n), "oast", n, nullable=True), name=name, comment=comment)
  else:
    alg = _parse_crossoid(obj, n, name, comment)

  if "cocycles" in obj:
    alg = replace(alg, cocycles=_cocycles(obj["cocycles"], lambda t: all(0 <= x < alg.size for x in t)))
  return alg


def _parse_crossoid(obj: dict, n: int, name: str, comment: str) -> Crossoid:
  a = _int(_section(obj, "a"), "a", lo=1)
  sign = _section(obj, "sign")
  if not isinstance(sign, list) or len(sign) != n or any(s not in (1, -1) or isinstance(s, bool) for s in sign):
    raise SchemaError(f"sign must be a list of {n} entries from {{1, -1}}")

  def block(key, names):
    raw = _section(obj, key)
    if not isinstance(raw, dict) or set(raw) != set(names):
      raise SchemaError(f"{key} must have exactly the keys {list(names)}")
    return raw

  incidence = {k: _array(v, (n,), f"incidence.{k}", a) for k, v in block("incidence", INCIDENCES).items()}
  raw_maps = block("maps", LOOP_MAPS + BIGON_MAPS)
  maps = {k: _array(raw_maps[k], (a,), f"maps.{k}", n) for k in LOOP_MAPS}
  maps.update({k: _array(raw_maps[k], (n,), f"maps.{k}", n) for k in BIGON_MAPS})
  triangles = {k: _array(v, (n, n), f"triangles.{k}", n, nullable=True) for k, v in block("triangles", TRIANGLE_KEYS).items()}
  return Crossoid(a, tuple(sign), incidence, maps, triangles, name=name, comment=comment)


def _plain(value):
  if isinstance(value, tuple):
    return [_plain(v) for v in value]
  if isinstance(value, dict):
    return {k: _plain(v) for k, v in value.items()}
  return value


def dump_algebra(alg: FiniteAlgebra) -> str:
  fields = {"kind": alg.kind, "name": alg.name, "comment": alg.comment, "n": alg.size}
  if isinstance(alg, Quandle):
    fields["table"] = alg.table
  elif isinstance(alg, Tribracket):
    fields["tensor"] = alg.tensor
  elif isinstance(alg, PartialTribracket):
    fields["up"] = alg.up
    fields["tensor"] = alg.tensor
  elif isinstance(alg, Biquandloid):
    fields.update(r=alg.r, sigma_l=alg.sigma_l, sigma_r=alg.sigma_r, uast=alg.uast, oast=alg.oast)
  elif isinstance(alg, Crossoid):
    fields.update(a=alg.a, sign=alg.sign, incidence={k: alg.incidence[k] for k in INCIDENCES},
                  maps={k: alg.maps[k] for k in LOOP_MAPS + BIGON_MAPS}, triangles={k: alg.triangles[k] for k in TRIANGLE_KEYS})
  else:
    raise TypeError(f"cannot serialize {type(alg).__name__}")
  if alg.cocycles:
    fields["cocycles"] = {name: {"modulus": c.modulus, "values": {",".join(map(str, k)): c.values[k] for k in sorted(c.values)}}
                          for name, c in alg.cocycles.items()}
  lines = [f"  {json.dumps(k)}: {json.dumps(_plain(v), ensure_ascii=False)}" for k, v in fields.items()]
  return "{\n" + ",\n".join(lines) + "\n}\n"


def load_algebra(path: str) -> FiniteAlgebra:
  with open(path, encoding='utf-8') as f:
    return parse_algebra(f.read())


def save_algebra(alg: FiniteAlgebra, path: str):
  with open(path, "w", encoding='utf-8') as f:
    f.write(dump_algebra(alg))
