import os

from opentangle.codec.gauss import parse_gauss
from opentangle.codec.pd import parse_pd
from opentangle.diagram.diagram import Diagram
from opentangle.errors import SchemaError

DIAGRAM_SUFFIXES = {".pd": parse_pd, ".gauss": parse_gauss}


def load_diagram(path: str) -> Diagram:
  suffix = os.path.splitext(path)[1]
  if suffix not in DIAGRAM_SUFFIXES:
    raise SchemaError(f"unknown diagram format {suffix!r}, expected one of {sorted(DIAGRAM_SUFFIXES)}")
  with open(path, encoding='utf-8') as f:
    return DIAGRAM_SUFFIXES[suffix](f.read())
