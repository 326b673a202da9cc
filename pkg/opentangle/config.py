import os
from dataclasses import dataclass, replace

import yaml

from opentangle import TANGLE_PATH

DEFAULT_CONFIG = os.path.join(TANGLE_PATH, "config.yaml")
BUDGET_ENV = "OPENTANGLE_BUDGET"


@dataclass(frozen=True)
class Config:
  max_crossings: int = 6
  max_depth: int = 2
  max_nodes: int = 400
  max_colorings: int = 100000
  max_degree: int = 4
  iso_max_crossings: int = 16


def load_config(path: str | None = None) -> Config:
  with open(path or DEFAULT_CONFIG, encoding='utf-8') as f:
    raw = yaml.safe_load(f) or {}

  explore = raw.get("explore", {})
  cfg = Config(
    max_crossings=int(explore.get("max_crossings", Config.max_crossings)),
    max_depth=int(explore.get("max_depth", Config.max_depth)),
    max_nodes=int(explore.get("max_nodes", Config.max_nodes)),
    max_colorings=int(raw.get("coloring", {}).get("max_colorings", Config.max_colorings)),
    max_degree=int(raw.get("homology", {}).get("max_degree", Config.max_degree)),
    iso_max_crossings=int(raw.get("isomorphism", {}).get("max_crossings", Config.iso_max_crossings)),
  )

  budget = os.environ.get(BUDGET_ENV)
  if budget:
    cfg = replace(cfg, max_depth=int(budget))
  return cfg
