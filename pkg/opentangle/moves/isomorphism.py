#!/usr/bin/env python3
import logging

from opentangle.config import Config
from opentangle.diagram.canonical import isomorphism_maps
from opentangle.diagram.diagram import Diagram
from opentangle.errors import BudgetExceeded
from opentangle.moves.relation import ElementRelation, derive_relation

logger = logging.getLogger(__name__)


def isomorphism_relation(d1: Diagram, d2: Diagram, semiarc_map: dict[int, int], crossing_map: dict[int, int]) -> ElementRelation:
  return derive_relation(d1, d2, semiarc_map.items(), crossing_map.items())


def isomorphisms(d1: Diagram, d2: Diagram, max_crossings: int = Config.iso_max_crossings) -> list[ElementRelation]:
  """Every orientation preserving map isomorphism d1 -> d2 as a bijective element relation."""
  if len(d1.crossings) > max_crossings:
    raise BudgetExceeded(f"isomorphism search on {len(d1.crossings)} crossings, budget is {max_crossings}")
  maps = isomorphism_maps(d1, d2)
  logger.debug("%d isomorphisms between diagrams with %d crossings", len(maps), len(d1.crossings))
  return [isomorphism_relation(d1, d2, s_map, c_map) for s_map, c_map in maps]
