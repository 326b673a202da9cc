import glob
import os

from opentangle import ALGEBRA_PATH, DIAGRAM_PATH
from opentangle.codec import load_diagram
from opentangle.codec.algebra_file import load_algebra

ALL_DIAGRAMS = sorted(os.path.basename(pd).split('.')[0] for pd in glob.glob(f"{DIAGRAM_PATH}/*.pd"))
ALL_ALGEBRAS = sorted(os.path.basename(f) for f in glob.glob(f"{ALGEBRA_PATH}/*.json"))


def diagram_path(name: str) -> str:
  return os.path.join(DIAGRAM_PATH, f"{name}.pd")


def algebra_path(name: str) -> str:
  return os.path.join(ALGEBRA_PATH, name)


def named_diagram(name: str):
  return load_diagram(diagram_path(name))


def named_algebra(name: str):
  return load_algebra(algebra_path(name))
