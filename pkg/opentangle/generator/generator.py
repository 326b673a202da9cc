#!/usr/bin/env python3
import glob
import os
from dataclasses import replace

from opentangle import ALGEBRA_PATH
from opentangle.codec.algebra_file import save_algebra
from opentangle.generator.recipes import RECIPES

generated_suffix = '.json'
STAMP = "AUTOGENERATED FILE, DO NOT EDIT"


def create_algebra(filename: str, output_path: str):
  alg = replace(RECIPES[filename](), comment=STAMP)
  save_algebra(alg, os.path.join(output_path, filename))


def create_all(output_path: str):
  # clear out old algebras
  for f in glob.glob(f"{output_path}/*{generated_suffix}"):
    os.remove(f)

  for filename in sorted(RECIPES):
    create_algebra(filename, output_path)


if __name__ == "__main__":
  create_all(ALGEBRA_PATH)
