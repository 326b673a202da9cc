#!/usr/bin/env python3
import os
import filecmp
import tempfile
from opentangle import ALGEBRA_PATH
from opentangle.generator.generator import create_all, generated_suffix


def test_generator():
  with tempfile.TemporaryDirectory() as d:
    create_all(d)

    ignore = [f for f in os.listdir(ALGEBRA_PATH) if not f.endswith(generated_suffix)]
    comp = filecmp.dircmp(ALGEBRA_PATH, d, ignore=ignore)

    err = "Generated algebra mismatch\n\n"
    err += f"Different files: {comp.diff_files}\n"
    err += f"Missing files: {comp.left_only + comp.right_only}\n\n"
    err += "Run opentangle/generator/generator.py to regenerate algebra files."
    assert len(comp.diff_files) == 0 and not comp.left_only and not comp.right_only, err


if __name__ == "__main__":
  test_generator()
