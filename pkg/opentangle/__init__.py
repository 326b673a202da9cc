import os
TANGLE_PATH = os.path.dirname(os.path.abspath(__file__))
DIAGRAM_PATH = os.path.join(TANGLE_PATH, "diagrams")
ALGEBRA_PATH = os.path.join(TANGLE_PATH, "algebras")
