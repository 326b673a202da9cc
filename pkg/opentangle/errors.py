class TangleError(RuntimeError):
  """Base class for every error raised by opentangle."""


class PdSyntaxError(TangleError, SyntaxError):
  pass


class InvalidDiagram(TangleError):
  pass


class SchemaError(TangleError, ValueError):
  pass


class RangeError(TangleError, ValueError):
  pass


class NotApplicable(TangleError):
  def __init__(self, message: str, step: int | None = None):
    super().__init__(message if step is None else f"step {step}: {message}")
    self.step = step


class MixedCrossing(TangleError):
  pass


class Unsupported(TangleError):
  pass


class BudgetExceeded(TangleError):
  pass


class NonUnit(TangleError, ValueError):
  pass


class ClosureViolation(TangleError):
  pass


class Incompatible(TangleError):
  pass


class AxiomsNotVerified(TangleError):
  pass


class NotFilling(TangleError):
  pass


class NotACocycle(TangleError):
  pass


class RecursionUnsolvable(TangleError):
  pass


class BoundaryNonzero(TangleError):
  pass


class ColoringOverflow(TangleError):
  pass


class ScriptSyntaxError(TangleError, SyntaxError):
  pass
