#!/usr/bin/env python3
import re
from dataclasses import dataclass

from opentangle.errors import ScriptSyntaxError
from opentangle.moves.reidemeister import MoveKind

# required and optional keys per command, labels are 1-based
COMMAND_KEYS = {
  MoveKind.R1_ADD: (("semiarc",), ("first", "side")),
  MoveKind.R1_DEL: (("crossing",), ()),
  MoveKind.R2_ADD: (("over", "under"), ("side", "under_side")),
  MoveKind.R2_DEL: (("face",), ()),
  MoveKind.R3: (("face",), ()),
}
CHOICES = {
  "first": ("under", "over"),
  "side": ("L", "R"),
  "under_side": ("L", "R"),
}
arg_pattern = re.compile(r'([a-z_]+)=(F?\d+|[A-Za-z]+)')


@dataclass(frozen=True)
class MoveCommand:
  kind: MoveKind
  args: tuple[tuple[str, str], ...] = ()

  def get(self, key: str, default: str | None = None) -> str | None:
    return dict(self.args).get(key, default)

  def label(self, key: str) -> int:
    """0-based index of a label argument, 'F4' and '4' both give 3."""
    return int(self.get(key).lstrip("F")) - 1

  def __str__(self) -> str:
    return " ".join([self.kind.value] + [f"{k}={v}" for k, v in self.args])


def parse_command(line: str, lineno: int = 1) -> MoveCommand:
  head, *rest = line.split()
  try:
    kind = MoveKind(head)
  except ValueError:
    raise ScriptSyntaxError(f"line {lineno}: unknown move {head!r}") from None
  if kind not in COMMAND_KEYS:
    raise ScriptSyntaxError(f"line {lineno}: {head!r} is not a scriptable move")

  required, optional = COMMAND_KEYS[kind]
  args = []
  for token in rest:
    m = arg_pattern.fullmatch(token)
    if m is None:
      raise ScriptSyntaxError(f"line {lineno}: malformed argument {token!r}")
    key, value = m.groups()
    if key not in required and key not in optional:
      raise ScriptSyntaxError(f"line {lineno}: {head} takes no argument {key!r}")
    if key in CHOICES and value not in CHOICES[key]:
      raise ScriptSyntaxError(f"line {lineno}: {key} must be one of {CHOICES[key]}")
    if key not in CHOICES and not value.lstrip("F").isdigit():
      raise ScriptSyntaxError(f"line {lineno}: {key} needs a label, got {value!r}")
    args.append((key, value))

  keys = [k for k, _ in args]
  if len(set(keys)) != len(keys):
    raise ScriptSyntaxError(f"line {lineno}: repeated argument")
  missing = [k for k in required if k not in keys]
  if missing:
    raise ScriptSyntaxError(f"line {lineno}: {head} is missing {', '.join(missing)}")
  return MoveCommand(kind, tuple(args))


def parse_move_script(text: str) -> list[MoveCommand]:
  commands = []
  for lineno, line in enumerate(text.splitlines(), start=1):
    line = line.split("#", 1)[0].strip()
    if line:
      commands.append(parse_command(line, lineno))
  return commands


def save_move_script(commands: list[MoveCommand]) -> str:
  return "".join(f"{c}\n" for c in commands)
