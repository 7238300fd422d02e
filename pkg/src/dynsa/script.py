"""Operation scripts: parse and replay update/query commands.

One command per line; ``#`` starts a comment.  Grammar::

    SUB <pos> <char>            substitute (no output)
    SA <r> | ISA <i> | BWT <r> | LCPARR <r>
    STLOC <i> <j>
    STCHILD <lo> <hi> <char|$>
    STPARENT <lo> <hi>

``<char>`` is one byte, written literally or as ``\\xNN``.  ``$`` stands
for the sentinel and is accepted only by STCHILD.  Each query prints
``<CMD> <args> -> <result>``; symbols print as characters (``$`` for the
sentinel, ``\\xNN`` for non-printable bytes) and ranges as ``lo hi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DynSAError
from .index import DynamicSuffixArray
from .text import SENTINEL, format_symbol

ARITY = {
    "SUB": ("int", "char"),
    "SA": ("int",),
    "ISA": ("int",),
    "BWT": ("int",),
    "LCPARR": ("int",),
    "STLOC": ("int", "int"),
    "STCHILD": ("int", "int", "edge"),
    "STPARENT": ("int", "int"),
}


class ScriptError(DynSAError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Command:
    line: int
    name: str
    raw: tuple[str, ...]
    args: tuple

    def label(self) -> str:
        return " ".join((self.name,) + self.raw)


def _parse_char(token: str, line: int, allow_sentinel: bool) -> int:
    if token == "$" and allow_sentinel:
        return SENTINEL
    if len(token) == 4 and token.startswith("\\x"):
        try:
            return int(token[2:], 16)
        except ValueError:
            pass
    if len(token) == 1 and ord(token) < 256:
        return ord(token)
    raise ScriptError(line, f"expected a single byte, got {token!r}")


def parse_script(lines: Iterable[str]) -> list[Command]:
    out = []
    for lineno, text in enumerate(lines, 1):
        text = text.split("#", 1)[0].strip()
        if not text:
            continue
        name, *tokens = text.split()
        name = name.upper()
        kinds = ARITY.get(name)
        if kinds is None:
            raise ScriptError(lineno, f"unknown command {name!r}")
        if len(tokens) != len(kinds):
            raise ScriptError(lineno, f"{name} takes {len(kinds)} argument(s), got {len(tokens)}")
        args = []
        for kind, tok in zip(kinds, tokens):
            if kind == "int":
                try:
                    args.append(int(tok))
                except ValueError:
                    raise ScriptError(lineno, f"expected an integer, got {tok!r}") from None
            else:
                args.append(_parse_char(tok, lineno, allow_sentinel=kind == "edge"))
        out.append(Command(lineno, name, tuple(tokens), tuple(args)))
    return out


def _fmt_range(rng) -> str:
    return "NONE" if rng is None else f"{rng[0]} {rng[1]}"


def execute(dsa: DynamicSuffixArray, commands: Iterable[Command]) -> Iterator[str]:
    """Run commands in order, yielding one output line per query.

    Range and argument errors are re-raised as :class:`ScriptError` carrying
    the offending line number.
    """
    for cmd in commands:
        a = cmd.args
        try:
            if cmd.name == "SUB":
                dsa.substitute(a[0], a[1])
                continue
            if cmd.name == "SA":
                result = str(dsa.sa(a[0]))
            elif cmd.name == "ISA":
                result = str(dsa.isa(a[0]))
            elif cmd.name == "BWT":
                result = format_symbol(dsa.bwt(a[0]))
            elif cmd.name == "LCPARR":
                result = str(dsa.lcp_array(a[0]))
            elif cmd.name == "STLOC":
                result = _fmt_range(dsa.st_locate(a[0], a[1]))
            elif cmd.name == "STCHILD":
                result = _fmt_range(dsa.st_child((a[0], a[1]), a[2]))
            else:
                result = _fmt_range(dsa.st_parent((a[0], a[1])))
        except (IndexError, ValueError) as exc:
            raise ScriptError(cmd.line, str(exc)) from exc
        yield f"{cmd.label()} -> {result}"
