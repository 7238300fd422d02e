"""Mutable text with sentinel padding and 1-based positions."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PositionError, SymbolError

#: Ordinal of the padding symbol.  It orders above every byte value.
SENTINEL = 256


def to_symbol(value) -> int:
    """Coerce an int, a 1-byte ``bytes`` or a 1-char ``str`` to a byte ordinal."""
    if isinstance(value, (bytes, bytearray)):
        if len(value) != 1:
            raise SymbolError(f"expected a single byte, got {value!r}")
        return value[0]
    if isinstance(value, str):
        encoded = value.encode("latin-1") if len(value) == 1 else b""
        if len(encoded) != 1:
            raise SymbolError(f"expected a single character, got {value!r}")
        return encoded[0]
    if isinstance(value, int) and not isinstance(value, bool):
        if value == SENTINEL:
            raise SymbolError("the sentinel cannot be stored inside the text")
        if not 0 <= value <= 255:
            raise SymbolError(f"symbol ordinal out of range: {value}")
        return value
    raise SymbolError(f"unsupported symbol type: {type(value).__name__}")


def format_symbol(sym: int) -> str:
    if sym == SENTINEL:
        return "$"
    if 33 <= sym <= 126:
        return chr(sym)
    return f"\\x{sym:02x}"


def default_k(n: int) -> int:
    return max(1, math.isqrt(n - 1) + 1) if n > 1 else 1


@dataclass(frozen=True)
class ChangeRecord:
    pos: int
    old: int
    new: int
    version: int

    @property
    def is_noop(self) -> bool:
        return self.old == self.new


class DynamicText:
    """A fixed-length byte sequence supporting single-symbol substitutions.

    Positions are 1-based.  Positions ``n+1 .. n+k`` read as :data:`SENTINEL`,
    so every position in ``1..n`` starts a full ``k``-symbol word.

    >>> t = DynamicText(b"banana", 2)
    >>> t.char_at(1) == ord("b"), t.char_at(7) == SENTINEL
    (True, True)
    """

    def __init__(self, data, k: int | None = None):
        if isinstance(data, str):
            data = data.encode("latin-1")
        data = bytes(data)
        if not data:
            raise ValueError("text must contain at least one symbol")
        self.n = len(data)
        if k is None:
            k = default_k(self.n)
        self.k = min(max(int(k), 1), self.n)
        # index 0 is unused so that list offsets match 1-based positions
        self._sym = [0] + list(data) + [SENTINEL] * self.k
        self.version = 0

    @property
    def padded_length(self) -> int:
        return self.n + self.k

    @property
    def symbols(self) -> list[int]:
        """The padded symbol list, including the unused slot 0.  Do not mutate."""
        return self._sym

    def char_at(self, pos: int) -> int:
        if not 1 <= pos <= self.n + self.k:
            raise PositionError(f"position {pos} outside 1..{self.n + self.k}")
        return self._sym[pos]

    def substitute(self, pos: int, sym) -> ChangeRecord:
        if not 1 <= pos <= self.n:
            raise PositionError(f"position {pos} outside 1..{self.n}")
        sym = to_symbol(sym)
        old = self._sym[pos]
        self._sym[pos] = sym
        self.version += 1
        return ChangeRecord(pos, old, sym, self.version)

    def to_bytes(self) -> bytes:
        return bytes(self._sym[1 : self.n + 1])

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        preview = self.to_bytes()[:32]
        return f"DynamicText({preview!r}{'...' if self.n > 32 else ''}, k={self.k}, version={self.version})"
