"""BWT symbols, LCP-array entries and suffix-tree navigation on top of SA/iSA.

Suffix-tree nodes are handled as rank ranges ``(lo, hi)``: the suffixes at
ranks ``lo..hi`` are exactly those below the node.
"""

from __future__ import annotations

from typing import NamedTuple

from .engine import SuffixArrayEngine
from .errors import PositionError
from .lce import EQUAL, LESS, LceIndex
from .text import SENTINEL, DynamicText


class SaRange(NamedTuple):
    lo: int
    hi: int


class DerivedQueries:
    def __init__(self, text: DynamicText, lce: LceIndex, engine: SuffixArrayEngine):
        self.text = text
        self.lce = lce
        self.engine = engine
        self.store = lce.store

    def _rank(self, r: int, low: int = 1):
        if not low <= r <= self.text.n:
            raise PositionError(f"rank {r} outside {low}..{self.text.n}")

    def _range(self, rng) -> SaRange:
        lo, hi = rng
        if not 1 <= lo <= hi <= self.text.n:
            raise PositionError(f"invalid rank range ({lo}, {hi})")
        return SaRange(lo, hi)

    def bwt_at(self, r: int) -> int:
        self._rank(r)
        pos = self.engine.sa(r)
        return self.text.char_at(pos - 1) if pos > 1 else SENTINEL

    def lcp_array_at(self, r: int) -> int:
        if r == 1:
            raise PositionError("the LCP array is undefined at rank 1")
        self._rank(r, 2)
        a = self.engine.sa(r - 1)
        b = self.engine.sa(r)
        return min(self.store.lcp(a, b, self.text.padded_length), self.text.n - max(a, b) + 1)

    def _depth(self, a: int, b: int) -> int:
        """String depth shared by suffixes ``a`` and ``b``, excluding padding."""
        n = self.text.n
        if a == b:
            return n - a + 1
        return min(self.store.lcp(a, b, self.text.padded_length), n - max(a, b) + 1)

    def st_locate(self, i: int, j: int) -> SaRange:
        """Rank range of the suffixes that start with ``S[i..j]``."""
        n = self.text.n
        if not 1 <= i <= j <= n:
            raise PositionError(f"invalid substring ({i}, {j})")
        sa = self.engine.sa
        window = self.lce.compare_with_window
        anchor = self.engine.isa(i)
        # first rank in [1, anchor] whose suffix has the window as a prefix
        lo, hi = 1, anchor
        while lo < hi:
            mid = (lo + hi) // 2
            if window(sa(mid), i, j)[0] == LESS:
                lo = mid + 1
            else:
                hi = mid
        first = lo
        # last rank in [anchor, n] with the prefix
        lo, hi = anchor, n
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if window(sa(mid), i, j)[0] == EQUAL:
                lo = mid
            else:
                hi = mid - 1
        return SaRange(first, lo)

    def st_child(self, rng, sym) -> SaRange | None:
        """Child of the node ``rng`` along the edge starting with ``sym``.

        ``sym`` may be :data:`SENTINEL` to select a terminal edge.  Returns
        ``None`` when no such edge exists.
        """
        lo, hi = self._range(rng)
        if lo == hi:
            return None
        sa = self.engine.sa
        depth = self._depth(sa(lo), sa(hi))
        sym_at = self.store.symbol

        def key(r):
            return sym_at(sa(r) + depth)

        a, b = lo, hi + 1
        while a < b:
            mid = (a + b) // 2
            if key(mid) < sym:
                a = mid + 1
            else:
                b = mid
        first = a
        if first > hi or key(first) != sym:
            return None
        a, b = first, hi
        while a < b:
            mid = (a + b + 1) // 2
            if key(mid) == sym:
                a = mid
            else:
                b = mid - 1
        return SaRange(first, a)

    def st_parent(self, rng) -> SaRange:
        lo, hi = self._range(rng)
        n = self.text.n
        if (lo, hi) == (1, n):
            raise PositionError("the root has no parent")
        sa = self.engine.sa
        x = sa(lo)
        depth = 0
        if lo > 1:
            depth = self._depth(sa(lo - 1), x)
        if hi < n:
            depth = max(depth, self._depth(sa(hi + 1), x))
        if depth == 0:
            return SaRange(1, n)
        return self.st_locate(x, x + depth - 1)
