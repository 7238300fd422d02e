"""One object wiring the text, LCE index, k-words tree and query engine."""

from __future__ import annotations

from .derived import DerivedQueries, SaRange
from .engine import Probe, QueryBudget, SuffixArrayEngine
from .errors import PositionError
from .kwords import KWordsTree
from .lce import DEFAULT_SEED, LceIndex
from .text import SENTINEL, ChangeRecord, DynamicText, to_symbol


class DynamicSuffixArray:
    """Suffix array of a text under single-symbol substitutions.

    ``k`` trades update cost (about ``k`` tree operations per substitution)
    against query cost (about ``n/k`` LCE calls per SA/iSA query).  It is
    clamped to ``[1, n]`` and defaults to ``ceil(sqrt(n))``.

    >>> dsa = DynamicSuffixArray(b"banana", k=2)
    >>> dsa.suffix_array()
    [2, 4, 6, 1, 3, 5]
    >>> _ = dsa.substitute(6, "o")
    >>> dsa.sa(1), dsa.isa(6)
    (2, 6)
    """

    def __init__(
        self,
        data,
        k: int | None = None,
        seed: int = DEFAULT_SEED,
        backend: str | None = None,
        budget: QueryBudget | None = None,
        probe: Probe | None = None,
    ):
        self.text = DynamicText(data, k)
        self.lce = LceIndex(self.text, seed=seed, backend=backend)
        self.tree = KWordsTree(self.text, self.lce, seed=seed)
        self.engine = SuffixArrayEngine(self.tree, budget, probe)
        self.derived = DerivedQueries(self.text, self.lce, self.engine)

    @property
    def n(self) -> int:
        return self.text.n

    @property
    def k(self) -> int:
        return self.text.k

    @property
    def counters(self):
        return self.lce.counters

    @property
    def backend(self) -> str:
        return self.lce.backend

    def substitute(self, pos: int, sym) -> ChangeRecord:
        change = self.text.substitute(pos, sym)
        self.lce.apply_change(change)
        self.tree.apply_change(change)
        return change

    def sa(self, r: int) -> int:
        if not 1 <= r <= self.n:
            raise PositionError(f"rank {r} outside 1..{self.n}")
        return self.engine.sa(r)

    def isa(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise PositionError(f"position {i} outside 1..{self.n}")
        return self.engine.isa(i)

    def bwt(self, r: int) -> int:
        return self.derived.bwt_at(r)

    def lcp_array(self, r: int) -> int:
        return self.derived.lcp_array_at(r)

    def st_locate(self, i: int, j: int) -> SaRange:
        return self.derived.st_locate(i, j)

    def st_child(self, rng, sym) -> SaRange | None:
        if sym != SENTINEL:
            sym = to_symbol(sym)
        return self.derived.st_child(rng, sym)

    def st_parent(self, rng) -> SaRange:
        return self.derived.st_parent(rng)

    def suffix_array(self) -> list[int]:
        return [self.engine.sa(r) for r in range(1, self.n + 1)]

    def inverse_suffix_array(self) -> list[int]:
        return [self.engine.isa(i) for i in range(1, self.n + 1)]

    def __repr__(self):
        return f"DynamicSuffixArray(n={self.n}, k={self.k}, version={self.text.version}, backend={self.backend!r})"
