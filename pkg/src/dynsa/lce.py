"""Dynamic longest-common-extension index over the padded text.

The fingerprint kernel is chosen at import time: the compiled
``_fingerprint_ext`` when it was built, else the pure-Python
``_fingerprint``.  Setting ``DYNSA_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os
import random

from . import _fingerprint
from .errors import PositionError, VersionError
from .text import ChangeRecord, DynamicText

DEFAULT_SEED = 0x5EED

try:
    if os.environ.get("DYNSA_PURE_PYTHON"):
        raise ImportError("pure-Python kernel requested")
    from . import _fingerprint_ext
except ImportError:
    _fingerprint_ext = None

BACKENDS = {"python": _fingerprint.FingerprintStore}
if _fingerprint_ext is not None:
    BACKENDS["cython"] = _fingerprint_ext.FingerprintStore

DEFAULT_BACKEND = "cython" if "cython" in BACKENDS else "python"

LESS, EQUAL, GREATER = -1, 0, 1


def make_store(symbols, seed: int = DEFAULT_SEED, backend: str | None = None):
    backend = backend or DEFAULT_BACKEND
    try:
        cls = BACKENDS[backend]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {backend!r}") from None
    rng = random.Random(seed)
    base1 = rng.randrange(1 << 20, _fingerprint.MOD - 1)
    base2 = rng.randrange(1 << 20, _fingerprint.MOD - 1)
    while base2 == base1:
        base2 = rng.randrange(1 << 20, _fingerprint.MOD - 1)
    return cls(symbols, base1, base2)


class Counters:
    """Instrumentation counters.

    ``lce_calls`` and ``fingerprint_disagreements`` live in the kernel; the
    rest are bumped by the tree and query code.
    """

    _local = ("tree_node_visits", "elements_scanned", "word_insertions", "word_deletions")

    def __init__(self, store):
        self._store = store
        self.reset()

    @property
    def lce_calls(self) -> int:
        return self._store.calls

    @property
    def fingerprint_disagreements(self) -> int:
        return self._store.disagreements

    def reset(self):
        self._store.reset_counters()
        for name in self._local:
            setattr(self, name, 0)

    def snapshot(self) -> dict:
        out = {"lce_calls": self.lce_calls, "fingerprint_disagreements": self.fingerprint_disagreements}
        out.update((name, getattr(self, name)) for name in self._local)
        return out

    def __repr__(self):
        return f"Counters({self.snapshot()})"


class LceIndex:
    """LCP, LCS and suffix comparisons on a :class:`DynamicText`.

    Public methods validate their arguments and the bound version.  The
    ``store`` attribute exposes the raw kernel for internal hot paths that
    have already validated.
    """

    def __init__(self, text: DynamicText, seed: int = DEFAULT_SEED, backend: str | None = None):
        self.text = text
        self.seed = seed
        self.store = make_store(text.symbols, seed, backend)
        self.backend = self.store.backend
        self.bound_version = text.version
        self.counters = Counters(self.store)

    def _admit(self):
        if self.bound_version != self.text.version:
            raise VersionError(
                f"LCE index at version {self.bound_version}, text at {self.text.version}"
            )

    def _check(self, pos: int, hi: int):
        if not 1 <= pos <= hi:
            raise PositionError(f"position {pos} outside 1..{hi}")

    def lcp(self, i: int, j: int) -> int:
        """Longest common prefix of the padded suffixes at ``i`` and ``j``."""
        self._admit()
        top = self.text.padded_length
        self._check(i, top)
        self._check(j, top)
        return self.store.lcp(i, j, top)

    def lcs(self, i: int, j: int) -> int:
        """Longest common suffix of the prefixes ending at ``i`` and ``j``."""
        self._admit()
        self._check(i, self.text.n)
        self._check(j, self.text.n)
        return self.store.lcs(i, j, self.text.n)

    def compare(self, i: int, j: int) -> int:
        self._admit()
        self._check(i, self.text.n)
        self._check(j, self.text.n)
        return self.store.compare(i, j)

    def compare_with_window(self, i: int, start: int, end: int) -> tuple[int, int]:
        """Compare suffix ``i`` with the finite string ``S[start..end]``.

        Returns ``(order, matched)``.  ``order`` is ``EQUAL`` when the window
        is a prefix of the suffix (then ``matched`` is the window length);
        otherwise it is the order of the suffix relative to the window.
        """
        self._admit()
        n = self.text.n
        self._check(i, n)
        self._check(start, n)
        self._check(end, n)
        if start > end:
            raise PositionError(f"empty window {start}..{end}")
        length = end - start + 1
        matched = self.store.lcp(i, start, length)
        if matched >= length:
            return EQUAL, length
        a = self.store.symbol(i + matched)
        b = self.store.symbol(start + matched)
        return (LESS if a < b else GREATER), matched

    def apply_change(self, change: ChangeRecord):
        if change.version != self.bound_version + 1:
            raise VersionError(
                f"change for version {change.version} cannot follow version {self.bound_version}"
            )
        self.store.set(change.pos, change.new)
        self.bound_version = change.version
