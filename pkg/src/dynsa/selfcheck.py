"""Oracle-equivalence sweep over a text and a stream of random substitutions."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .index import DynamicSuffixArray
from .lce import DEFAULT_SEED
from .oracle import OracleSnapshot


@dataclass
class Counterexample:
    version: int
    text: bytes
    what: str
    at: int
    got: object
    expected: object

    def __str__(self):
        preview = self.text if len(self.text) <= 64 else self.text[:64] + b"..."
        return (
            f"version {self.version}, text {preview!r}: {self.what}[{self.at}] = {self.got!r}, "
            f"oracle says {self.expected!r}"
        )


def _first_diff(what, got, expected, version, text, offset=1):
    for idx, (g, e) in enumerate(zip(got, expected)):
        if g != e:
            return Counterexample(version, text, what, idx + offset, g, e)
    if len(got) != len(expected):
        return Counterexample(version, text, what, min(len(got), len(expected)) + offset, len(got), len(expected))
    return None


def check_once(dsa: DynamicSuffixArray, sentinel_high: bool = True) -> Counterexample | None:
    text = dsa.text.to_bytes()
    version = dsa.text.version
    o = OracleSnapshot(text, dsa.k, sentinel_high=sentinel_high)
    n = dsa.n
    checks = [
        ("SA", dsa.suffix_array(), o.suffix_array(), 1),
        ("ISA", dsa.inverse_suffix_array(), o.inverse(), 1),
        ("BWT", [dsa.bwt(r) for r in range(1, n + 1)], o.bwt(), 1),
        ("LCPARR", [dsa.lcp_array(r) for r in range(2, n + 1)], o.lcp_array(), 2),
    ]
    for what, got, expected, offset in checks:
        bad = _first_diff(what, got, expected, version, text, offset)
        if bad is not None:
            return bad
    return None


def self_check(
    data,
    k: int | None = None,
    trials: int = 100,
    seed: int = DEFAULT_SEED,
    flip_sentinel: bool = False,
    backend: str | None = None,
) -> Counterexample | None:
    """Check the index against the oracle before and after each of ``trials``
    random substitutions.  Returns the first counterexample, or ``None``.

    Substituted symbols are drawn from the text's own alphabet so repetitive
    inputs stay repetitive.  ``flip_sentinel`` makes the oracle order the
    sentinel below every byte; it is a negative control and must fail.
    """
    rng = random.Random(seed)
    dsa = DynamicSuffixArray(data, k=k, seed=seed, backend=backend)
    letters = sorted(set(dsa.text.to_bytes()))
    bad = check_once(dsa, sentinel_high=not flip_sentinel)
    for _ in range(trials):
        if bad is not None:
            return bad
        dsa.substitute(rng.randint(1, dsa.n), rng.choice(letters))
        bad = check_once(dsa, sentinel_high=not flip_sentinel)
    return bad
