"""Query cost against k on a repeat-heavy text.

Random text has almost no long repeats, so SA queries there rarely touch a
word node with more than one occurrence and the LCE counter sits near zero
for every k.  A text built from one short block repeated many times, with a
few sparse mutations, keeps word nodes large and shows the n/k behaviour
directly.
"""

import random

import pytest

from dynsa import DynamicSuffixArray

N = 1 << 14
KS = (16, 128, 1024)


def repeat_heavy(n, block_len=32, mutations=16, seed=8):
    rng = random.Random(seed)
    block = bytes(rng.choice(b"ab") for _ in range(block_len))
    data = bytearray((block * (n // block_len + 1))[:n])
    for _ in range(mutations):
        data[rng.randrange(n)] = ord("c")
    return bytes(data)


def avg_sa_calls(data, k, queries=200):
    dsa = DynamicSuffixArray(data, k=k)
    rng = random.Random(1)
    before = dsa.counters.lce_calls
    for _ in range(queries):
        dsa.sa(rng.randint(1, dsa.n))
    return (dsa.counters.lce_calls - before) / queries


@pytest.mark.slow
def test_repeat_heavy_cost_falls_with_k():
    data = repeat_heavy(N)
    avgs = [avg_sa_calls(data, k) for k in KS]
    assert avgs[0] > avgs[1] > avgs[2] > 0
    assert avgs[0] / avgs[2] >= 8
    # n/k shrinks by 64 across the range; the polylog factor absorbs the rest
    assert avgs[0] / avgs[2] >= 64 / 4
