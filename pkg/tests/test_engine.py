import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynsa import DynamicSuffixArray, QueryBudget
from dynsa.clusters import Cluster, Singleton
from dynsa.errors import PositionError
from dynsa.oracle import OracleSnapshot

from _support import ADVERSARIAL, OracleProbe

# calibrated once on the adversarial families below (worst observed ratio
# about 0.23), then frozen
WORK_CONSTANT = 1


def test_banana_queries(backend):
    dsa = DynamicSuffixArray(b"banana", k=2, backend=backend)
    assert dsa.isa(2) == 1
    assert dsa.isa(1) == 4
    assert dsa.sa(1) == 2
    assert dsa.sa(5) == 3
    assert dsa.suffix_array() == [2, 4, 6, 1, 3, 5]
    assert dsa.inverse_suffix_array() == [4, 1, 5, 2, 6, 3]
    one = DynamicSuffixArray(b"a", backend=backend)
    assert (one.sa(1), one.isa(1)) == (1, 1)


def test_close_smaller(backend):
    dsa = DynamicSuffixArray(b"banana", k=2, backend=backend)
    eng = dsa.engine
    assert eng.close_smaller_count(3, dsa.tree.find(3)[0]) == 0
    assert eng.close_smaller_count(5, dsa.tree.find(5)[0]) == 1
    assert eng.close_smaller_count(1, dsa.tree.find(1)[0]) == 0


def test_find_pivot(backend):
    dsa = DynamicSuffixArray(b"aaaaaaaa", k=4, backend=backend)
    eng = dsa.engine
    assert eng.find_pivot([Singleton(6)]) == 6
    assert eng.find_pivot([Cluster(1, 1, 5, 8, True)]) == 3
    banana = DynamicSuffixArray(b"banana", k=2, backend=backend).engine
    assert banana.find_pivot([Singleton(2), Singleton(4)]) == 2
    with pytest.raises(ValueError):
        eng.find_pivot([])


@pytest.mark.parametrize("threshold", [1, 32])
def test_select_in_node(backend, threshold):
    dsa = DynamicSuffixArray(b"aaaaaaaa", k=4, backend=backend, budget=QueryBudget(small_set_threshold=threshold))
    node = dsa.tree.find(1)[0]
    assert [dsa.engine.select_in_node(node, r) for r in range(1, 6)] == [1, 2, 3, 4, 5]
    with pytest.raises(PositionError):
        dsa.engine.select_in_node(node, 6)


def test_bounds(backend):
    dsa = DynamicSuffixArray(b"banana", k=2, backend=backend)
    for bad in (0, 7):
        with pytest.raises(PositionError):
            dsa.sa(bad)
        with pytest.raises(PositionError):
            dsa.isa(bad)


def test_budget_floor():
    b = QueryBudget(max_pivot_rounds=1).for_size(1000)
    assert b.max_pivot_rounds >= math.ceil(math.log(1000, 4 / 3)) + 8


def test_substitution_updates_queries(backend):
    dsa = DynamicSuffixArray(b"banana", k=2, backend=backend)
    dsa.substitute(6, "o")
    assert dsa.suffix_array() == OracleSnapshot(b"banano").suffix_array()


@pytest.mark.parametrize("threshold", [1, 4, 32])
def test_churn_matches_oracle(backend, threshold):
    rng = random.Random(threshold)
    for trial in range(12):
        sigma = rng.choice([1, 2, 4, 26])
        letters = bytes(range(97, 97 + sigma))
        n = rng.randint(1, 70)
        k = rng.randint(1, n)
        probe = OracleProbe(n, k)
        dsa = DynamicSuffixArray(
            bytes(rng.choice(letters) for _ in range(n)),
            k=k,
            seed=trial,
            backend=backend,
            budget=QueryBudget(small_set_threshold=threshold),
            probe=probe,
        )
        for _ in range(8):
            o = OracleSnapshot(dsa.text.to_bytes(), k)
            probe.rebase(o.inverse())
            sa = dsa.suffix_array()
            isa = dsa.inverse_suffix_array()
            assert sa == o.suffix_array()
            assert isa == o.inverse()
            assert all(dsa.sa(isa[i - 1]) == i for i in range(1, n + 1))
            dsa.substitute(rng.randint(1, n), rng.choice(letters))
        assert probe.clean(), probe.violations


def work_bound(n, k):
    lg = max(1.0, math.log2(n))
    return WORK_CONSTANT * (n / k + lg) * lg * lg


@pytest.mark.parametrize("name", sorted(ADVERSARIAL))
def test_work_bound(backend, name):
    n = 256
    data = ADVERSARIAL[name](n).encode()
    for k in (2, 16, 256):
        dsa = DynamicSuffixArray(data, k=k, backend=backend, budget=QueryBudget(small_set_threshold=1))
        c = dsa.counters
        worst = 0
        for q in range(1, n + 1):
            before = c.lce_calls
            dsa.sa(q)
            worst = max(worst, c.lce_calls - before)
            before = c.lce_calls
            dsa.isa(q)
            worst = max(worst, c.lce_calls - before)
        assert worst <= work_bound(n, k), (k, worst)


@settings(max_examples=40, deadline=None)
@given(
    data=st.text(alphabet="ab", min_size=1, max_size=40),
    k=st.integers(1, 40),
    edits=st.lists(st.tuples(st.integers(1, 40), st.sampled_from("abc")), max_size=6),
)
def test_property_round_trip(data, k, edits):
    dsa = DynamicSuffixArray(data.encode(), k=k, budget=QueryBudget(small_set_threshold=1))
    for pos, ch in edits:
        dsa.substitute((pos - 1) % dsa.n + 1, ch)
    sa = dsa.suffix_array()
    assert sa == OracleSnapshot(dsa.text.to_bytes()).suffix_array()
    assert [dsa.isa(p) for p in sa] == list(range(1, dsa.n + 1))
