import pytest
from hypothesis import given
from hypothesis import strategies as st

from dynsa.oracle import OracleSnapshot, inverse, suffix_array


def test_suffix_arrays():
    assert suffix_array(b"banana") == [2, 4, 6, 1, 3, 5]
    assert suffix_array(b"a") == [1]
    assert suffix_array(b"aaaa") == [1, 2, 3, 4]
    # with the sentinel below every byte the order flips for unary text
    assert suffix_array(b"aaaa", sentinel_high=False) == [4, 3, 2, 1]


def test_inverse():
    assert inverse([2, 4, 6, 1, 3, 5]) == [4, 1, 5, 2, 6, 3]
    assert inverse([1]) == [1]
    assert inverse(list(range(1, 9))) == list(range(1, 9))
    with pytest.raises(ValueError):
        inverse([1, 1])


def test_scans():
    o = OracleSnapshot(b"banana", 2)
    assert (o.lcp(1, 3), o.lcp(2, 4), o.lcp(2, 2)) == (0, 3, 7)
    assert (o.lcs(3, 5), o.lcs(1, 3), o.lcs(4, 4)) == (2, 0, 4)
    assert (o.compare(2, 4), o.compare(3, 3), o.compare(1, 2)) == (-1, 0, 1)
    assert o.char(7) == 256
    with pytest.raises(IndexError):
        o.char(9)


def test_bwt_and_lcp():
    o = OracleSnapshot(b"banana")
    assert o.bwt() == [ord("b"), ord("n"), ord("n"), 256, ord("a"), ord("a")]
    assert OracleSnapshot(b"a").bwt() == [256]
    assert o.lcp_array()[0] == 3


def test_prefix_range_and_tree():
    o = OracleSnapshot(b"banana", 2)
    assert o.prefix_range(2, 4) == (1, 2)
    assert o.prefix_range(1, 1) == (4, 4)
    assert o.suffix_tree_ranges() == {(1, 6), (1, 3), (1, 2), (5, 6)} | {(r, r) for r in range(1, 7)}


def test_kwords():
    o = OracleSnapshot(b"banana", 2)
    assert [occ for _, occ in o.kwords()] == [(2, 4), (6,), (1,), (3, 5)]


@given(st.binary(min_size=1, max_size=60))
def test_sorted_and_strictly_increasing(data):
    o = OracleSnapshot(data)
    sa = o.suffix_array()
    assert sorted(sa) == list(range(1, len(data) + 1))
    assert all(o.compare(a, b) < 0 for a, b in zip(sa, sa[1:]))
    assert inverse(sa)[sa[0] - 1] == 1
