import pytest

from dynsa import SENTINEL, DynamicText
from dynsa.errors import PositionError, SymbolError
from dynsa.text import default_k, format_symbol, to_symbol


def test_construction_and_padding():
    t = DynamicText(b"banana", 2)
    assert (t.n, t.k, t.padded_length, t.version) == (6, 2, 8, 0)
    assert t.char_at(1) == ord("b")
    assert t.char_at(7) == SENTINEL
    with pytest.raises(PositionError):
        t.char_at(9)
    with pytest.raises(PositionError):
        t.char_at(0)


def test_k_is_clamped():
    assert DynamicText(b"a", 5).k == 1
    assert DynamicText(b"abc", 0).k == 1
    t = DynamicText(b"aaaaaaaa", 4)
    assert t.n == 8 and t.char_at(9) == SENTINEL and t.char_at(8) == ord("a")


def test_empty_text_rejected():
    with pytest.raises(ValueError):
        DynamicText(b"", 1)


def test_substitute():
    t = DynamicText(b"banana", 2)
    ch = t.substitute(6, "o")
    assert t.to_bytes() == b"banano"
    assert (ch.pos, ch.old, ch.new, ch.version) == (6, ord("a"), ord("o"), 1)
    again = t.substitute(6, ord("o"))
    assert again.is_noop and again.version == 2 and t.version == 2


@pytest.mark.parametrize("pos", [0, 7, -1])
def test_substitute_bounds(pos):
    t = DynamicText(b"banana", 2)
    with pytest.raises(PositionError):
        t.substitute(pos, "x")
    assert t.version == 0


def test_sentinel_cannot_be_substituted():
    t = DynamicText(b"banana", 2)
    with pytest.raises(SymbolError):
        t.substitute(1, SENTINEL)


def test_any_byte_is_accepted():
    raw = bytes(range(256))
    t = DynamicText(raw, 3)
    assert [t.char_at(p) for p in range(1, 257)] == list(raw)
    assert t.char_at(257) == SENTINEL


def test_symbol_helpers():
    assert to_symbol("a") == to_symbol(b"a") == to_symbol(97) == 97
    with pytest.raises(SymbolError):
        to_symbol("ab")
    with pytest.raises(SymbolError):
        to_symbol(300)
    assert format_symbol(SENTINEL) == "$"
    assert format_symbol(0) == "\\x00"
    assert [default_k(n) for n in (1, 2, 4, 5, 16, 17)] == [1, 2, 2, 3, 4, 5]


def test_char_at_tracks_substitutions():
    t = DynamicText(b"abcabc", 2)
    t.substitute(2, "z")
    t.substitute(2, "y")
    t.substitute(5, "q")
    assert t.to_bytes() == b"aycaqc"
    assert [t.char_at(p) == SENTINEL for p in range(1, 9)] == [False] * 6 + [True] * 2
