"""Brute-force reference answers.

Nothing here imports the rest of the package: every answer is recomputed from
a plain copy of the text by direct symbol comparison.  Slow by design.
"""

from __future__ import annotations

# kept local on purpose; must agree with dynsa.text.SENTINEL
SENTINEL_HIGH = 256
SENTINEL_LOW = -1


class OracleSnapshot:
    """Immutable copy of a text plus its brute-force structures.

    ``sentinel_high=False`` flips the padding order (sentinel below every
    byte).  It exists only as a negative control.
    """

    def __init__(self, data, k: int = 1, sentinel_high: bool = True):
        if isinstance(data, str):
            data = data.encode("latin-1")
        self.data = tuple(bytes(data))
        self.n = len(self.data)
        self.k = max(1, k)
        self.sentinel = SENTINEL_HIGH if sentinel_high else SENTINEL_LOW
        # 1-based padded copy
        self.padded = (None,) + self.data + (self.sentinel,) * self.k
        self._sa = None

    def char(self, pos: int):
        if not 1 <= pos <= self.n + self.k:
            raise IndexError(pos)
        return self.padded[pos]

    def suffix(self, i: int) -> tuple:
        return self.padded[i:]

    def suffix_array(self) -> list[int]:
        if self._sa is None:
            self._sa = sorted(range(1, self.n + 1), key=self.suffix)
        return list(self._sa)

    def inverse(self) -> list[int]:
        return inverse(self.suffix_array())

    def lcp(self, i: int, j: int) -> int:
        top = self.n + self.k
        if not (1 <= i <= top and 1 <= j <= top):
            raise IndexError((i, j))
        l = 0
        while max(i, j) + l <= top and self.padded[i + l] == self.padded[j + l]:
            l += 1
        return l

    def lcs(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError((i, j))
        l = 0
        while min(i, j) - l >= 1 and self.padded[i - l] == self.padded[j - l]:
            l += 1
        return l

    def compare(self, i: int, j: int) -> int:
        a, b = self.suffix(i), self.suffix(j)
        return (a > b) - (a < b)

    def bwt(self) -> list:
        return [self.padded[p - 1] if p > 1 else self.sentinel for p in self.suffix_array()]

    def lcp_array(self) -> list[int]:
        """Entries for ranks 2..n (index 0 holds rank 2)."""
        sa = self.suffix_array()
        out = []
        for r in range(1, self.n):
            a, b = sa[r - 1], sa[r]
            l = 0
            while max(a, b) + l <= self.n and self.padded[a + l] == self.padded[b + l]:
                l += 1
            out.append(l)
        return out

    def prefix_range(self, i: int, j: int) -> tuple[int, int] | None:
        pattern = self.padded[i : j + 1]
        ranks = [r for r, p in enumerate(self.suffix_array(), 1) if self.padded[p : p + len(pattern)] == pattern]
        if not ranks:
            return None
        if ranks != list(range(ranks[0], ranks[-1] + 1)):
            raise AssertionError("prefix class is not contiguous")
        return ranks[0], ranks[-1]

    def kwords(self) -> list[tuple[tuple, tuple[int, ...]]]:
        """Sorted distinct padded k-words with their ascending occurrences."""
        groups = {}
        for i in range(1, self.n + 1):
            groups.setdefault(self.padded[i : i + self.k], []).append(i)
        return [(w, tuple(groups[w])) for w in sorted(groups)]

    def suffix_tree_ranges(self) -> set[tuple[int, int]]:
        """Rank ranges of every node of the suffix tree of the terminated suffixes.

        Built from an explicit uncompacted trie: a trie node survives
        compaction when it is the root, a leaf or has two or more children.
        """
        sa = self.suffix_array()
        rank = {p: r for r, p in enumerate(sa, 1)}
        root = {}
        for p in range(1, self.n + 1):
            node = root
            for c in self.data[p - 1 :] + (self.sentinel,):
                node = node.setdefault(c, {})
            node[None] = p
        out = set()

        def walk(node, is_root):
            ranks = []
            branching = 0
            for key, child in node.items():
                if key is None:
                    ranks.append(rank[child])
                else:
                    branching += 1
                    ranks.extend(walk(child, False))
            if is_root or branching != 1:
                out.add((min(ranks), max(ranks)))
            return ranks

        walk(root, True)
        return out


def suffix_array(data, sentinel_high: bool = True) -> list[int]:
    return OracleSnapshot(data, 1, sentinel_high).suffix_array()


def inverse(sa) -> list[int]:
    m = len(sa)
    if sorted(sa) != list(range(1, m + 1)):
        raise ValueError("not a permutation of 1..m")
    out = [0] * m
    for r, p in enumerate(sa, 1):
        out[p - 1] = r
    return out
