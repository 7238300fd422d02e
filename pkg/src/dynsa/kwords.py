"""Balanced search tree over the distinct k-length words of the padded text.

Nodes never store their word.  A node keeps a representative occurrence and
the word is read through the text whenever the tree needs to compare.  Every
node also keeps its occurrence positions in ascending order and the total
number of occurrences in its subtree, which makes rank/select descents
possible.

The balancing scheme is a treap with parent pointers.  Parent pointers let an
update remove a position through the ``owner`` table without comparing words,
which matters because by the time the tree sees a change the text already
holds the new symbol.
"""

from __future__ import annotations

import random
from typing import Iterator

from sortedcontainers import SortedList

from .errors import InvariantViolation, PositionError, VersionError
from .lce import LceIndex
from .text import ChangeRecord, DynamicText


class WordNode:
    __slots__ = ("rep", "occ", "own", "items", "prio", "left", "right", "parent")

    def __init__(self, rep: int, prio: float):
        self.rep = rep
        self.occ = SortedList((rep,))
        self.own = 1
        self.items = 1
        self.prio = prio
        self.left = None
        self.right = None
        self.parent = None

    def __len__(self):
        return self.own

    def __repr__(self):
        return f"WordNode(rep={self.rep}, occ={list(self.occ)[:8]}{'...' if len(self.occ) > 8 else ''})"


def _items(node):
    return node.items if node is not None else 0


def occ_count_in_range(node: WordNode, lo: int, hi: int) -> int:
    """Number of occurrences of ``node`` inside ``[lo, hi]``."""
    if lo > hi:
        return 0
    return node.occ.bisect_right(hi) - node.occ.bisect_left(lo)


class KWordsTree:
    """The k-words tree of a :class:`DynamicText`.

    >>> from dynsa.text import DynamicText
    >>> from dynsa.lce import LceIndex
    >>> t = DynamicText(b"banana", 2)
    >>> tree = KWordsTree(t, LceIndex(t))
    >>> [list(v.occ) for v in tree.nodes()]
    [[2, 4], [6], [1], [3, 5]]
    """

    def __init__(self, text: DynamicText, lce: LceIndex, seed: int = 0):
        if lce.bound_version != text.version:
            raise VersionError("LCE index is not bound to the current text version")
        self.text = text
        self.lce = lce
        self.k = text.k
        self.n = text.n
        self.counters = lce.counters
        self._rng = random.Random(seed)
        self._cmp = lce.store.cmp_prefix
        self.root = None
        self.owner: list[WordNode | None] = [None] * (self.n + 1)
        for i in range(1, self.n + 1):
            self._insert(i)
        self.bound_version = text.version

    # -- structure ------------------------------------------------------

    def _rotate_up(self, x: WordNode):
        p = x.parent
        g = p.parent
        if p.left is x:
            b = x.right
            p.left = b
            x.right = p
        else:
            b = x.left
            p.right = b
            x.left = p
        if b is not None:
            b.parent = p
        p.parent = x
        x.parent = g
        if g is None:
            self.root = x
        elif g.left is p:
            g.left = x
        else:
            g.right = x
        p.items = p.own + _items(p.left) + _items(p.right)
        x.items = x.own + _items(x.left) + _items(x.right)

    def _insert(self, i: int):
        cmp = self._cmp
        k = self.k
        v = self.root
        parent = None
        go_left = False
        visits = 0
        while v is not None:
            visits += 1
            c = cmp(i, v.rep, k)
            if c == 0:
                v.occ.add(i)
                v.own += 1
                self.owner[i] = v
                while v is not None:
                    v.items += 1
                    v = v.parent
                self.counters.tree_node_visits += visits
                return
            parent = v
            go_left = c < 0
            v = v.left if go_left else v.right
        self.counters.tree_node_visits += visits
        node = WordNode(i, self._rng.random())
        self.owner[i] = node
        node.parent = parent
        if parent is None:
            self.root = node
            return
        if go_left:
            parent.left = node
        else:
            parent.right = node
        a = parent
        while a is not None:
            a.items += 1
            a = a.parent
        while node.parent is not None and node.prio > node.parent.prio:
            self._rotate_up(node)

    def _remove(self, i: int):
        v = self.owner[i]
        v.occ.remove(i)
        v.own -= 1
        self.owner[i] = None
        a = v
        while a is not None:
            a.items -= 1
            a = a.parent
        if v.own:
            if v.rep == i:
                v.rep = v.occ[0]
            return
        # empty node: rotate it down to a leaf, then cut it off
        while v.left is not None or v.right is not None:
            if v.left is None:
                c = v.right
            elif v.right is None:
                c = v.left
            else:
                c = v.left if v.left.prio > v.right.prio else v.right
            self._rotate_up(c)
        p = v.parent
        if p is None:
            self.root = None
        elif p.left is v:
            p.left = None
        else:
            p.right = None
        v.parent = None

    # -- updates --------------------------------------------------------

    def affected_positions(self, pos: int) -> range:
        """Word start positions whose word covers ``pos``."""
        return range(max(1, pos - self.k + 1), pos + 1)

    def apply_change(self, change: ChangeRecord):
        """Re-file the words touched by a substitution.

        The LCE index must already reflect ``change``.  At most ``k`` words
        are removed and re-inserted.
        """
        if change.version != self.bound_version + 1:
            raise VersionError(
                f"change for version {change.version} cannot follow version {self.bound_version}"
            )
        if self.lce.bound_version != change.version:
            raise VersionError("LCE index must consume the change before the tree")
        if not change.is_noop:
            window = self.affected_positions(change.pos)
            for i in window:
                self._remove(i)
            self.counters.word_deletions += len(window)
            for i in window:
                self._insert(i)
            self.counters.word_insertions += len(window)
        self.bound_version = change.version

    # -- queries --------------------------------------------------------

    def find(self, i: int) -> tuple[WordNode, int]:
        """Node holding the word at ``i`` and the number of occurrences in
        nodes to its left (the far suffixes smaller than suffix ``i``)."""
        if not 1 <= i <= self.n:
            raise PositionError(f"position {i} outside 1..{self.n}")
        cmp = self._cmp
        k = self.k
        far = 0
        visits = 0
        v = self.root
        while v is not None:
            visits += 1
            c = cmp(i, v.rep, k)
            if c < 0:
                v = v.left
            elif c > 0:
                far += (v.left.items if v.left is not None else 0) + v.own
                v = v.right
            else:
                far += v.left.items if v.left is not None else 0
                self.counters.tree_node_visits += visits
                return v, far
        raise InvariantViolation(f"no node holds the word at position {i}")

    def select(self, r: int) -> tuple[WordNode, int]:
        """Node holding the ``r``-th smallest suffix and its rank inside the node."""
        if not 1 <= r <= self.n:
            raise PositionError(f"rank {r} outside 1..{self.n}")
        v = self.root
        visits = 0
        while v is not None:
            visits += 1
            left = v.left.items if v.left is not None else 0
            if r <= left:
                v = v.left
                continue
            r -= left
            own = v.own
            if r <= own:
                self.counters.tree_node_visits += visits
                return v, r
            r -= own
            v = v.right
        raise InvariantViolation("subtree item counts are inconsistent")

    # -- inspection -----------------------------------------------------

    def nodes(self) -> Iterator[WordNode]:
        stack = []
        v = self.root
        while stack or v is not None:
            while v is not None:
                stack.append(v)
                v = v.left
            v = stack.pop()
            yield v
            v = v.right

    def word(self, node: WordNode) -> bytes:
        """Materialize a node's word; the sentinel shows as ``$``."""
        sym = self.text.symbols
        out = bytearray()
        for t in range(node.rep, node.rep + self.k):
            out.append(ord("$") if sym[t] > 255 else sym[t])
        return bytes(out)

    def canonical(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """In-order ``(word, occurrences)`` pairs with words as symbol tuples."""
        sym = self.text.symbols
        k = self.k
        return [(tuple(sym[v.rep : v.rep + k]), tuple(v.occ)) for v in self.nodes()]

    def check_invariants(self):
        """Verify partition, ordering, aggregates and heap order; raise on failure."""
        seen = [False] * (self.n + 1)
        prev = None
        k = self.k
        for v in self.nodes():
            if not v.occ or v.own != len(v.occ):
                raise InvariantViolation("empty node or stale occurrence count")
            for i in v.occ:
                if seen[i]:
                    raise InvariantViolation(f"position {i} filed twice")
                seen[i] = True
                if self.owner[i] is not v:
                    raise InvariantViolation(f"owner table stale at {i}")
                if self._cmp(i, v.rep, k) != 0:
                    raise InvariantViolation(f"position {i} does not match its node's word")
            if prev is not None and self._cmp(prev.rep, v.rep, k) >= 0:
                raise InvariantViolation("nodes out of lexicographic order")
            if v.items != v.own + _items(v.left) + _items(v.right):
                raise InvariantViolation("subtree item count is stale")
            for c in (v.left, v.right):
                if c is not None and (c.parent is not v or c.prio > v.prio):
                    raise InvariantViolation("broken parent link or heap order")
            prev = v
        if not all(seen[1:]):
            raise InvariantViolation("some positions are not filed in any node")
