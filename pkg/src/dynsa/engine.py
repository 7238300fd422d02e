"""SA and iSA queries composed from the k-words tree and the cluster tools."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .clusters import (
    Cluster,
    Singleton,
    cluster_median,
    count_smaller_in_cluster,
    decompose,
    split_by_pivot,
)
from .errors import InvariantViolation, PositionError
from .kwords import KWordsTree, WordNode


@dataclass
class QueryBudget:
    """Knobs for the pivot search.

    ``max_pivot_rounds`` defaults to ``ceil(log_{4/3} n) + 8``; smaller values
    are raised to that floor.
    """

    max_pivot_rounds: int = 0
    small_set_threshold: int = 32

    def for_size(self, n: int) -> QueryBudget:
        floor = math.ceil(math.log(max(n, 2)) / math.log(4 / 3)) + 8
        return QueryBudget(max(self.max_pivot_rounds, floor), max(1, self.small_set_threshold))


class Probe:
    """No-op observer.  Subclass and pass to the engine to watch internals."""

    def decomposed(self, node, elements):
        pass

    def cluster_counted(self, i, cluster, count):
        pass

    def pivot_chosen(self, elements, pivot):
        pass

    def pivot_round(self, before, after):
        pass


class SuffixArrayEngine:
    def __init__(self, tree: KWordsTree, budget: QueryBudget | None = None, probe: Probe | None = None):
        self.tree = tree
        self.store = tree.lce.store
        self.counters = tree.counters
        self.n = tree.n
        self.k = tree.k
        self.budget = (budget or QueryBudget()).for_size(self.n)
        self.probe = probe

    def _elements(self, node: WordNode):
        elements = decompose(node, self.store, self.k)
        self.counters.elements_scanned += len(elements)
        if self.probe is not None:
            self.probe.decomposed(node, elements)
        return elements

    # -- iSA ------------------------------------------------------------

    def isa(self, i: int) -> int:
        """Rank (1-based) of the suffix starting at ``i``."""
        node, far = self.tree.find(i)
        return far + self.close_smaller_count(i, node) + 1

    def close_smaller_count(self, i: int, node: WordNode) -> int:
        if node.own == 1:
            return 0
        store = self.store
        probe = self.probe
        smaller = 0
        singles = []
        for e in self._elements(node):
            if isinstance(e, Singleton):
                singles.append(e.pos)
            else:
                c = count_smaller_in_cluster(store, i, e)
                if probe is not None:
                    probe.cluster_counted(i, e, c)
                smaller += c
        return smaller + store.count_smaller(i, singles)

    # -- SA -------------------------------------------------------------

    def sa(self, r: int) -> int:
        """Position of the ``r``-th smallest suffix."""
        node, residual = self.tree.select(r)
        return self.select_in_node(node, residual)

    def find_pivot(self, elements) -> int:
        """A 1/4-good pivot for the members of ``elements``."""
        if not elements:
            raise ValueError("cannot pick a pivot from an empty element list")
        total = 0
        weight = {}
        for e in elements:
            if isinstance(e, Cluster):
                weight[cluster_median(e)] = (e.count + 1) // 2
                total += e.count
            else:
                weight[e.pos] = 1
                total += 1
        c = 0
        for pos in self.store.sort(list(weight)):
            c += weight[pos]
            if 4 * c > total:
                return pos
        raise InvariantViolation("median weights never passed a quarter of the members")

    def select_in_node(self, node: WordNode, r: int) -> int:
        size = node.own
        if not 1 <= r <= size:
            raise PositionError(f"rank {r} outside 1..{size} within node")
        if size == 1:
            return node.rep
        store = self.store
        probe = self.probe
        threshold = self.budget.small_set_threshold
        elements = self._elements(node)
        total = size
        for _ in range(self.budget.max_pivot_rounds):
            if total <= threshold:
                members = []
                for e in elements:
                    members.extend(e.members())
                return store.sort(members)[r - 1]
            pivot = self.find_pivot(elements)
            if probe is not None:
                probe.pivot_chosen(elements, pivot)
            rank = 1
            smaller, larger = [], []
            for e in elements:
                s, _, lo_part, hi_part = split_by_pivot(store, e, pivot)
                if probe is not None and isinstance(e, Cluster):
                    probe.cluster_counted(pivot, e, s)
                rank += s
                if lo_part is not None:
                    smaller.append(lo_part)
                if hi_part is not None:
                    larger.append(hi_part)
            if r == rank:
                return pivot
            if r < rank:
                elements = smaller
                remaining = rank - 1
            else:
                elements = larger
                r -= rank
                remaining = total - rank
            if probe is not None:
                probe.pivot_round(total, remaining)
            total = remaining
        raise InvariantViolation("pivot search exceeded its round budget")
