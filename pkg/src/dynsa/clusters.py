"""Compact representation of one word-node's occurrences.

Occurrences of a k-word that sit closer than k/2 apart lie in one periodic
run and form an arithmetic progression.  Such a progression is stored as a
:class:`Cluster`; isolated occurrences are :class:`Singleton` elements.  The
representation has O(n/k) elements and supports counting, median extraction
and pivot splitting without unpacking the clusters.

Terminology used below: the *extent* of a position ``i`` for period ``p`` is
``lcp(i, i + p) + p``, the number of positions starting at ``i`` that stay
periodic.  Two suffixes that start in phase inside period-``p`` runs and have
different extents first differ at the smaller extent.
"""

from __future__ import annotations

from .errors import InvariantViolation
from .kwords import WordNode, occ_count_in_range


class Singleton:
    __slots__ = ("pos",)

    def __init__(self, pos: int):
        self.pos = pos

    size = 1

    @property
    def first(self) -> int:
        return self.pos

    @property
    def last(self) -> int:
        return self.pos

    def members(self) -> list[int]:
        return [self.pos]

    def __eq__(self, other):
        return isinstance(other, Singleton) and other.pos == self.pos

    def __hash__(self):
        return hash(("S", self.pos))

    def __repr__(self):
        return f"Singleton({self.pos})"


class Cluster:
    """Occurrences ``first, first + period, ...`` (``count`` of them) inside
    the period-``period`` run that ends at ``run_end``.

    ``increasing`` records the lexicographic direction of the members taken
    in position order.  ``run_start`` is informational.
    """

    __slots__ = ("first", "period", "count", "run_end", "increasing", "run_start")

    def __init__(self, first, period, count, run_end, increasing, run_start=None):
        self.first = first
        self.period = period
        self.count = count
        self.run_end = run_end
        self.increasing = increasing
        self.run_start = run_start

    @property
    def size(self) -> int:
        return self.count

    @property
    def last(self) -> int:
        return self.first + (self.count - 1) * self.period

    def members(self) -> list[int]:
        return list(range(self.first, self.last + 1, self.period))

    def index_of(self, pos: int) -> int | None:
        d = pos - self.first
        if d < 0 or d % self.period:
            return None
        t = d // self.period
        return t if t < self.count else None

    def sub(self, t0: int, count: int) -> Cluster | None:
        if count <= 0:
            return None
        return Cluster(
            self.first + t0 * self.period, self.period, count, self.run_end, self.increasing, self.run_start
        )

    def __eq__(self, other):
        return isinstance(other, Cluster) and (
            other.first, other.period, other.count, other.run_end, other.increasing
        ) == (self.first, self.period, self.count, self.run_end, self.increasing)

    def __hash__(self):
        return hash((self.first, self.period, self.count, self.run_end, self.increasing))

    def __repr__(self):
        direction = "INC" if self.increasing else "DEC"
        return f"Cluster(first={self.first}, p={self.period}, count={self.count}, run_end={self.run_end}, {direction})"


def flatten(elements) -> list[int]:
    out = []
    for e in elements:
        out.extend(e.members())
    return out


def element_bound(n: int, k: int) -> int:
    return 2 * (-(-n // k)) + 2


def decompose(node: WordNode, store, k: int) -> list:
    """Split ``node``'s occurrences into singletons and periodic clusters.

    Walks the occurrences in ascending order, jumping over each cluster with
    one successor lookup, so the cost is proportional to the output size.
    """
    occ = node.occ
    m = len(occ)
    lcp = store.lcp
    out = []
    idx = 0
    while idx < m:
        a = occ[idx]
        if idx + 1 < m:
            p = occ[idx + 1] - a
            if 2 * p < k:
                ext = lcp(a, a + p, store.n_padded) + p
                run_end = a + ext - 1
                run_start = a - store.lcs(a - 1, a + p - 1, a - 1) if a > 1 else a
                count = (run_end - k + 1 - a) // p + 1
                last = a + (count - 1) * p
                if (
                    count < 2
                    or a - run_start >= p
                    or occ_count_in_range(node, a, last) != count
                    or occ[idx + count - 1] != last
                ):
                    raise InvariantViolation(
                        f"occurrences near {a} (period {p}) do not form the progression the run predicts"
                    )
                increasing = store.compare(a, a + p) < 0
                out.append(Cluster(a, p, count, run_end, increasing, run_start))
                idx += count
                continue
        out.append(Singleton(a))
        idx += 1
    return out


def run_extent_from(store, i: int, p: int) -> int:
    """Number of positions from ``i`` on that keep period ``p``."""
    return store.lcp(i, i + p, store.n_padded) + p


def count_smaller_in_cluster(store, i: int, c: Cluster, k: int | None = None) -> int:
    """Members of ``c`` other than ``i`` whose suffix sorts below suffix ``i``.

    Costs a constant number of LCE calls regardless of ``c.count``.  When
    ``k`` is given, the precondition that ``i`` shares the cluster's word is
    checked first.
    """
    if k is not None and store.cmp_prefix(i, c.first, k) != 0:
        raise InvariantViolation(f"position {i} does not share the word of {c!r}")
    p = c.period
    first = c.first
    cnt = c.count
    sym = store.symbol
    mi = store.lcp(i, i + p, store.n_padded) + p
    # member t has extent run_end - first - t*p + 1, which exceeds mi iff t*p < d
    d = c.run_end - first + 1 - mi
    smaller = 0
    # members with a longer extent: mismatch at offset mi, same symbol for all
    longer = min(cnt, -(-d // p)) if d > 0 else 0
    if longer and sym(first + mi) < sym(i + mi):
        smaller += longer
    # members with a shorter extent: mismatch where the member leaves the run
    t2 = d // p + 1 if d >= 0 else 0
    if t2 < cnt:
        mt = c.run_end - (first + t2 * p) + 1
        if sym(c.run_end + 1) < sym(i + mt):
            smaller += cnt - t2
    # at most one member has exactly the same extent
    if d >= 0 and d % p == 0 and d // p < cnt:
        j = first + d
        if j != i and store.compare(j, i) < 0:
            smaller += 1
    return smaller


def cluster_median(c: Cluster) -> int:
    return c.first + (c.count - 1) // 2 * c.period


def split_by_pivot(store, e, pivot: int):
    """Partition an element around ``pivot``.

    Returns ``(smaller_count, contains_pivot, smaller_part, larger_part)``
    where the parts are elements or ``None``.
    """
    if isinstance(e, Singleton):
        if e.pos == pivot:
            return 0, True, None, None
        if store.compare(e.pos, pivot) < 0:
            return 1, False, e, None
        return 0, False, None, e
    s = count_smaller_in_cluster(store, pivot, e)
    t = e.index_of(pivot)
    contains = t is not None
    cnt = e.count
    larger = cnt - s - (1 if contains else 0)
    if e.increasing:
        # lexicographic order follows position order
        if contains and t != s:
            raise InvariantViolation(f"pivot {pivot} sits at index {t} of {e!r} but ranks {s}")
        return s, contains, e.sub(0, s), e.sub(cnt - larger, larger)
    if contains and t != cnt - s - 1:
        raise InvariantViolation(f"pivot {pivot} sits at index {t} of {e!r} but ranks {s}")
    return s, contains, e.sub(cnt - s, s), e.sub(0, larger)
