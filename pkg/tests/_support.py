"""Text generators and an oracle-backed probe shared by the test modules."""

import math
from bisect import bisect_left, bisect_right

from dynsa import Probe
from dynsa.clusters import Cluster, element_bound, flatten


def fibonacci_word(n):
    a, b = "a", "ab"
    while len(b) < n:
        a, b = b, b + a
    return b[:n]


def thue_morse(n):
    return "".join("ab"[bin(i).count("1") % 2] for i in range(n))


ADVERSARIAL = {
    "a^n": lambda n: "a" * n,
    "(ab)^n": lambda n: ("ab" * n)[:n],
    "fibonacci": fibonacci_word,
    "thue-morse": thue_morse,
}


def ceil_sqrt(n):
    return math.isqrt(n - 1) + 1 if n > 1 else 1


class OracleProbe(Probe):
    """Checks engine internals against oracle ranks as queries run.

    Call :meth:`rebase` with the oracle inverse suffix array (1-based list
    indexed by position - 1) whenever the text changes.  Violations are
    collected, not raised, so a run reports every failing criterion.
    """

    def __init__(self, n, k):
        self.n = n
        self.k = k
        self.rank = None
        self.stats = dict(decompose=0, cluster_counts=0, pivots=0, rounds=0)
        self.violations = dict(decompose=[], cluster_counts=[], pivots=[], rounds=[], monotone=[])

    def rebase(self, inverse):
        self.rank = [0] + list(inverse)
        # oracle ranks of each cluster's members, valid for this text version
        self._member_ranks = {}
        self._monotone_checked = set()

    def _ranks(self, cluster):
        key = (cluster.first, cluster.period, cluster.count, cluster.run_end, cluster.increasing)
        got = self._member_ranks.get(key)
        if got is None:
            rank = self.rank
            got = sorted([rank[m] for m in cluster.members()])
            self._member_ranks[key] = got
        return got

    def decomposed(self, node, elements):
        self.stats["decompose"] += 1
        if len(elements) > element_bound(self.n, self.k) or flatten(elements) != list(node.occ):
            self.violations["decompose"].append((list(node.occ), elements))
        rank = self.rank
        for e in elements:
            if isinstance(e, Cluster) and e.count > 1:
                key = (e.first, e.period, e.count, e.run_end, e.increasing)
                if key in self._monotone_checked:
                    continue  # already checked at this text version
                self._monotone_checked.add(key)
                ranks = [rank[m] for m in e.members()]
                # ranks are distinct, so sorted order means strictly monotone
                expected = self._ranks(e) if e.increasing else self._ranks(e)[::-1]
                if ranks != expected:
                    self.violations["monotone"].append(e)

    def cluster_counted(self, i, cluster, count):
        self.stats["cluster_counts"] += 1
        # members ranked strictly below i; i itself is never below itself
        brute = bisect_left(self._ranks(cluster), self.rank[i])
        if brute != count:
            self.violations["cluster_counts"].append((i, cluster, count, brute))

    def pivot_chosen(self, elements, pivot):
        self.stats["pivots"] += 1
        members = flatten(elements)
        rank = self.rank
        rp = rank[pivot]
        need = -(-len(members) // 4)
        ranks = sorted([rank[m] for m in members])
        below = bisect_right(ranks, rp)
        above = len(ranks) - bisect_left(ranks, rp)
        if pivot not in members or below < need or above < need:
            self.violations["pivots"].append((elements, pivot, below, above))

    def pivot_round(self, before, after):
        self.stats["rounds"] += 1
        if 4 * after > 3 * before + 4:
            self.violations["rounds"].append((before, after))

    def clean(self):
        return not any(self.violations.values())
