"""The oracle probe used by the acceptance suite must flag real violations."""

from dynsa.clusters import Cluster, Singleton
from dynsa.kwords import WordNode
from dynsa.oracle import OracleSnapshot

from _support import OracleProbe


def unary_probe():
    probe = OracleProbe(8, 4)
    probe.rebase(OracleSnapshot(b"aaaaaaaa", 4).inverse())
    return probe


def test_accepts_correct_observations():
    probe = unary_probe()
    c = Cluster(1, 1, 5, 8, True)
    probe.decomposed(type("N", (), {"occ": [1, 2, 3, 4, 5]})(), [c])
    probe.cluster_counted(3, c, 2)
    probe.pivot_chosen([c], 3)
    probe.pivot_round(5, 2)
    assert probe.clean()
    assert probe.stats == dict(decompose=1, cluster_counts=1, pivots=1, rounds=1)


def test_flags_each_kind_of_violation():
    probe = unary_probe()
    node = WordNode(1, 0.5)
    for p in (2, 3, 4, 5):
        node.occ.add(p)
    probe.decomposed(node, [Cluster(1, 1, 4, 8, True)])  # drops occurrence 5
    probe.decomposed(node, [Cluster(1, 1, 5, 8, False)])  # wrong direction
    probe.cluster_counted(3, Cluster(1, 1, 5, 8, True), 1)  # truth is 2
    probe.pivot_chosen([Cluster(1, 1, 5, 8, True)], 1)  # extreme, not 1/4-good
    probe.pivot_chosen([Singleton(6), Singleton(7)], 8)  # not a member
    probe.pivot_round(8, 8)
    bad = probe.violations
    assert len(bad["decompose"]) == 1
    assert len(bad["monotone"]) == 1
    assert len(bad["cluster_counts"]) == 1
    assert len(bad["pivots"]) == 2
    assert len(bad["rounds"]) == 1
