"""Whole-structure comparisons of derived queries against the oracle."""

from collections import deque

from dynsa import SENTINEL


def reachable_nodes(dsa):
    """Rank ranges reachable from the root by child steps, plus parent checks."""
    letters = sorted(set(dsa.text.to_bytes())) + [SENTINEL]
    root = (1, dsa.n)
    seen = {root}
    queue = deque([root])
    edges = []
    while queue:
        node = queue.popleft()
        for sym in letters:
            child = dsa.st_child(node, sym)
            if child is None:
                continue
            child = tuple(child)
            if child == node:
                raise AssertionError(f"child of {node} along {sym} is the node itself")
            edges.append((node, child))
            if child not in seen:
                seen.add(child)
                queue.append(child)
    return seen, edges


def derived_mismatches(dsa, o):
    """Return a list of human-readable mismatches (empty when all agree)."""
    bad = []
    n = dsa.n
    bwt = [dsa.bwt(r) for r in range(1, n + 1)]
    if bwt != o.bwt():
        bad.append(("BWT", bwt, o.bwt()))
    lcp = [dsa.lcp_array(r) for r in range(2, n + 1)]
    if lcp != o.lcp_array():
        bad.append(("LCPARR", lcp, o.lcp_array()))
    nodes, edges = reachable_nodes(dsa)
    expected = o.suffix_tree_ranges()
    if nodes != expected:
        bad.append(("ST nodes", sorted(nodes ^ expected)[:5], len(expected)))
    for parent, child in edges:
        got = tuple(dsa.st_parent(child))
        if got != parent:
            bad.append(("STPARENT", child, got, parent))
    for i in range(1, n + 1):
        for j in range(i, min(n, i + 12) + 1):
            got = tuple(dsa.st_locate(i, j))
            want = o.prefix_range(i, j)
            if got != want:
                bad.append(("STLOC", (i, j), got, want))
    return bad
