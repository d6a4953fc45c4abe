"""Brute-force search for K5 / K3,3 subdivisions.

This is the independent planarity oracle: a graph is non-planar exactly when
some choice of branch vertices can be joined by internally vertex-disjoint
paths realizing K5 or K3,3.  Exponential by design; intended for small orders
(tests, and the unoptimized census oracle).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable


def has_forbidden_subdivision(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    """True iff the graph contains a subdivision of K5 or of K3,3."""
    edges = tuple(edges)
    if len(edges) < 9:  # K3,3 is the smallest subdivision, 9 edges
        return False
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    deg4 = [v for v in range(1, n + 1) if len(adj[v]) >= 4]
    for branch in combinations(deg4, 5):
        if _connect_all(adj, set(branch), list(combinations(branch, 2))):
            return True

    deg3 = [v for v in range(1, n + 1) if len(adj[v]) >= 3]
    for six in combinations(deg3, 6):
        head, tail = six[0], six[1:]
        for pick in combinations(tail, 2):
            side_a = (head,) + pick
            side_b = tuple(v for v in six if v not in side_a)
            pairs = [(a, b) for a in side_a for b in side_b]
            if _connect_all(adj, set(six), pairs):
                return True
    return False


def is_planar_by_subdivision_search(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    return not has_forbidden_subdivision(n, edges)


def _connect_all(adj, branch_set, pairs) -> bool:
    """Try to realize every branch pair by internally disjoint paths."""
    used: set[int] = set()

    def place(i: int) -> bool:
        if i == len(pairs):
            return True
        a, b = pairs[i]

        def walk(v, internals) -> bool:
            for u in sorted(adj[v]):
                if u == b:
                    used.update(internals)
                    if place(i + 1):
                        return True
                    used.difference_update(internals)
                elif u not in branch_set and u not in used and u not in internals:
                    if walk(u, internals | {u}):
                        return True
            return False

        return walk(a, frozenset())

    return place(0)
