"""Planarity decisions.

Three cooperating mechanisms, all cross-checked in the test suite:

* trivial bounds: any graph with at most 8 edges or at most 4 vertices is
  planar; for n >= 3 more than 3n-6 edges is impossible in a planar graph;
* n <= 7: a lookup table over all edge masks, built once per n by marking
  every K5/K3,3 subdivision edge-set on {1..n} and closing upward over
  supersets (a graph is non-planar exactly when it contains one of them);
* n >= 8: a left-right planarity test (DFS orientation plus a stack of
  conflict pairs), run independently on each connected component.
"""

from __future__ import annotations

import sys
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

import numpy as np

from ._bits import mask_from_edges, pair_count

TABLE_MAX_N = 7

_K5_ORDER = 5
_K33_ORDER = 6


def is_planar_edges(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    """Decide planarity of the simple graph on {1..n} with the given edges."""
    edges = tuple(edges)
    m = len(edges)
    if n <= 4 or m <= 8:
        return True
    if m > 3 * n - 6:
        return False
    if n <= TABLE_MAX_N:
        return planar_mask_table(n)[mask_from_edges(n, edges)] == 1
    return _left_right_planar(n, edges)


def is_planar_mask(n: int, mask: int) -> bool:
    """Table-backed planarity for n <= TABLE_MAX_N, keyed by edge mask."""
    if n > TABLE_MAX_N:
        raise ValueError(f"mask lookup only available for n <= {TABLE_MAX_N}")
    return planar_mask_table(n)[mask] == 1


# -- small-order tables -------------------------------------------------------


def _subdivision_edge_sets(connections, spares):
    """Edge sets of every subdivision of the given connection list.

    Each connection (u, v) becomes a path u - d1 - ... - dk - v whose
    internal vertices are drawn (ordered, without reuse) from ``spares``.
    Unused spares are allowed.
    """
    out = set()
    conns = tuple(connections)

    def rec(idx, remaining, acc):
        if idx == len(conns):
            out.add(frozenset(acc))
            return
        u, v = conns[idx]
        for r in range(len(remaining) + 1):
            for chosen in combinations(remaining, r):
                rest = remaining - set(chosen)
                for order in permutations(chosen):
                    path = (u,) + order + (v,)
                    acc2 = list(acc)
                    for a, b in zip(path, path[1:]):
                        acc2.append((a, b) if a < b else (b, a))
                    rec(idx + 1, rest, acc2)

    rec(0, frozenset(spares), [])
    return out


@lru_cache(maxsize=None)
def forbidden_subdivision_masks(n: int) -> tuple[int, ...]:
    """Edge masks of all K5 and K3,3 subdivisions on subsets of {1..n}."""
    found: set[int] = set()
    verts = range(1, n + 1)

    if n >= _K5_ORDER:
        for branch in combinations(verts, _K5_ORDER):
            spares = tuple(v for v in verts if v not in branch)
            conns = list(combinations(branch, 2))
            for edge_set in _subdivision_edge_sets(conns, spares):
                found.add(mask_from_edges(n, edge_set))

    if n >= _K33_ORDER:
        for branch in combinations(verts, _K33_ORDER):
            spares = tuple(v for v in verts if v not in branch)
            head, tail = branch[0], branch[1:]
            for pick in combinations(tail, 2):
                side_a = (head,) + pick
                side_b = tuple(v for v in branch if v not in side_a)
                conns = [(a, b) for a in side_a for b in side_b]
                for edge_set in _subdivision_edge_sets(conns, spares):
                    found.add(mask_from_edges(n, edge_set))

    return tuple(sorted(found))


@lru_cache(maxsize=None)
def planar_mask_table(n: int) -> bytes:
    """byte[mask] == 1 iff the graph on {1..n} with that edge mask is planar."""
    if n > TABLE_MAX_N:
        raise ValueError(f"table limited to n <= {TABLE_MAX_N}")
    slots = pair_count(n)
    nonplanar = np.zeros(1 << slots, dtype=np.uint8)
    for mask in forbidden_subdivision_masks(n):
        nonplanar[mask] = 1
    # superset closure, one bit position at a time
    for b in range(slots):
        view = nonplanar.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    return (nonplanar ^ 1).tobytes()


# -- left-right test ----------------------------------------------------------


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LeftRightTest:
    """Left-right criterion on one connected component."""

    def __init__(self, adj, vertices):
        self.adj = adj
        self.height = {v: None for v in vertices}
        self.parent_edge = {v: None for v in vertices}
        self.lowpt = {}
        self.lowpt2 = {}
        self.nesting_depth = {}
        self.oriented = set()
        self.ordered_adj = {}
        self.ref = {}
        self.S = []
        self.stack_bottom = {}
        self.lowpt_edge = {}

    def run(self, root) -> bool:
        self.height[root] = 0
        self._dfs_orient(root)
        for v in self.height:
            self.ordered_adj[v] = sorted(
                (w for w in self.adj[v] if (v, w) in self.lowpt),
                key=lambda w, _v=v: self.nesting_depth[(_v, w)],
            )
        return self._dfs_test(root)

    def _dfs_orient(self, v) -> None:
        e = self.parent_edge[v]
        hv = self.height[v]
        for w in self.adj[v]:
            key = (v, w) if v < w else (w, v)
            if key in self.oriented:
                continue
            self.oriented.add(key)
            vw = (v, w)
            self.lowpt[vw] = hv
            self.lowpt2[vw] = hv
            if self.height[w] is None:  # tree edge
                self.parent_edge[w] = vw
                self.height[w] = hv + 1
                self._dfs_orient(w)
            else:  # back edge
                self.lowpt[vw] = self.height[w]
            depth = 2 * self.lowpt[vw]
            if self.lowpt2[vw] < hv:  # chordal
                depth += 1
            self.nesting_depth[vw] = depth
            if e is not None:
                if self.lowpt[vw] < self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[vw])
                    self.lowpt[e] = self.lowpt[vw]
                elif self.lowpt[vw] > self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[vw])
                else:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[vw])

    def _dfs_test(self, v) -> bool:
        e = self.parent_edge[v]
        for idx, w in enumerate(self.ordered_adj[v]):
            ei = (v, w)
            self.stack_bottom[ei] = self.S[-1] if self.S else None
            if ei == self.parent_edge[w]:  # tree edge
                if not self._dfs_test(w):
                    return False
            else:  # back edge
                self.lowpt_edge[ei] = ei
                self.S.append(_ConflictPair(right=_Interval(ei, ei)))
            if self.lowpt[ei] < self.height[v]:  # ei has a return edge
                if idx == 0:
                    if e is not None:
                        self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self._add_constraints(ei, e):
                    return False
        if e is not None:
            u = e[0]
            self._trim_back_edges(u)
            if self.lowpt[e] < self.height[u] and self.S:  # e has a return edge
                top = self.S[-1]
                hl, hr = top.left.high, top.right.high
                if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                    self.ref[e] = hl
                else:
                    self.ref[e] = hr
        return True

    def _conflicting(self, interval, b) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _add_constraints(self, ei, e) -> bool:
        pair = _ConflictPair()
        # merge return edges of ei into pair.right
        bottom = self.stack_bottom[ei]
        while True:
            q = self.S.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                return False
            if self.lowpt[q.right.low] > self.lowpt[e]:
                if pair.right.empty():
                    pair.right.high = q.right.high
                else:
                    self.ref[pair.right.low] = q.right.high
                pair.right.low = q.right.low
            else:  # align
                self.ref[q.right.low] = self.lowpt_edge[e]
            if (self.S[-1] if self.S else None) is bottom:
                break
        # merge conflicting return edges of earlier siblings into pair.left
        while self.S and (
            self._conflicting(self.S[-1].left, ei) or self._conflicting(self.S[-1].right, ei)
        ):
            q = self.S.pop()
            if self._conflicting(q.right, ei):
                q.swap()
            if self._conflicting(q.right, ei):
                return False
            self.ref[pair.right.low] = q.right.high
            if q.right.low is not None:
                pair.right.low = q.right.low
            if pair.left.empty():
                pair.left.high = q.left.high
            else:
                self.ref[pair.left.low] = q.left.high
            pair.left.low = q.left.low
        if not (pair.left.empty() and pair.right.empty()):
            self.S.append(pair)
        return True

    def _lowest(self, pair) -> int:
        if pair.left.empty() and pair.right.empty():
            return -1  # emptied by trimming; inert
        if pair.left.empty():
            return self.lowpt[pair.right.low]
        if pair.right.empty():
            return self.lowpt[pair.left.low]
        return min(self.lowpt[pair.left.low], self.lowpt[pair.right.low])

    def _trim_back_edges(self, u) -> None:
        hu = self.height[u]
        while self.S and self._lowest(self.S[-1]) == hu:
            self.S.pop()
        if not self.S:
            return
        pair = self.S.pop()
        while pair.left.high is not None and pair.left.high[1] == u:
            pair.left.high = self.ref.get(pair.left.high)
        if pair.left.high is None and pair.left.low is not None:
            self.ref[pair.left.low] = pair.right.low
            pair.left.low = None
        while pair.right.high is not None and pair.right.high[1] == u:
            pair.right.high = self.ref.get(pair.right.high)
        if pair.right.high is None and pair.right.low is not None:
            self.ref[pair.right.low] = pair.left.low
            pair.right.low = None
        self.S.append(pair)


def _left_right_planar(n: int, edges) -> bool:
    adj = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in range(1, n + 1):
        adj[v].sort()

    seen = [False] * (n + 1)
    components = []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        components.append(comp)

    old_limit = sys.getrecursionlimit()
    need = 2 * n + 100
    if need > old_limit:
        sys.setrecursionlimit(need)
    try:
        for comp in components:
            mc = sum(len(adj[v]) for v in comp) // 2
            nc = len(comp)
            if nc >= 3 and mc > 3 * nc - 6:
                return False
            if mc <= 8:
                continue
            if not _LeftRightTest(adj, comp).run(comp[0]):
                return False
    finally:
        if need > old_limit:
            sys.setrecursionlimit(old_limit)
    return True
