"""Labeled-graph kernel.

Simple undirected graphs on the vertex set {1..n}, the element type of the
uniform classes this package enumerates and samples.  Values are immutable
and safe to share; every operation here is a pure function of its inputs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from ._bits import edges_from_mask, pair_count, pairs_in_order
from .errors import (
    DuplicateEdgeError,
    LoopEdgeError,
    MalformedEncodingError,
    NotPlanarInputError,
    VertexOutOfRangeError,
)
from .planarity import is_planar_edges

Edge = tuple[int, int]

_ENCODING_RE = re.compile(r"\A(0|[1-9][0-9]*):([0-9A-F]*)\Z")


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on {1..n} with edges stored as sorted pairs (i, j), i < j."""

    n: int
    edges: frozenset[Edge]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets indexed by vertex label; index 0 is unused."""
        neigh: list[set[int]] = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            neigh[i].add(j)
            neigh[j].add(i)
        return tuple(frozenset(s) for s in neigh)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        adj = self.adjacency
        return tuple(len(adj[v]) for v in range(self.n + 1))

    @cached_property
    def component_sets(self) -> tuple[frozenset[int], ...]:
        adj = self.adjacency
        seen = [False] * (self.n + 1)
        parts = []
        for s in range(1, self.n + 1):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = [s]
            while queue:
                v = queue.pop()
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            parts.append(frozenset(comp))
        return tuple(parts)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"LabeledGraph({encode(self)!r})"


def build_graph(n: int, edge_list) -> LabeledGraph:
    """Validate and build a graph; rejects loops, duplicates, and bad labels."""
    if not isinstance(n, int) or n < 1:
        raise VertexOutOfRangeError(f"vertex count must be a positive integer, got {n!r}")
    seen: set[Edge] = set()
    for pair in edge_list:
        i, j = pair
        if i == j:
            raise LoopEdgeError(f"loop edge ({i}, {j})")
        if not (1 <= i <= n) or not (1 <= j <= n):
            raise VertexOutOfRangeError(f"edge ({i}, {j}) outside 1..{n}")
        key = (i, j) if i < j else (j, i)
        if key in seen:
            raise DuplicateEdgeError(f"edge {key} supplied more than once")
        seen.add(key)
    return LabeledGraph(n, frozenset(seen))


def graph_from_mask(n: int, mask: int) -> LabeledGraph:
    """Internal fast constructor from a trusted edge mask."""
    return LabeledGraph(n, frozenset(edges_from_mask(n, mask)))


# -- canonical text encoding ---------------------------------------------------


def encode(g: LabeledGraph) -> str:
    """Render as "n:HEX": upper-triangle bits in slot order, right-padded to 4."""
    slots = pair_count(g.n)
    acc = 0
    present = g.edges
    for pair in pairs_in_order(g.n):
        acc = (acc << 1) | (1 if pair in present else 0)
    pad = (-slots) % 4
    acc <<= pad
    width = (slots + pad) // 4
    return f"{g.n}:{acc:0{width}X}" if width else f"{g.n}:"


def decode(text: str) -> LabeledGraph:
    """Inverse of encode; rejects anything but the canonical form."""
    match = _ENCODING_RE.match(text)
    if match is None:
        raise MalformedEncodingError(f"bad syntax: {text!r}")
    n = int(match.group(1))
    if n < 1:
        raise MalformedEncodingError("vertex count must be positive")
    hexpart = match.group(2)
    slots = pair_count(n)
    pad = (-slots) % 4
    width = (slots + pad) // 4
    if len(hexpart) != width:
        raise MalformedEncodingError(
            f"expected {width} hex digits for n={n}, got {len(hexpart)}"
        )
    acc = int(hexpart, 16) if hexpart else 0
    if acc & ((1 << pad) - 1):
        raise MalformedEncodingError("nonzero trailing pad bits")
    acc >>= pad
    pairs = pairs_in_order(n)
    edges = [pairs[slots - 1 - k] for k in range(slots) if acc >> k & 1]
    return LabeledGraph(n, frozenset(edges))


# -- planarity ------------------------------------------------------------------


def is_planar(g: LabeledGraph) -> bool:
    """True iff g admits a plane embedding."""
    return is_planar_edges(g.n, g.edges)


# -- connectivity ----------------------------------------------------------------


def components(g: LabeledGraph) -> list[frozenset[int]]:
    """Connected components, in ascending order of their minimum vertex."""
    return list(g.component_sets)


def kappa(g: LabeledGraph) -> int:
    """Number of connected components."""
    return len(g.component_sets)


def bridges(g: LabeledGraph) -> frozenset[Edge]:
    """Edges whose deletion increases the component count."""
    adj = g.adjacency
    disc = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    out: set[Edge] = set()
    timer = 1
    for root in range(1, g.n + 1):
        if disc[root]:
            continue
        # iterative DFS; frames of (vertex, parent, neighbor iterator)
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, 0, iter(sorted(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if not disc[w]:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if w != parent:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] > disc[u]:
                    out.add((u, v) if u < v else (v, u))
    return frozenset(out)


def degree_histogram(g: LabeledGraph) -> "DegreeHistogram":
    counts: dict[int, int] = {}
    for v in range(1, g.n + 1):
        d = g.degrees[v]
        counts[d] = counts.get(d, 0) + 1
    return DegreeHistogram(dict(sorted(counts.items())))


@dataclass
class DegreeHistogram:
    """Map degree -> number of vertices of that degree (zero entries omitted)."""

    counts: dict[int, int]

    def vertex_total(self) -> int:
        return sum(self.counts.values())

    def degree_sum(self) -> int:
        return sum(d * c for d, c in self.counts.items())

    def at_most(self, bound: int) -> int:
        return sum(c for d, c in self.counts.items() if d <= bound)


# -- addable non-edges -------------------------------------------------------------


def addable_nonedges(g: LabeledGraph) -> list[Edge]:
    """Non-edges e with g+e still planar, in lexicographic order.

    Each candidate is tested independently; adding one addable edge can
    destroy the addability of another, so no batching is possible.
    """
    if not is_planar(g):
        raise NotPlanarInputError("addable non-edges are defined for planar graphs")
    present = g.edges
    out = []
    for pair in pairs_in_order(g.n):
        if pair in present:
            continue
        if is_planar_edges(g.n, tuple(present) + (pair,)):
            out.append(pair)
    return out


def add_count(g: LabeledGraph) -> int:
    return len(addable_nonedges(g))
