"""Fixed-pattern machinery.

A pattern is a small connected planar graph H on {1..|H|} together with its
class (tree / unicyclic / multicyclic) and automorphism count.  This module
counts the structures the experiment harness cares about: appearances of H
(exactly-one-edge-out rooted occurrences), components isomorphic to H, and
subgraph copies of H.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .errors import (
    DisconnectedPatternError,
    NonplanarPatternError,
    PatternError,
    PatternTooLargeError,
)
from .graphs import LabeledGraph, bridges, build_graph, decode, encode, is_planar, kappa

PATTERN_MAX_ORDER = 16

# below this many |H|-subsets the plain Python scan beats the vectorized one
_SUBSET_VECTOR_THRESHOLD = 512


@dataclass(frozen=True)
class Pattern:
    """A validated fixed pattern with its classification and symmetry count."""

    h: LabeledGraph
    name: str
    klass: str  # "tree" | "unicyclic" | "multicyclic"
    aut_count: int

    @property
    def size(self) -> int:
        return self.h.n

    @property
    def edge_count(self) -> int:
        return self.h.m


def make_pattern(h: LabeledGraph, name: str | None = None) -> Pattern:
    if h.n > PATTERN_MAX_ORDER:
        raise PatternTooLargeError(f"pattern order {h.n} exceeds {PATTERN_MAX_ORDER}")
    if kappa(h) != 1:
        raise DisconnectedPatternError("patterns must be connected")
    if not is_planar(h):
        raise NonplanarPatternError("patterns must be planar")
    if h.m == h.n - 1:
        klass = "tree"
    elif h.m == h.n:
        klass = "unicyclic"
    else:
        klass = "multicyclic"
    return Pattern(h, name if name is not None else encode(h), klass, automorphism_count(h))


# -- standard small graphs ----------------------------------------------------


def path_graph(k: int) -> LabeledGraph:
    return build_graph(k, [(i, i + 1) for i in range(1, k)])


def cycle_graph(k: int) -> LabeledGraph:
    if k < 3:
        raise PatternError("cycles need at least 3 vertices")
    return build_graph(k, [(i, i + 1) for i in range(1, k)] + [(1, k)])


def star_graph(k: int) -> LabeledGraph:
    """Star on k vertices: center 1, leaves 2..k."""
    if k < 2:
        raise PatternError("stars need at least 2 vertices")
    return build_graph(k, [(1, j) for j in range(2, k + 1)])


def complete_graph(k: int) -> LabeledGraph:
    return build_graph(k, list(combinations(range(1, k + 1), 2)))


def pattern_from_name(text: str) -> Pattern:
    """Resolve a preset name (vertex, edge, triangle, k4, path<k>, cycle<k>,
    star<k>) or a raw "n:HEX" encoding into a Pattern."""
    raw = text.strip()
    if ":" in raw:
        g = decode(raw)
        return make_pattern(g)
    name = raw.lower()
    if name == "vertex":
        return make_pattern(build_graph(1, []), "vertex")
    if name == "edge":
        return make_pattern(path_graph(2), "edge")
    if name == "triangle":
        return make_pattern(cycle_graph(3), "triangle")
    if name == "k4":
        return make_pattern(complete_graph(4), "k4")
    for prefix, builder, least in (("path", path_graph, 1), ("cycle", cycle_graph, 3), ("star", star_graph, 2)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            k = int(name[len(prefix):])
            if k < least:
                raise PatternError(f"{prefix}{k} is not a valid pattern")
            return make_pattern(builder(k), name)
    raise PatternError(f"unknown pattern {text!r}")


# -- isomorphism ----------------------------------------------------------------


def _signatures(g: LabeledGraph) -> dict[int, tuple]:
    deg = g.degrees
    adj = g.adjacency
    return {
        v: (deg[v], tuple(sorted(deg[w] for w in adj[v])))
        for v in range(1, g.n + 1)
    }


def _search_isomorphisms(g1: LabeledGraph, g2: LabeledGraph, count_all: bool) -> int:
    """Count edge-preserving bijections g1 -> g2 (stop at 1 unless count_all)."""
    if g1.n != g2.n or g1.m != g2.m:
        return 0
    n = g1.n
    sig1 = _signatures(g1)
    sig2 = _signatures(g2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return 0
    pools = {v: [w for w in range(1, n + 1) if sig2[w] == sig1[v]] for v in sig1}

    # order: most constrained first, then stay adjacent to the mapped part
    order: list[int] = []
    placed: set[int] = set()
    adj1 = g1.adjacency
    while len(order) < n:
        best = min(
            (v for v in range(1, n + 1) if v not in placed),
            key=lambda v: (-len(adj1[v] & placed), len(pools[v]), v),
        )
        order.append(best)
        placed.add(best)

    adj2 = g2.adjacency
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> int:
        if i == n:
            return 1
        v = order[i]
        found = 0
        for w in pools[v]:
            if w in used:
                continue
            if any((u in adj1[v]) != (x in adj2[w]) for u, x in image.items()):
                continue
            image[v] = w
            used.add(w)
            found += extend(i + 1)
            del image[v]
            used.remove(w)
            if found and not count_all:
                return found
        return found

    return extend(0)


def isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    """True iff an edge-preserving bijection between the graphs exists."""
    return _search_isomorphisms(g1, g2, count_all=False) > 0


def automorphism_count(h: LabeledGraph) -> int:
    return _search_isomorphisms(h, h, count_all=True)


# -- appearances -----------------------------------------------------------------


def _induced_matches(g: LabeledGraph, witness: list[int], h: LabeledGraph) -> bool:
    """Increasing bijection {1..|H|} -> witness is an isomorphism onto g[W]."""
    k = len(witness)
    for a in range(k):
        wa = witness[a]
        for b in range(a + 1, k):
            if g.has_edge(wa, witness[b]) != h.has_edge(a + 1, b + 1):
                return False
    return True


def _side_of(adj, start: int, blocked: tuple[int, int]) -> set[int]:
    u, v = blocked
    seen = {start}
    queue = [start]
    while queue:
        x = queue.pop()
        for y in adj[x]:
            if (x == u and y == v) or (x == v and y == u):
                continue
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def appearance_witnesses(g: LabeledGraph, pattern: Pattern) -> list[tuple[int, ...]]:
    """Witness sets W of all appearances of the pattern, sorted.

    Bridge-driven: the unique edge leaving a witness set is a bridge, so only
    bridge sides of size |H| whose attachment vertex is the side's minimum
    need the labeled induced check.
    """
    h = pattern.h
    if h.n >= g.n:
        raise PatternTooLargeError("appearances require |H| < n")
    adj = g.adjacency
    out: list[tuple[int, ...]] = []
    for u, v in sorted(bridges(g)):
        for a in (u, v):
            side = _side_of(adj, a, (u, v))
            if len(side) != h.n:
                continue
            witness = sorted(side)
            if witness[0] != a:
                continue
            if _induced_matches(g, witness, h):
                out.append(tuple(witness))
    out.sort()
    return out


def _count_appearances_subset_py(g: LabeledGraph, h: LabeledGraph) -> int:
    deg = g.degrees
    k = h.n
    degsum_target = 2 * h.m + 1
    root_degree = h.degrees[1] + 1
    count = 0
    for witness in combinations(range(1, g.n + 1), k):
        if deg[witness[0]] != root_degree:
            continue
        if sum(deg[v] for v in witness) != degsum_target:
            continue
        if _induced_matches(g, list(witness), h):
            count += 1
    return count


@lru_cache(maxsize=64)
def _combo_array(n: int, k: int) -> np.ndarray:
    return np.array(list(combinations(range(1, n + 1), k)), dtype=np.int64)


def _count_appearances_subset_np(g: LabeledGraph, h: LabeledGraph) -> int:
    n, k = g.n, h.n
    combos = _combo_array(n, k)
    adj = np.zeros((n + 1, n + 1), dtype=bool)
    for i, j in g.edges:
        adj[i, j] = True
        adj[j, i] = True
    deg = adj.sum(axis=1)

    ok = np.ones(len(combos), dtype=bool)
    for a in range(k):
        col_a = combos[:, a]
        for b in range(a + 1, k):
            ok &= adj[col_a, combos[:, b]] == h.has_edge(a + 1, b + 1)
    ok &= deg[combos].sum(axis=1) == 2 * h.m + 1
    ok &= deg[combos[:, 0]] == h.degrees[1] + 1
    return int(np.count_nonzero(ok))


def count_appearances(g: LabeledGraph, pattern: Pattern, method: str = "bridge") -> int:
    """Number of sets W where the pattern appears in g.

    ``method`` chooses between the bridge-driven count and the brute-force
    scan over all |H|-subsets; the two must always agree.
    """
    h = pattern.h
    if h.n >= g.n:
        raise PatternTooLargeError("appearances require |H| < n")
    if method == "bridge":
        return len(appearance_witnesses(g, pattern))
    if method == "subset":
        if comb(g.n, h.n) < _SUBSET_VECTOR_THRESHOLD:
            return _count_appearances_subset_py(g, h)
        return _count_appearances_subset_np(g, h)
    raise ValueError(f"unknown method {method!r}")


# -- components and copies ---------------------------------------------------------


def _relabel_subgraph(g: LabeledGraph, verts: list[int]) -> LabeledGraph:
    index = {v: i + 1 for i, v in enumerate(verts)}
    edges = [
        (index[i], index[j])
        for i, j in g.edges
        if i in index and j in index
    ]
    return LabeledGraph(len(verts), frozenset(edges))


def count_components_isomorphic(g: LabeledGraph, pattern: Pattern) -> int:
    h = pattern.h
    count = 0
    for comp in g.component_sets:
        if len(comp) != h.n:
            continue
        sub = _relabel_subgraph(g, sorted(comp))
        if sub.m == h.m and isomorphic(sub, h):
            count += 1
    return count


def _injection_plan(h: LabeledGraph):
    """Vertex order (max-degree first, then attached) plus mapped-neighbor anchors."""
    adj = h.adjacency
    deg = h.degrees
    start = max(range(1, h.n + 1), key=lambda v: (deg[v], -v))
    order = [start]
    placed = {start}
    while len(order) < h.n:
        nxt = max(
            (v for v in range(1, h.n + 1) if v not in placed),
            key=lambda v: (len(adj[v] & placed), deg[v], -v),
        )
        order.append(nxt)
        placed.add(nxt)
    anchors = []
    for i, v in enumerate(order):
        anchors.append([j for j in range(i) if order[j] in adj[v]])
    return order, anchors


def _count_edge_injections(g: LabeledGraph, h: LabeledGraph, early_exit: bool) -> int:
    if h.n > g.n:
        return 0
    order, anchors = _injection_plan(h)
    adj = g.adjacency
    all_vertices = range(1, g.n + 1)
    image = [0] * h.n
    used: set[int] = set()

    def extend(i: int) -> int:
        if i == h.n:
            return 1
        anchor_positions = anchors[i]
        if anchor_positions:
            candidates = adj[image[anchor_positions[0]]]
            for p in anchor_positions[1:]:
                candidates = candidates & adj[image[p]]
        else:
            candidates = all_vertices
        total = 0
        for w in candidates:
            if w in used:
                continue
            image[i] = w
            used.add(w)
            total += extend(i + 1)
            used.remove(w)
            if total and early_exit:
                return total
        return total

    return extend(0)


def count_copies(g: LabeledGraph, pattern: Pattern) -> int:
    """Distinct subgraph copies: edge-preserving injections / |Aut(H)|."""
    return _count_edge_injections(g, pattern.h, early_exit=False) // pattern.aut_count


def has_copy(g: LabeledGraph, pattern: Pattern) -> bool:
    return _count_edge_injections(g, pattern.h, early_exit=True) > 0


def count_good_triangles(g: LabeledGraph) -> int:
    """Triangles with at least one vertex of degree <= 6 in g."""
    adj = g.adjacency
    deg = g.degrees
    count = 0
    for u, v in g.edges:
        for w in adj[u] & adj[v]:
            if w > v and (deg[u] <= 6 or deg[v] <= 6 or deg[w] <= 6):
                count += 1
    return count


def is_two_edge_connected(h: LabeledGraph) -> bool:
    return h.n >= 2 and kappa(h) == 1 and not bridges(h)
