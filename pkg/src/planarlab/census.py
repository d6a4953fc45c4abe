"""Exact enumeration and counting of the planar classes, with persistence.

Enumeration is a depth-first augmentation over edge slots: each node adds one
edge with a slot index above the previous minimum choice, and any branch whose
partial graph is non-planar is pruned (sound because planarity survives edge
deletion).  Children are explored so that fixed-m graphs stream out in
lexicographic order of their text encoding.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from ._bits import edges_from_mask, pair_count, pairs_in_order
from .errors import (
    ChecksumMismatchError,
    IoFailureError,
    MalformedEncodingError,
    ResourceLimitError,
    VersionUnsupportedError,
)
from .graphs import LabeledGraph, decode, encode, graph_from_mask, is_planar
from .kuratowski import has_forbidden_subdivision
from .planarity import TABLE_MAX_N, is_planar_edges, planar_mask_table

DEFAULT_BUDGET = 50_000_000

_HEADER = "planarlab-census v1"

_COUNTS_CACHE: dict[int, tuple[int, ...]] = {}


def _validate_params(n: int, m: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"edge count must be a non-negative integer, got {m!r}")


def max_planar_edges(n: int) -> int:
    """Largest m for which the class can be non-empty."""
    return min(pair_count(n), 3 * n - 6) if n >= 3 else pair_count(n)


# -- enumeration core -----------------------------------------------------------


def _planarity_probe(n: int, m_target: int | None, prune_threshold: int | None):
    """Child-acceptance test for the DFS; (mask, edge_count) -> bool."""
    if n <= TABLE_MAX_N:
        table = planar_mask_table(n)
        return lambda mask, mc: table[mask] == 1
    threshold = n if prune_threshold is None else prune_threshold

    def probe(mask: int, mc: int) -> bool:
        if mc < 9:  # no non-planar graph has fewer than 9 edges
            return True
        if m_target is not None and mc < m_target and mc < threshold:
            return True  # deferred; re-tested deeper and always at emission
        return is_planar_edges(n, edges_from_mask(n, mask))

    return probe


def _iter_class_masks(
    n: int, m: int, budget: int | None, prune_threshold: int | None
) -> Iterator[int]:
    if m == 0:
        yield 0
        return
    slots = pair_count(n)
    probe = _planarity_probe(n, m, prune_threshold)
    limit = DEFAULT_BUDGET if budget is None else budget
    nodes = 0
    # frames: (mask, chosen, slot cursor, lowest slot still allowed)
    stack = [(0, 0, slots - m, 0)]
    while stack:
        mask, chosen, s, floor = stack.pop()
        while s >= floor:
            child = mask | (1 << s)
            mc = chosen + 1
            if probe(child, mc):
                nodes += 1
                if nodes > limit:
                    raise ResourceLimitError(f"enumeration budget of {limit} nodes exceeded")
                if mc == m:
                    yield child
                    s -= 1
                    continue
                if s > floor:
                    stack.append((mask, chosen, s - 1, floor))
                stack.append((child, mc, slots - m + mc, s + 1))
                break
            s -= 1


def _iter_all_masks(n: int, budget: int | None) -> Iterator[tuple[int, int]]:
    """Every planar edge mask on {1..n} with its edge count, edgeless first."""
    yield 0, 0
    slots = pair_count(n)
    if slots == 0:
        return
    probe = _planarity_probe(n, None, None)
    limit = DEFAULT_BUDGET if budget is None else budget
    nodes = 1
    stack = [(0, 0, slots - 1, 0)]
    while stack:
        mask, chosen, s, floor = stack.pop()
        while s >= floor:
            child = mask | (1 << s)
            mc = chosen + 1
            if probe(child, mc):
                nodes += 1
                if nodes > limit:
                    raise ResourceLimitError(f"enumeration budget of {limit} nodes exceeded")
                yield child, mc
                if s > floor:
                    stack.append((mask, chosen, s - 1, floor))
                if s + 1 < slots:
                    stack.append((child, mc, slots - 1, s + 1))
                break
            s -= 1


def class_counts(n: int, *, budget: int | None = None) -> tuple[int, ...]:
    """|class(n, m)| for every m in 0..C(n,2), from one pruned sweep (cached)."""
    _validate_params(n, 0)
    if n > TABLE_MAX_N:
        raise ResourceLimitError(f"full sweeps are limited to n <= {TABLE_MAX_N}")
    cached = _COUNTS_CACHE.get(n)
    if cached is not None:
        return cached
    slots = pair_count(n)
    counts = [0] * (slots + 1)
    for _, mc in _iter_all_masks(n, budget):
        counts[mc] += 1
    result = tuple(counts)
    _COUNTS_CACHE[n] = result
    return result


def count_class(
    n: int, m: int, *, budget: int | None = None, prune_threshold: int | None = None
) -> int:
    """Exact number of planar graphs on {1..n} with exactly m edges."""
    _validate_params(n, m)
    if m > max_planar_edges(n):
        return 0
    if n <= TABLE_MAX_N:
        return class_counts(n, budget=budget)[m]
    return sum(1 for _ in _iter_class_masks(n, m, budget, prune_threshold))


def enumerate_class(
    n: int,
    m: int,
    visitor: Callable[[LabeledGraph], None],
    *,
    budget: int | None = None,
    prune_threshold: int | None = None,
) -> None:
    """Call the visitor once per class member, in encoding-lexicographic order."""
    _validate_params(n, m)
    if m > max_planar_edges(n):
        return
    for mask in _iter_class_masks(n, m, budget, prune_threshold):
        visitor(graph_from_mask(n, mask))


def enumerate_all(
    n: int, visitor: Callable[[LabeledGraph], None], *, budget: int | None = None
) -> None:
    """Visit every planar graph on {1..n} (all edge counts) exactly once."""
    _validate_params(n, 0)
    for mask, _ in _iter_all_masks(n, budget):
        visitor(graph_from_mask(n, mask))


def brute_force_count(n: int, m: int) -> int:
    """Filter every m-subset of possible edges through the subdivision search.

    Intentionally unoptimized and independent of count_class: different
    enumeration strategy and a different planarity decision.
    """
    _validate_params(n, m)
    if n > 6:
        raise ResourceLimitError("the brute-force oracle is limited to n <= 6")
    pairs = pairs_in_order(n)
    return sum(
        1 for combo in combinations(pairs, m) if not has_forbidden_subdivision(n, combo)
    )


# -- persistent census -----------------------------------------------------------


@dataclass(frozen=True)
class CensusRecord:
    """Exact count for one (n, m) class, optionally with every graph stored."""

    n: int
    m: int
    count: int
    graphs: tuple[str, ...] | None = None

    def lines(self) -> list[str]:
        out = [f"{self.n} {self.m} {self.count}"]
        if self.graphs is not None:
            out.extend(f"  {enc}" for enc in self.graphs)
        return out

    def checksum(self) -> str:
        block = "".join(line + "\n" for line in self.lines())
        return f"{zlib.crc32(block.encode('utf-8')) & 0xFFFFFFFF:08x}"

    def validate(self) -> None:
        if self.count < 0:
            raise IoFailureError("negative class count")
        if self.m > max_planar_edges(self.n) and self.count != 0:
            raise IoFailureError(
                f"class ({self.n}, {self.m}) lies beyond the planar edge bound"
            )
        if self.graphs is None:
            return
        if len(self.graphs) != self.count:
            raise IoFailureError("stored graph list does not match the class count")
        if list(self.graphs) != sorted(set(self.graphs)):
            raise IoFailureError("stored graphs must be sorted and duplicate-free")
        for enc in self.graphs:
            try:
                g = decode(enc)
            except MalformedEncodingError as exc:
                raise IoFailureError(f"stored graph {enc!r} is unreadable: {exc}") from exc
            if g.n != self.n or g.m != self.m or not is_planar(g):
                raise IoFailureError(f"stored graph {enc!r} is not in the class")


@dataclass
class CensusStore:
    """Records keyed by (n, m); version 1 of the line-oriented text format."""

    version: int = 1
    records: dict[tuple[int, int], CensusRecord] = field(default_factory=dict)

    def add(self, record: CensusRecord) -> None:
        self.records[(record.n, record.m)] = record

    def get(self, n: int, m: int) -> CensusRecord | None:
        return self.records.get((n, m))

    def record_checksums(self) -> dict[tuple[int, int], str]:
        return {key: rec.checksum() for key, rec in sorted(self.records.items())}


def build_census(
    n: int,
    m_values=None,
    *,
    store_graphs: bool = False,
    budget: int | None = None,
) -> CensusStore:
    """Enumerate the requested classes into a store.

    Empty classes are normalized to counts-only records so that saving and
    reloading reproduces the store exactly.
    """
    if m_values is None:
        m_values = range(pair_count(n) + 1)
    store = CensusStore()
    for m in m_values:
        if store_graphs:
            encodings: list[str] = []
            enumerate_class(n, m, lambda g: encodings.append(encode(g)), budget=budget)
            graphs = tuple(encodings) if encodings else None
            store.add(CensusRecord(n, m, len(encodings), graphs))
        else:
            store.add(CensusRecord(n, m, count_class(n, m, budget=budget)))
    return store


def save_census(store: CensusStore, path) -> None:
    if store.version != 1:
        raise VersionUnsupportedError(f"cannot write census version {store.version}")
    payload_lines: list[str] = []
    for key in sorted(store.records):
        payload_lines.extend(store.records[key].lines())
    payload = "".join(line + "\n" for line in payload_lines)
    crc = zlib.crc32(payload.encode("utf-8")) & 0xFFFFFFFF
    text = f"{_HEADER}\n{payload}checksum {crc:08x}\n"
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise IoFailureError(str(exc)) from exc


def load_census(path) -> CensusStore:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise IoFailureError(str(exc)) from exc

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != _HEADER:
        head = lines[0] if lines else ""
        raise VersionUnsupportedError(f"unsupported census header {head!r}")
    if len(lines) < 2 or not lines[-1].startswith("checksum "):
        raise ChecksumMismatchError("checksum line missing (file truncated?)")
    payload_lines = lines[1:-1]
    payload = "".join(line + "\n" for line in payload_lines)
    stated = lines[-1][len("checksum "):].strip()
    actual = f"{zlib.crc32(payload.encode('utf-8')) & 0xFFFFFFFF:08x}"
    if stated != actual:
        raise ChecksumMismatchError(f"payload checksum {actual} != stated {stated}")

    store = CensusStore()
    header: tuple[int, int, int] | None = None
    encodings: list[str] = []

    def close_record() -> None:
        if header is None:
            return
        n, m, count = header
        record = CensusRecord(n, m, count, tuple(encodings) if encodings else None)
        record.validate()
        store.add(record)

    for line in payload_lines:
        if line.startswith("  "):
            if header is None:
                raise IoFailureError("indented encoding before any record line")
            encodings.append(line[2:])
            continue
        close_record()
        tokens = line.split()
        if len(tokens) != 3:
            raise IoFailureError(f"bad record line {line!r}")
        try:
            header = (int(tokens[0]), int(tokens[1]), int(tokens[2]))
        except ValueError as exc:
            raise IoFailureError(f"bad record line {line!r}") from exc
        encodings = []
    close_record()
    return store
