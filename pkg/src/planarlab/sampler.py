"""Uniform sampling from the planar classes.

Exact sampling draws an index into a stored census.  The Markov chain swaps
one edge for one non-edge per step and accepts exactly when the result stays
planar; the proposal is symmetric (edge and non-edge counts are invariant),
so the uniform distribution on the reachable class is stationary.  Chains are
deterministic functions of their 64-bit seed (Mersenne Twister via
random.Random, documented and stable).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ._bits import pair_count, pairs_in_order
from .errors import CensusMissingError, EmptyClassBoundError, EmptyClassError
from .graphs import LabeledGraph, decode, encode
from .planarity import is_planar_edges

DEFAULT_BURN_IN_FACTOR = 50  # burn_in = 50 * n * m
# thinning = n * m


def fan_triangulation_edges(n: int) -> list[tuple[int, int]]:
    """Canonical triangulation on {1..n}: fan at 1, path 2..n, chords from 2."""
    if n <= 1:
        return []
    if n == 2:
        return [(1, 2)]
    edges = [(1, j) for j in range(2, n + 1)]
    edges += [(j, j + 1) for j in range(2, n)]
    edges += [(2, j) for j in range(4, n + 1)]
    return sorted(edges)


def mcmc_init(n: int, m: int) -> LabeledGraph:
    """Deterministic start state: first m fan-triangulation edges, lex order."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    fan = fan_triangulation_edges(n)
    if m > len(fan):
        raise EmptyClassBoundError(f"no planar graph with n={n}, m={m}")
    return LabeledGraph(n, frozenset(fan[:m]))


@dataclass
class ChainState:
    """One edge-swap chain; deterministic given (n, m, seed)."""

    n: int
    m: int
    seed: int
    steps_taken: int = 0

    def __post_init__(self) -> None:
        start = mcmc_init(self.n, self.m)
        self._edges: list[tuple[int, int]] = sorted(start.edges)
        self._edge_set: set[tuple[int, int]] = set(self._edges)
        self.rng = random.Random(self.seed)

    @property
    def current(self) -> LabeledGraph:
        return LabeledGraph(self.n, frozenset(self._edge_set))

    @property
    def rng_state(self):
        return self.rng.getstate()


def mcmc_step(state: ChainState) -> ChainState:
    """Advance one step; rejected proposals still advance the counter."""
    state.steps_taken += 1
    n, m = state.n, state.m
    total = pair_count(n)
    if m == 0 or m == total:
        return state  # single-state chain
    rng = state.rng
    edges = state._edges
    edge_set = state._edge_set
    drop = rng.randrange(m)
    removed = edges[drop]
    pairs = pairs_in_order(n)
    while True:  # rejection-sample a uniform non-edge
        added = pairs[rng.randrange(total)]
        if added not in edge_set:
            break
    edge_set.discard(removed)
    edge_set.add(added)
    if is_planar_edges(n, edge_set):
        edges[drop] = added
    else:
        edge_set.discard(added)
        edge_set.add(removed)
    assert len(edge_set) == m
    return state


@dataclass(frozen=True)
class SampleBatch:
    """Samples plus the parameters that produced them, as encodings."""

    n: int
    m: int
    method: str
    seed: int
    burn_in: int
    thinning: int
    samples: tuple[str, ...]


def exact_sample(n: int, m: int, seed: int, census) -> LabeledGraph:
    """One uniform draw from a census record that stores its graphs."""
    record = census.get(n, m)
    if record is None:
        raise CensusMissingError(f"no census record for ({n}, {m})")
    if record.count == 0:
        raise EmptyClassError(f"class ({n}, {m}) is empty")
    if record.graphs is None:
        raise CensusMissingError(f"census record for ({n}, {m}) has no stored graphs")
    rng = random.Random(seed)
    return decode(record.graphs[rng.randrange(record.count)])


def sample_many(
    n: int,
    m: int,
    count: int,
    *,
    method: str = "mcmc",
    seed: int = 0,
    burn_in: int | None = None,
    thinning: int | None = None,
    census=None,
) -> SampleBatch:
    """Draw ``count`` samples; exact draws are independent, MCMC is one chain."""
    if count < 0:
        raise ValueError("count must be non-negative")
    if method == "exact":
        record = census.get(n, m) if census is not None else None
        if record is None:
            raise CensusMissingError(f"no census record for ({n}, {m})")
        if record.count == 0:
            raise EmptyClassError(f"class ({n}, {m}) is empty")
        if record.graphs is None:
            raise CensusMissingError(f"census record for ({n}, {m}) has no stored graphs")
        rng = random.Random(seed)
        samples = tuple(record.graphs[rng.randrange(record.count)] for _ in range(count))
        return SampleBatch(n, m, "exact", seed, 0, 0, samples)
    if method != "mcmc":
        raise ValueError(f"unknown sampling method {method!r}")
    if burn_in is None:
        burn_in = DEFAULT_BURN_IN_FACTOR * n * m
    if thinning is None:
        thinning = max(1, n * m)
    if thinning < 1:
        raise ValueError("thinning must be at least 1")
    state = ChainState(n, m, seed)
    for _ in range(burn_in):
        mcmc_step(state)
    out: list[str] = []
    for _ in range(count):
        for _ in range(thinning):
            mcmc_step(state)
        out.append(encode(state.current))
    return SampleBatch(n, m, "mcmc", seed, burn_in, thinning, tuple(out))


def tv_distance_to_uniform(batch: SampleBatch, census) -> float:
    """Half the L1 gap between the batch's empirical law and uniform."""
    record = census.get(batch.n, batch.m)
    if record is None or record.graphs is None:
        raise CensusMissingError(f"need stored graphs for ({batch.n}, {batch.m})")
    if record.count == 0:
        raise EmptyClassError(f"class ({batch.n}, {batch.m}) is empty")
    if not batch.samples:
        raise ValueError("cannot measure an empty batch")
    support = set(record.graphs)
    freq: dict[str, int] = {}
    for enc in batch.samples:
        if enc not in support:
            raise ValueError(f"sample {enc!r} is not in the stored class")
        freq[enc] = freq.get(enc, 0) + 1
    k = len(batch.samples)
    target = 1.0 / record.count
    total = sum(abs(freq.get(enc, 0) / k - target) for enc in record.graphs)
    return total / 2.0
