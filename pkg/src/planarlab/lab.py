"""Experiment harness: event indicators, exact and sampled probabilities,
density regimes, and phase tables.

Exact rows are ratios of census counts (rationals).  Sampled rows carry a
binomial standard error, and MCMC-backed rows are always tagged diagnostic
because single-swap chain uniformity is unproven.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from ._bits import pair_count
from .census import class_counts, enumerate_all, max_planar_edges
from .errors import EmptyClassError, PatternError
from .graphs import (
    LabeledGraph,
    add_count,
    bridges,
    degree_histogram,
    encode,
    kappa,
)
from .patterns import (
    Pattern,
    count_appearances,
    count_components_isomorphic,
    count_good_triangles,
    has_copy,
    pattern_from_name,
)
from .sampler import sample_many

EVENT_KINDS = (
    "connected",
    "component",       # has a component isomorphic to the pattern
    "copy",            # has a subgraph copy of the pattern
    "isolated",        # has an isolated vertex
    "pendant",         # at least <threshold> pendant edges
    "appearances",     # at least <threshold> appearances of the pattern
    "components",      # at least <threshold> components isomorphic to the pattern
)


@dataclass(frozen=True)
class EventKind:
    kind: str
    pattern: Pattern | None = None
    threshold: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in EVENT_KINDS:
            raise ValueError(f"unknown event kind {self.kind!r}")
        needs_pattern = self.kind in ("component", "copy", "appearances", "components")
        if needs_pattern and self.pattern is None:
            raise ValueError(f"event {self.kind!r} needs a pattern")
        needs_threshold = self.kind in ("pendant", "appearances", "components")
        if needs_threshold and (self.threshold is None or self.threshold < 0):
            raise ValueError(f"event {self.kind!r} needs a non-negative threshold")

    def describe(self) -> str:
        if self.kind == "connected":
            return "connected"
        if self.kind == "isolated":
            return "isolated"
        if self.kind == "component":
            return f"component:{self.pattern.name}"
        if self.kind == "copy":
            return f"copy:{self.pattern.name}"
        if self.kind == "pendant":
            return f"pendant>={self.threshold}"
        if self.kind == "appearances":
            return f"appearances:{self.pattern.name}>={self.threshold}"
        return f"components:{self.pattern.name}>={self.threshold}"

    # convenience constructors
    @staticmethod
    def connected() -> "EventKind":
        return EventKind("connected")

    @staticmethod
    def has_component(pattern: Pattern) -> "EventKind":
        return EventKind("component", pattern)

    @staticmethod
    def has_copy(pattern: Pattern) -> "EventKind":
        return EventKind("copy", pattern)

    @staticmethod
    def has_isolated_vertex() -> "EventKind":
        return EventKind("isolated")

    @staticmethod
    def min_pendant_edges(threshold: int) -> "EventKind":
        return EventKind("pendant", None, threshold)

    @staticmethod
    def min_appearances(pattern: Pattern, threshold: int) -> "EventKind":
        return EventKind("appearances", pattern, threshold)

    @staticmethod
    def min_components(pattern: Pattern, threshold: int) -> "EventKind":
        return EventKind("components", pattern, threshold)


def parse_event(token: str) -> EventKind:
    """Parse the canonical event syntax used by describe() and the CLI."""
    text = token.strip()
    if text == "connected":
        return EventKind.connected()
    if text == "isolated":
        return EventKind.has_isolated_vertex()
    if text.startswith("pendant>="):
        return EventKind.min_pendant_edges(int(text[len("pendant>="):]))
    for head, maker in (("appearances", EventKind.min_appearances),
                        ("components", EventKind.min_components)):
        prefix = head + ":"
        if text.startswith(prefix) and ">=" in text:
            body, _, thr = text[len(prefix):].rpartition(">=")
            return maker(pattern_from_name(body), int(thr))
    for head, maker in (("component", EventKind.has_component), ("copy", EventKind.has_copy)):
        prefix = head + ":"
        if text.startswith(prefix):
            return maker(pattern_from_name(text[len(prefix):]))
    raise PatternError(f"cannot parse event {token!r}")


def pendant_edge_count(g: LabeledGraph) -> int:
    """Edges with an endpoint of degree 1 (an isolated edge counts once)."""
    deg = g.degrees
    return sum(1 for i, j in g.edges if deg[i] == 1 or deg[j] == 1)


def isolated_vertex_count(g: LabeledGraph) -> int:
    deg = g.degrees
    return sum(1 for v in range(1, g.n + 1) if deg[v] == 0)


def evaluate_event(g: LabeledGraph, event: EventKind) -> bool:
    """Indicator of the event on one graph; never raises."""
    if event.kind == "connected":
        return kappa(g) == 1
    if event.kind == "isolated":
        return isolated_vertex_count(g) >= 1
    if event.kind == "component":
        return count_components_isomorphic(g, event.pattern) >= 1
    if event.kind == "copy":
        return has_copy(g, event.pattern)
    if event.kind == "pendant":
        return pendant_edge_count(g) >= event.threshold
    if event.kind == "appearances":
        if event.pattern.size >= g.n:
            return event.threshold == 0  # no witness set W can exist
        return count_appearances(g, event.pattern) >= event.threshold
    return count_components_isomorphic(g, event.pattern) >= event.threshold


# -- density regimes -------------------------------------------------------------


@dataclass(frozen=True)
class DensityRegime:
    label: str  # sparse | critical | middle | saturated
    ratio: Fraction


def regime_of(n: int, m: int, delta: float = 0.05, gamma: float = 0.05) -> DensityRegime:
    """Classify m/n against the sparse / critical / middle / saturated bands."""
    ratio = Fraction(m, n)
    band = Fraction(delta).limit_denominator(10**6)
    if ratio < 1 - band:
        label = "sparse"
    elif abs(ratio - 1) <= band:
        label = "critical"
    elif m < 3 * n - 6 - gamma * n:
        label = "middle"
    else:
        label = "saturated"
    return DensityRegime(label, ratio)


# -- probabilities ----------------------------------------------------------------


def exact_event_counts(
    n: int,
    events,
    m_values=None,
    *,
    budget: int | None = None,
) -> dict[int, list[int]]:
    """Satisfying-graph counts per m for several events, from one class sweep."""
    events = list(events)
    if m_values is None:
        wanted = set(range(max_planar_edges(n) + 1))
    else:
        wanted = set(m_values)
    tallies: dict[int, list[int]] = {m: [0] * len(events) for m in wanted}

    def absorb(g: LabeledGraph) -> None:
        row = tallies.get(g.m)
        if row is None:
            return
        for idx, event in enumerate(events):
            if evaluate_event(g, event):
                row[idx] += 1

    enumerate_all(n, absorb, budget=budget)
    return tallies


def exact_probability(
    n: int, m: int, event: EventKind, *, budget: int | None = None
) -> Fraction:
    """P[event] under the uniform class law, as an exact rational."""
    total = class_counts(n, budget=budget)[m] if m <= pair_count(n) else 0
    if total == 0:
        raise EmptyClassError(f"class ({n}, {m}) is empty")
    hits = exact_event_counts(n, [event], [m], budget=budget)[m][0]
    return Fraction(hits, total)


@dataclass(frozen=True)
class ProbabilityEstimate:
    value: float
    stderr: float
    method: str  # "exact-sample" or "mcmc-diagnostic"
    k: int
    seed: int

    @property
    def diagnostic(self) -> bool:
        return self.method.startswith("mcmc")


def estimate_probability(
    n: int,
    m: int,
    event: EventKind,
    *,
    method: str = "mcmc",
    k: int = 1000,
    seed: int = 0,
    burn_in: int | None = None,
    thinning: int | None = None,
    census=None,
) -> ProbabilityEstimate:
    """Sample frequency of the event with its binomial standard error."""
    from .graphs import decode

    batch = sample_many(
        n, m, k, method=method, seed=seed, burn_in=burn_in, thinning=thinning, census=census
    )
    hits = sum(1 for enc in batch.samples if evaluate_event(decode(enc), event))
    p_hat = hits / k if k else 0.0
    stderr = (p_hat * (1.0 - p_hat) / k) ** 0.5 if k else 0.0
    tag = "exact-sample" if method == "exact" else "mcmc-diagnostic"
    return ProbabilityEstimate(p_hat, stderr, tag, k, seed)


# -- phase tables -----------------------------------------------------------------


@dataclass(frozen=True)
class ExperimentSpec:
    grid: tuple[tuple[int, int], ...]
    events: tuple[EventKind, ...]
    method: str = "exact"  # "exact" | "mcmc"
    k: int | None = None
    seed: int | None = None


@dataclass(frozen=True)
class ExperimentRow:
    n: int
    m: int
    ratio: Fraction
    regime: str
    event: str
    prob: float
    stderr: float
    method: str
    k: int
    seed: int | None


@dataclass(frozen=True)
class ExperimentResult:
    spec: ExperimentSpec
    rows: tuple[ExperimentRow, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "m", "ratio", "regime", "event", "prob", "stderr",
                         "method", "k", "seed"])
        for row in self.rows:
            writer.writerow([
                row.n, row.m, str(row.ratio), row.regime, row.event,
                repr(row.prob), repr(row.stderr) if row.method != "exact" else "0",
                row.method, row.k, "" if row.seed is None else row.seed,
            ])
        return buf.getvalue()


def phase_table(spec: ExperimentSpec, *, budget: int | None = None) -> ExperimentResult:
    """One row per (n, m, event), exact over the census or sampled."""
    rows: list[ExperimentRow] = []
    if spec.method == "exact":
        by_n: dict[int, list[int]] = {}
        for n, m in spec.grid:
            by_n.setdefault(n, []).append(m)
        tallies = {
            n: exact_event_counts(n, spec.events, ms, budget=budget)
            for n, ms in by_n.items()
        }
        counts = {n: class_counts(n, budget=budget) for n in by_n}
        for n, m in spec.grid:
            total = counts[n][m] if m <= pair_count(n) else 0
            if total == 0:
                raise EmptyClassError(f"class ({n}, {m}) is empty")
            regime = regime_of(n, m)
            for idx, event in enumerate(spec.events):
                p = Fraction(tallies[n][m][idx], total)
                rows.append(ExperimentRow(
                    n, m, regime.ratio, regime.label, event.describe(),
                    float(p), 0.0, "exact", total, None,
                ))
    elif spec.method == "mcmc":
        if spec.k is None or spec.seed is None:
            raise ValueError("mcmc phase tables need k and seed")
        from .graphs import decode

        for cell_index, (n, m) in enumerate(spec.grid):
            cell_seed = spec.seed + cell_index
            batch = sample_many(n, m, spec.k, method="mcmc", seed=cell_seed)
            graphs = [decode(enc) for enc in batch.samples]
            regime = regime_of(n, m)
            for event in spec.events:
                hits = sum(1 for g in graphs if evaluate_event(g, event))
                p_hat = hits / spec.k
                stderr = (p_hat * (1.0 - p_hat) / spec.k) ** 0.5
                rows.append(ExperimentRow(
                    n, m, regime.ratio, regime.label, event.describe(),
                    p_hat, stderr, "mcmc-diagnostic", spec.k, cell_seed,
                ))
    else:
        raise ValueError(f"unknown method {spec.method!r}")
    return ExperimentResult(spec, tuple(rows))


# -- per-graph statistics bundle ----------------------------------------------------


@dataclass(frozen=True)
class GraphStatistics:
    encoding: str
    f_h: int | None
    pendant_edges: int
    add_count: int
    kappa: int
    bridges: tuple[tuple[int, int], ...]
    isolated: int
    good_triangles: int
    degree_histogram: dict[int, int]

    def as_dict(self) -> dict:
        return {
            "graph": self.encoding,
            "f_H": self.f_h,
            "pendant_edges": self.pendant_edges,
            "add_count": self.add_count,
            "kappa": self.kappa,
            "bridges": [list(edge) for edge in self.bridges],
            "isolated": self.isolated,
            "good_triangles": self.good_triangles,
            "degree_histogram": {str(d): c for d, c in self.degree_histogram.items()},
        }


def compute_statistics(g: LabeledGraph, pattern: Pattern | None = None) -> GraphStatistics:
    f_h = None
    if pattern is not None:
        f_h = count_appearances(g, pattern) if pattern.size < g.n else 0
    return GraphStatistics(
        encoding=encode(g),
        f_h=f_h,
        pendant_edges=pendant_edge_count(g),
        add_count=add_count(g),
        kappa=kappa(g),
        bridges=tuple(sorted(bridges(g))),
        isolated=isolated_vertex_count(g),
        good_triangles=count_good_triangles(g),
        degree_histogram=degree_histogram(g).counts,
    )
