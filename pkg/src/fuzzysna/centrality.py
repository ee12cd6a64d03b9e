"""Fuzzy centrality indices and their crisp baselines.

Direction convention: "in" always aggregates what arrives at a node
(incoming ties, intensities of connections INTO it) and "out" what leaves
it. Set IndexParameters.swap_closeness_directions for the mirrored reading
of the closeness pair.

Degrees aggregate the node's present edges with a fuzzy OWA whose weight
preset expands to the number of present edges; closeness aggregates the
best-connection intensities to or from every other node within the step
cap, with unreachable nodes contributing crisp 0; betweenness counts, for
each ordered pair, the fraction of tied-best bottleneck paths that cross
the node. Path comparison for betweenness always happens on scale-normalized
edge values (rankings are scale-invariant, and tie_eps then has a fixed
meaning); degrees and closeness normalize only when `normalized` is set.

An empty aggregation (isolated node, single-node network) yields crisp 0
rather than an error, so reports stay total.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import kernels
from .aggregation import WeightVector, fowa
from .errors import DomainError, TruncationWarning
from .graph import DEFAULT_MAX_PATHS, DEFAULT_STEP_CAP, DEFAULT_TIE_EPS, FuzzyDigraph, _intensity_grid
from .tfn import TFN

__all__ = [
    "IndexParameters",
    "FUZZY_INDICES",
    "CRISP_INDICES",
    "REPORT_INDICES",
    "fuzzy_in_degree",
    "fuzzy_out_degree",
    "fuzzy_total_degree",
    "fuzzy_betweenness",
    "fuzzy_betweenness_all",
    "fuzzy_in_closeness",
    "fuzzy_out_closeness",
    "fuzzy_total_closeness",
    "reciprocal_closeness",
    "CrispBaselines",
    "crisp_baselines",
    "ReportRow",
    "CentralityReport",
    "build_report",
]

_ZERO = TFN(0.0, 0.0, 0.0)

#: Indices with fuzzy values, in report order.
FUZZY_INDICES = (
    "in-degree",
    "out-degree",
    "total-degree",
    "betweenness",
    "in-closeness",
    "out-closeness",
    "total-closeness",
)

#: Names the crisp-baselines selection expands to.
CRISP_INDICES = (
    "crisp-in-degree",
    "crisp-out-degree",
    "crisp-total-degree",
    "crisp-closeness",
    "crisp-betweenness",
)

#: Everything build_report accepts.
REPORT_INDICES = FUZZY_INDICES + ("crisp-baselines",)


@dataclass(frozen=True)
class IndexParameters:
    """Knobs shared by all centrality computations.

    weights: OWA preset name ('mean', 'max', 'min') expanded per node to the
        number of aggregated values, or an explicit WeightVector whose length
        must then match everywhere it is used.
    step_cap: maximum number of edges per path for closeness/betweenness.
    tie_eps: CoG slack within which paths count as tied-best.
    normalized: divide edges by the scale before aggregating.
    scale_max: overrides the network's declared scale when set.
    max_paths: per-pair cap for tied-path enumeration.
    """

    weights: str | WeightVector = "mean"
    step_cap: int = DEFAULT_STEP_CAP
    tie_eps: float = DEFAULT_TIE_EPS
    normalized: bool = True
    scale_max: float | None = None
    max_paths: int = DEFAULT_MAX_PATHS
    swap_closeness_directions: bool = False

    def __post_init__(self):
        if isinstance(self.weights, str):
            WeightVector.preset(self.weights, 2)  # validates the name
        elif not isinstance(self.weights, WeightVector):
            object.__setattr__(self, "weights", WeightVector(tuple(self.weights)))
        if self.step_cap < 1:
            raise DomainError(f"step_cap must be >= 1, got {self.step_cap}")
        if self.tie_eps < 0:
            raise DomainError(f"tie_eps must be >= 0, got {self.tie_eps!r}")
        if self.max_paths < 1:
            raise DomainError(f"max_paths must be >= 1, got {self.max_paths}")
        if self.scale_max is not None and not (self.scale_max > 0):
            raise DomainError(f"scale_max must be positive, got {self.scale_max!r}")


def _effective_scale(g: FuzzyDigraph, params: IndexParameters) -> float:
    if params.scale_max is None:
        return g.scale_max
    for u, v, t in g.edges():
        if t.right > params.scale_max:
            raise DomainError(
                f"edge ({u!r}, {v!r}) exceeds scale_max override "
                f"{params.scale_max!r}"
            )
    return params.scale_max


def _aggregation_graph(g: FuzzyDigraph, params: IndexParameters) -> FuzzyDigraph:
    """The graph degrees and closeness actually operate on."""
    if not params.normalized:
        return g
    return g.normalized(_effective_scale(g, params))


def _path_graph(g: FuzzyDigraph, params: IndexParameters) -> FuzzyDigraph:
    """Betweenness always compares paths on the normalized scale."""
    return g.normalized(_effective_scale(g, params))


def _resolve_weights(spec: str | WeightVector, k: int) -> WeightVector:
    if isinstance(spec, str):
        return WeightVector.preset(spec, k)
    if len(spec) != k:
        raise DomainError(
            f"explicit weight vector has length {len(spec)}, "
            f"but {k} values are aggregated; use a preset name instead"
        )
    return spec


def _aggregate(values: Sequence[TFN], params: IndexParameters) -> TFN:
    if not values:
        return _ZERO
    return fowa(_resolve_weights(params.weights, len(values)), values)


# -- degrees ---------------------------------------------------------------


def fuzzy_in_degree(
    g: FuzzyDigraph, v: str, params: IndexParameters = IndexParameters()
) -> TFN:
    """OWA aggregation of the ties arriving at v (crisp 0 when none)."""
    gw = _aggregation_graph(g, params)
    return _aggregate([t for _, t in gw.in_edges(v)], params)


def fuzzy_out_degree(
    g: FuzzyDigraph, v: str, params: IndexParameters = IndexParameters()
) -> TFN:
    """OWA aggregation of the ties leaving v (crisp 0 when none)."""
    gw = _aggregation_graph(g, params)
    return _aggregate([t for _, t in gw.out_edges(v)], params)


def fuzzy_total_degree(
    g: FuzzyDigraph, v: str, params: IndexParameters = IndexParameters()
) -> TFN:
    """Sum of the out- and in-degree TFNs."""
    return fuzzy_out_degree(g, v, params) + fuzzy_in_degree(g, v, params)


# -- betweenness -------------------------------------------------------------


def fuzzy_betweenness_all(
    g: FuzzyDigraph, params: IndexParameters = IndexParameters()
) -> dict[str, float]:
    """Betweenness for every node in one sweep.

    For each ordered pair (s, t) with a path within step_cap, every node
    strictly inside a tied-best path earns the fraction of tied paths that
    cross it. Emits a TruncationWarning when any pair hit max_paths; the
    affected fractions are then computed from the enumerated subset.
    """
    values, truncated = _betweenness_values(g, params)
    if truncated:
        warnings.warn(
            "tied-path enumeration hit max_paths; betweenness may be partial",
            TruncationWarning,
            stacklevel=2,
        )
    return values


def fuzzy_betweenness(
    g: FuzzyDigraph, v: str, params: IndexParameters = IndexParameters()
) -> float:
    """Betweenness of one node (computes the full sweep; crisp scalar)."""
    g.index(v)
    return fuzzy_betweenness_all(g, params)[v]


def _betweenness_values(
    g: FuzzyDigraph, params: IndexParameters
) -> tuple[dict[str, float], bool]:
    gp = _path_graph(g, params)
    indptr, nbr, wts, _ = gp._csr()
    n = gp.n
    cap = params.step_cap
    acc = [0.0] * n
    truncated_any = False
    for t in range(n):
        table = kernels.bottleneck_table(indptr, nbr, wts, n, t, cap)
        best_row = table[cap]
        for s in range(n):
            if s == t:
                continue
            opt = best_row[s]
            if opt == kernels.NEG_INF:
                continue
            paths, truncated = kernels.enumerate_tied_paths(
                indptr, nbr, wts, table, s, t, cap,
                opt - params.tie_eps, params.max_paths,
            )
            if truncated:
                truncated_any = True
            if not paths:
                continue
            crossings: dict[int, int] = {}
            for p in paths:
                for v in p[1:-1]:
                    crossings[v] = crossings.get(v, 0) + 1
            total = len(paths)
            for v, c in crossings.items():
                acc[v] += c / total
    return {g.nodes[i]: acc[i] for i in range(n)}, truncated_any


# -- closeness ---------------------------------------------------------------


def _closeness_pair(
    gw: FuzzyDigraph,
    grid: list[list[TFN | None]],
    idx: int,
    params: IndexParameters,
) -> tuple[TFN, TFN]:
    """(incoming, outgoing) closeness of node idx from a precomputed grid."""
    arriving = [
        grid[s][idx] if grid[s][idx] is not None else _ZERO
        for s in range(gw.n)
        if s != idx
    ]
    leaving = [
        grid[idx][t] if grid[idx][t] is not None else _ZERO
        for t in range(gw.n)
        if t != idx
    ]
    into = _aggregate(arriving, params)
    outof = _aggregate(leaving, params)
    if params.swap_closeness_directions:
        return outof, into
    return into, outof


def fuzzy_in_closeness(
    g: FuzzyDigraph, v: str, params: IndexParameters = IndexParameters()
) -> TFN:
    """Aggregated intensity of the best connections arriving at v.

    Every other node contributes the intensity of its best path into v
    within step_cap edges, crisp 0 when it cannot reach v at all.
    """
    gw = _aggregation_graph(g, params)
    grid = _intensity_grid(gw, params.step_cap)
    return _closeness_pair(gw, grid, g.index(v), params)[0]


def fuzzy_out_closeness(
    g: FuzzyDigraph, v: str, params: IndexParameters = IndexParameters()
) -> TFN:
    """Aggregated intensity of v's best connections to every other node."""
    gw = _aggregation_graph(g, params)
    grid = _intensity_grid(gw, params.step_cap)
    return _closeness_pair(gw, grid, g.index(v), params)[1]


def fuzzy_total_closeness(
    g: FuzzyDigraph, v: str, params: IndexParameters = IndexParameters()
) -> TFN:
    """Sum of the in- and out-closeness TFNs."""
    gw = _aggregation_graph(g, params)
    grid = _intensity_grid(gw, params.step_cap)
    into, outof = _closeness_pair(gw, grid, g.index(v), params)
    return into + outof


def reciprocal_closeness(value: TFN) -> TFN:
    """Interval reciprocal (1/right, 1/mode, 1/left) of a positive TFN.

    The left endpoint must be strictly positive; otherwise the reciprocal
    support is unbounded and a DomainError is raised.
    """
    if value.left <= 0:
        raise DomainError(
            f"reciprocal needs a strictly positive support, got left={value.left!r}"
        )
    return TFN(1.0 / value.right, 1.0 / value.mode, 1.0 / value.left)


# -- crisp baselines ----------------------------------------------------------


@dataclass(frozen=True)
class CrispBaselines:
    """Classical indices on the defuzzified graph.

    Degrees count present ties (normalized by n - 1). Closeness is the
    reciprocal mean hop distance from the node to the others it can reach
    (0 when it reaches nothing); unreachable targets are excluded from the
    mean since absent ties are allowed. Betweenness counts hop-shortest
    paths through the node over ordered pairs, normalized by
    (n - 1)(n - 2).
    """

    in_degree: float
    out_degree: float
    total_degree: float
    in_degree_normalized: float
    out_degree_normalized: float
    total_degree_normalized: float
    closeness: float
    betweenness: float
    betweenness_normalized: float


def _hop_bfs(adj: list[list[int]], s: int) -> tuple[list[int], list[int]]:
    """Hop distances and shortest-path counts from s."""
    n = len(adj)
    dist = [-1] * n
    count = [0] * n
    dist[s] = 0
    count[s] = 1
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
            if dist[u] == dist[v] + 1:
                count[u] += count[v]
    return dist, count


def crisp_baselines(g: FuzzyDigraph, v: str) -> CrispBaselines:
    """Classical degree, closeness, and betweenness for one node."""
    idx = g.index(v)
    n = g.n
    adj = [[g.index(lbl) for lbl, _ in g.out_edges(u)] for u in g.nodes]
    d_in = len(g.in_edges(v))
    d_out = len(g.out_edges(v))
    denom = float(n - 1) if n > 1 else 0.0

    dist_v, _ = _hop_bfs(adj, idx)
    reached = [d for i, d in enumerate(dist_v) if i != idx and d > 0]
    closeness = len(reached) / sum(reached) if reached else 0.0

    betweenness = 0.0
    if n > 2:
        dists = []
        counts = []
        for s in range(n):
            d, c = _hop_bfs(adj, s)
            dists.append(d)
            counts.append(c)
        for s in range(n):
            if s == idx or dists[s][idx] < 0:
                continue
            for t in range(n):
                if t == s or t == idx:
                    continue
                if dists[s][t] < 0 or dists[idx][t] < 0:
                    continue
                if dists[s][idx] + dists[idx][t] == dists[s][t]:
                    through = counts[s][idx] * counts[idx][t]
                    betweenness += through / counts[s][t]
    pair_count = (n - 1) * (n - 2) if n > 2 else 0

    return CrispBaselines(
        in_degree=float(d_in),
        out_degree=float(d_out),
        total_degree=float(d_in + d_out),
        in_degree_normalized=d_in / denom if denom else 0.0,
        out_degree_normalized=d_out / denom if denom else 0.0,
        total_degree_normalized=(d_in + d_out) / denom if denom else 0.0,
        closeness=closeness,
        betweenness=betweenness,
        betweenness_normalized=betweenness / pair_count if pair_count else 0.0,
    )


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class ReportRow:
    """One node's value under one index.

    fuzzy is None for crisp indices (betweenness and the baselines); value
    is the defuzzified rank value either way.
    """

    node: str
    index: str
    fuzzy: TFN | None
    value: float
    rank: int


@dataclass(frozen=True)
class CentralityReport:
    """Ranked per-node table for one index, with the parameters echoed."""

    index: str
    parameters: Mapping[str, object]
    rows: tuple[ReportRow, ...]
    truncated: bool = False


def _echo_parameters(
    g: FuzzyDigraph, params: IndexParameters
) -> dict[str, object]:
    if isinstance(params.weights, str):
        weights = params.weights
    else:
        weights = ";".join(repr(w) for w in params.weights)
    return {
        "weights": weights,
        "step_cap": params.step_cap,
        "tie_eps": params.tie_eps,
        "normalized": params.normalized,
        "scale_max": _effective_scale(g, params),
        "max_paths": params.max_paths,
    }


def _ranked_rows(
    index: str, scored: list[tuple[str, TFN | None, float]]
) -> tuple[ReportRow, ...]:
    # descending value; equal values ordered by ascending node label
    order = sorted(scored, key=lambda item: (-item[2], item[0]))
    return tuple(
        ReportRow(node=node, index=index, fuzzy=fz, value=val, rank=i + 1)
        for i, (node, fz, val) in enumerate(order)
    )


def build_report(
    g: FuzzyDigraph,
    indices: Sequence[str],
    params: IndexParameters = IndexParameters(),
) -> list[CentralityReport]:
    """Ranked reports for the requested indices.

    Accepts names from REPORT_INDICES; "crisp-baselines" expands to the five
    CRISP_INDICES reports. Shared work (the intensity grid, the betweenness
    sweep) is computed once per call.
    """
    for name in indices:
        if name not in REPORT_INDICES:
            raise DomainError(
                f"unknown index {name!r}; expected one of {', '.join(REPORT_INDICES)}"
            )
    if not indices:
        raise DomainError("no indices selected")

    echo = _echo_parameters(g, params)
    gw = _aggregation_graph(g, params)
    reports: list[CentralityReport] = []

    need_closeness = any(name.endswith("closeness") for name in indices)
    grid = _intensity_grid(gw, params.step_cap) if need_closeness else None

    betweenness: dict[str, float] | None = None
    betweenness_truncated = False
    if "betweenness" in indices:
        betweenness, betweenness_truncated = _betweenness_values(g, params)
        if betweenness_truncated:
            warnings.warn(
                "tied-path enumeration hit max_paths; betweenness may be partial",
                TruncationWarning,
                stacklevel=2,
            )

    baselines: dict[str, CrispBaselines] | None = None
    if "crisp-baselines" in indices:
        baselines = {v: crisp_baselines(g, v) for v in g.nodes}

    for name in indices:
        if name == "betweenness":
            scored = [(v, None, betweenness[v]) for v in g.nodes]
            reports.append(
                CentralityReport(
                    index=name,
                    parameters=echo,
                    rows=_ranked_rows(name, scored),
                    truncated=betweenness_truncated,
                )
            )
            continue
        if name == "crisp-baselines":
            for crisp_name, attr in (
                ("crisp-in-degree", "in_degree"),
                ("crisp-out-degree", "out_degree"),
                ("crisp-total-degree", "total_degree"),
                ("crisp-closeness", "closeness"),
                ("crisp-betweenness", "betweenness"),
            ):
                scored = [
                    (v, None, getattr(baselines[v], attr)) for v in g.nodes
                ]
                reports.append(
                    CentralityReport(
                        index=crisp_name,
                        parameters=echo,
                        rows=_ranked_rows(crisp_name, scored),
                    )
                )
            continue
        values: list[TFN] = []
        if name == "in-degree":
            values = [
                _aggregate([t for _, t in gw.in_edges(v)], params)
                for v in g.nodes
            ]
        elif name == "out-degree":
            values = [
                _aggregate([t for _, t in gw.out_edges(v)], params)
                for v in g.nodes
            ]
        elif name == "total-degree":
            values = [
                _aggregate([t for _, t in gw.out_edges(v)], params)
                + _aggregate([t for _, t in gw.in_edges(v)], params)
                for v in g.nodes
            ]
        else:
            pairs = [
                _closeness_pair(gw, grid, i, params) for i in range(g.n)
            ]
            if name == "in-closeness":
                values = [p[0] for p in pairs]
            elif name == "out-closeness":
                values = [p[1] for p in pairs]
            else:
                values = [p[0] + p[1] for p in pairs]
        scored = [(v, fz, fz.cog()) for v, fz in zip(g.nodes, values)]
        reports.append(
            CentralityReport(
                index=name, parameters=echo, rows=_ranked_rows(name, scored)
            )
        )
    return reports
