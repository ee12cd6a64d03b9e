"""Directed fuzzy networks and step-capped maximin paths.

A directed fuzzy network keeps an ordered tuple of node labels and an
optional triangular fuzzy tie strength per ordered pair (no self-loops).
Absent ties are genuinely absent, not zero-strength.

Path semantics: the intensity of a simple path is its weakest edge, where
"weakest" compares centre-of-gravity rank values (earliest edge wins ties).
The best path between two nodes maximises that bottleneck value over all
simple paths within a step cap; remaining ties go to the shorter path and
then to the lexicographically smaller node-label sequence, which makes every
result deterministic. Because dropping a cycle never lowers a bottleneck,
the step-capped dynamic program over walks is exact for simple paths.

The heavy loops (bottleneck tables, path reconstruction, tied-path
enumeration) live in fuzzysna.kernels with compiled and pure-Python
backends.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import DomainError, InvalidPathError, UnknownNodeError
from .tfn import TFN

__all__ = [
    "DEFAULT_STEP_CAP",
    "DEFAULT_TIE_EPS",
    "DEFAULT_MAX_PATHS",
    "FuzzyDigraph",
    "PathEvaluation",
    "PathEnumeration",
    "IntensityMatrix",
    "path_intensity",
    "best_path",
    "all_best_paths",
    "connected_intensity",
    "intensity_matrix",
    "random_network",
]

DEFAULT_STEP_CAP = 4
DEFAULT_TIE_EPS = 1e-9
DEFAULT_MAX_PATHS = 100_000

_ZERO = TFN(0.0, 0.0, 0.0)
_ONE = TFN(1.0, 1.0, 1.0)


def _check_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise DomainError(f"node labels must be nonempty strings, got {label!r}")
    if any(ch in label for ch in "\t\n\r"):
        raise DomainError(f"node label {label!r} contains tab or newline")
    return label


class FuzzyDigraph:
    """Immutable directed network with TFN-weighted ties.

    nodes: ordered unique labels; edges: mapping (from, to) -> TFN. Every
    edge support must lie within [0, scale_max] of the declared scale.
    """

    __slots__ = ("_nodes", "_index", "_scale_max", "_out", "_in", "_csr_cache")

    def __init__(
        self,
        nodes: Sequence[str],
        edges: Mapping[tuple[str, str], TFN] | None = None,
        scale_max: float = 1.0,
    ):
        labels = tuple(_check_label(v) for v in nodes)
        if len(set(labels)) != len(labels):
            raise DomainError("node labels must be unique")
        scale_max = float(scale_max)
        if not (scale_max > 0):
            raise DomainError(f"scale_max must be positive, got {scale_max!r}")
        index = {label: i for i, label in enumerate(labels)}
        n = len(labels)
        out: list[dict[int, TFN]] = [{} for _ in range(n)]
        incoming: list[dict[int, TFN]] = [{} for _ in range(n)]
        items = []
        for (u, v), t in (edges or {}).items():
            if u not in index:
                raise UnknownNodeError(f"unknown node {u!r}")
            if v not in index:
                raise UnknownNodeError(f"unknown node {v!r}")
            if u == v:
                raise DomainError(f"self-loop on {u!r} is not allowed")
            if not isinstance(t, TFN):
                raise DomainError(f"edge ({u!r}, {v!r}) value must be a TFN")
            if t.left < 0 or t.right > scale_max:
                raise DomainError(
                    f"edge ({u!r}, {v!r}) support [{t.left!r}, {t.right!r}] "
                    f"outside [0, {scale_max!r}]"
                )
            items.append((index[u], index[v], t))
        # row-major storage makes iteration order independent of the
        # caller's dict insertion order
        items.sort(key=lambda it: (it[0], it[1]))
        for i, j, t in items:
            if j in out[i]:
                raise DomainError(
                    f"duplicate edge ({labels[i]!r}, {labels[j]!r})"
                )
            out[i][j] = t
            incoming[j][i] = t
        # re-key incoming dicts in source order
        incoming = [dict(sorted(d.items())) for d in incoming]
        self._nodes = labels
        self._index = index
        self._scale_max = scale_max
        self._out = out
        self._in = incoming
        self._csr_cache = None

    # -- basic accessors -------------------------------------------------

    @property
    def nodes(self) -> tuple[str, ...]:
        return self._nodes

    @property
    def n(self) -> int:
        return len(self._nodes)

    @property
    def scale_max(self) -> float:
        return self._scale_max

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNodeError(f"unknown node {label!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return self.edge(u, v) is not None

    def edge(self, u: str, v: str) -> TFN | None:
        return self._out[self.index(u)].get(self.index(v))

    def out_edges(self, u: str) -> tuple[tuple[str, TFN], ...]:
        """Outgoing (target label, TFN) pairs in node input order."""
        return tuple(
            (self._nodes[j], t) for j, t in self._out[self.index(u)].items()
        )

    def in_edges(self, v: str) -> tuple[tuple[str, TFN], ...]:
        """Incoming (source label, TFN) pairs in node input order."""
        return tuple(
            (self._nodes[i], t) for i, t in self._in[self.index(v)].items()
        )

    def edges(self) -> Iterator[tuple[str, str, TFN]]:
        """All edges in row-major node order."""
        for i, row in enumerate(self._out):
            for j, t in row.items():
                yield self._nodes[i], self._nodes[j], t

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self._out)

    def __eq__(self, other):
        if not isinstance(other, FuzzyDigraph):
            return NotImplemented
        return (
            self._nodes == other._nodes
            and self._scale_max == other._scale_max
            and self._out == other._out
        )

    def __repr__(self):
        return (
            f"FuzzyDigraph(n={self.n}, edges={self.edge_count}, "
            f"scale_max={self._scale_max!r})"
        )

    # -- derived graphs ---------------------------------------------------

    def normalized(self, scale_max: float | None = None) -> "FuzzyDigraph":
        """Copy with every edge divided by the scale, declared scale 1."""
        s = self._scale_max if scale_max is None else float(scale_max)
        return FuzzyDigraph(
            self._nodes,
            {
                (u, v): t.normalize(s)
                for u, v, t in self.edges()
            },
            scale_max=1.0,
        )

    def scaled(self, c: float) -> "FuzzyDigraph":
        """Copy with every edge multiplied by c >= 0, same declared scale."""
        return FuzzyDigraph(
            self._nodes,
            {(u, v): t.scale(c) for u, v, t in self.edges()},
            scale_max=self._scale_max,
        )

    # -- kernel plumbing ---------------------------------------------------

    def _csr(self):
        """Forward adjacency for the kernels, neighbors in label order.

        Returns (indptr, nbr, wts, label_rank) where weights are CoG values
        and each neighbor run is sorted so that "first match" in a kernel is
        the lexicographically smallest label.
        """
        if self._csr_cache is None:
            order = sorted(range(self.n), key=self._nodes.__getitem__)
            label_rank = [0] * self.n
            for r, i in enumerate(order):
                label_rank[i] = r
            indptr = [0]
            nbr: list[int] = []
            wts: list[float] = []
            for i in range(self.n):
                row = sorted(self._out[i], key=label_rank.__getitem__)
                nbr.extend(row)
                wts.extend(self._out[i][j].cog() for j in row)
                indptr.append(len(nbr))
            self._csr_cache = (
                np.asarray(indptr, dtype=np.int64),
                np.asarray(nbr, dtype=np.int64),
                np.asarray(wts, dtype=np.float64),
                tuple(label_rank),
            )
        return self._csr_cache


@dataclass(frozen=True)
class PathEvaluation:
    """A simple path with its intensity (weakest edge) and rank value."""

    nodes: tuple[str, ...]
    intensity: TFN
    rank: float

    def __len__(self):
        return len(self.nodes)


@dataclass(frozen=True)
class PathEnumeration:
    """Tied-best paths plus a truncation flag.

    truncated means the enumeration stopped at its cap and the list may be
    incomplete; downstream consumers surface this as a warning, never an
    error.
    """

    paths: tuple[PathEvaluation, ...]
    truncated: bool = False

    def __iter__(self):
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)

    def __getitem__(self, i):
        return self.paths[i]


def _evaluate(g: FuzzyDigraph, labels: tuple[str, ...]) -> PathEvaluation:
    """Build a PathEvaluation for a path known to be valid."""
    weakest: TFN | None = None
    weakest_rank = kernels.POS_INF
    for a, b in zip(labels, labels[1:]):
        t = g.edge(a, b)
        r = t.cog()
        if weakest is None or r < weakest_rank:
            weakest = t
            weakest_rank = r
    return PathEvaluation(nodes=labels, intensity=weakest, rank=weakest_rank)


def path_intensity(g: FuzzyDigraph, path: Sequence[str]) -> TFN:
    """Intensity of a simple path: its minimum-CoG edge TFN.

    Ties between equally ranked edges go to the earliest edge, so the
    returned TFN is deterministic even when shapes differ at equal CoG.
    Raises InvalidPathError for paths that are too short, repeat a node, or
    use an absent edge. Unknown labels raise UnknownNodeError.
    """
    labels = tuple(path)
    if len(labels) < 2:
        raise InvalidPathError("a path needs at least two nodes")
    for v in labels:
        g.index(v)
    if len(set(labels)) != len(labels):
        raise InvalidPathError(f"path {labels!r} repeats a node")
    for a, b in zip(labels, labels[1:]):
        if g.edge(a, b) is None:
            raise InvalidPathError(f"missing edge ({a!r}, {b!r})")
    return _evaluate(g, labels).intensity


def _check_path_args(g: FuzzyDigraph, source: str, target: str, max_steps: int):
    s = g.index(source)
    t = g.index(target)
    if s == t:
        raise DomainError("source and target must differ")
    if max_steps < 1:
        raise DomainError(f"max_steps must be >= 1, got {max_steps}")
    return s, t


def best_path(
    g: FuzzyDigraph,
    source: str,
    target: str,
    max_steps: int = DEFAULT_STEP_CAP,
) -> PathEvaluation | None:
    """Maximin path: a simple path maximising the bottleneck CoG.

    Searches paths of at most max_steps edges. Ties are broken toward the
    shorter path and then the lexicographically smaller label sequence.
    Returns None when the target is unreachable within the cap.
    """
    s, t = _check_path_args(g, source, target, max_steps)
    indptr, nbr, wts, _ = g._csr()
    table = kernels.bottleneck_table(indptr, nbr, wts, g.n, t, max_steps)
    idx_path = kernels.shortest_lex_path(indptr, nbr, wts, table, s, t, max_steps)
    if idx_path is None:
        return None
    return _evaluate(g, tuple(g.nodes[i] for i in idx_path))


def all_best_paths(
    g: FuzzyDigraph,
    source: str,
    target: str,
    max_steps: int = DEFAULT_STEP_CAP,
    tie_eps: float = DEFAULT_TIE_EPS,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> PathEnumeration:
    """Every simple path whose bottleneck CoG is within tie_eps of the best.

    Results are sorted by length and then label sequence. The enumeration
    stops after max_paths results and reports truncated=True.
    """
    s, t = _check_path_args(g, source, target, max_steps)
    if tie_eps < 0:
        raise DomainError(f"tie_eps must be >= 0, got {tie_eps!r}")
    if max_paths < 1:
        raise DomainError(f"max_paths must be >= 1, got {max_paths}")
    indptr, nbr, wts, _ = g._csr()
    table = kernels.bottleneck_table(indptr, nbr, wts, g.n, t, max_steps)
    opt = table[max_steps][s]
    if opt == kernels.NEG_INF:
        return PathEnumeration(paths=(), truncated=False)
    raw, truncated = kernels.enumerate_tied_paths(
        indptr, nbr, wts, table, s, t, max_steps, opt - tie_eps, max_paths
    )
    evals = [_evaluate(g, tuple(g.nodes[i] for i in p)) for p in raw]
    evals.sort(key=lambda p: (len(p.nodes), p.nodes))
    return PathEnumeration(paths=tuple(evals), truncated=truncated)


def connected_intensity(
    g: FuzzyDigraph,
    source: str,
    target: str,
    max_steps: int = DEFAULT_STEP_CAP,
) -> TFN:
    """Strength of the best connection: crisp 1 to itself, 0 if unreachable."""
    if g.index(source) == g.index(target):
        return _ONE
    found = best_path(g, source, target, max_steps)
    return _ZERO if found is None else found.intensity


@dataclass(frozen=True)
class IntensityMatrix:
    """Connected intensities for every ordered pair."""

    nodes: tuple[str, ...]
    grid: tuple[tuple[TFN, ...], ...]
    max_steps: int = DEFAULT_STEP_CAP
    _index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {v: i for i, v in enumerate(self.nodes)}
        )

    def value(self, source: str, target: str) -> TFN:
        try:
            return self.grid[self._index[source]][self._index[target]]
        except KeyError as missing:
            raise UnknownNodeError(f"unknown node {missing.args[0]!r}") from None


def _intensity_grid(g: FuzzyDigraph, max_steps: int) -> list[list[TFN | None]]:
    """Best-path intensities for all ordered pairs; None when unreachable.

    The diagonal is None here; callers decide its meaning. One bottleneck
    table per target serves every source, so the whole grid costs n table
    builds plus one deterministic reconstruction per reachable pair.
    """
    indptr, nbr, wts, _ = g._csr()
    n = g.n
    grid: list[list[TFN | None]] = [[None] * n for _ in range(n)]
    for t in range(n):
        table = kernels.bottleneck_table(indptr, nbr, wts, n, t, max_steps)
        for s in range(n):
            if s == t:
                continue
            idx_path = kernels.shortest_lex_path(
                indptr, nbr, wts, table, s, t, max_steps
            )
            if idx_path is None:
                continue
            grid[s][t] = _evaluate(
                g, tuple(g.nodes[i] for i in idx_path)
            ).intensity
    return grid


def intensity_matrix(
    g: FuzzyDigraph, max_steps: int = DEFAULT_STEP_CAP
) -> IntensityMatrix:
    """Connected intensities for all ordered pairs.

    Diagonal entries are crisp 1, unreachable pairs crisp 0, per the
    connected-intensity convention.
    """
    if max_steps < 1:
        raise DomainError(f"max_steps must be >= 1, got {max_steps}")
    raw = _intensity_grid(g, max_steps)
    rows = tuple(
        tuple(
            _ONE if s == t else (raw[s][t] if raw[s][t] is not None else _ZERO)
            for t in range(g.n)
        )
        for s in range(g.n)
    )
    return IntensityMatrix(nodes=g.nodes, grid=rows, max_steps=max_steps)


def random_network(
    n: int,
    density: float,
    vagueness: float,
    seed: int,
    scale_max: float = 1.0,
    label_prefix: str = "v",
) -> FuzzyDigraph:
    """Seeded random network for experiments and fixtures.

    Each ordered pair gets an edge with probability `density`. Edge modes
    are uniform on [0, scale_max]; each spread is uniform on
    [0, vagueness * scale_max], clamped to the scale, so vagueness 0 yields
    a crisp network. Same arguments, same network, on any platform.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (0.0 <= density <= 1.0):
        raise DomainError(f"density must lie in [0, 1], got {density!r}")
    if not (0.0 <= vagueness <= 1.0):
        raise DomainError(f"vagueness must lie in [0, 1], got {vagueness!r}")
    rng = random.Random(seed)
    width = len(str(n))
    labels = [f"{label_prefix}{i + 1:0{width}d}" for i in range(n)]
    edges: dict[tuple[str, str], TFN] = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rng.random() >= density:
                continue
            mode = rng.uniform(0.0, scale_max)
            left = max(0.0, mode - rng.uniform(0.0, vagueness * scale_max))
            right = min(scale_max, mode + rng.uniform(0.0, vagueness * scale_max))
            edges[(labels[i], labels[j])] = TFN(left, mode, right)
    return FuzzyDigraph(labels, edges, scale_max=scale_max)
