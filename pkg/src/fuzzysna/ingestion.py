"""From recorded questionnaire trajectories to a fuzzy network.

Respondents answer by dragging a pointer along a semicircular scale and
clicking to commit. The committed value is authoritative and becomes the
mode of the tie's TFN; the hesitation visible in the pointer trajectory
becomes its support, via dwell-time-weighted quantiles of the projected
samples. A respondent who commits immediately produces a degenerate
(crisp) tie, so crisp data is the zero-hesitation special case.

Coordinates are screen-style (y grows downward); angles are measured
counterclockwise from the positive x axis as seen by the viewer. A point's
scale value is the linear position of its angle within the arc from
start_deg to end_deg, clamped to the arc (off-scale samples snap to the
nearer end), times scale_max.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, IngestionWarning
from .graph import FuzzyDigraph
from .tfn import TFN

__all__ = [
    "ScaleGeometry",
    "TrajectorySample",
    "QuestionnaireResponse",
    "ResponsesDocument",
    "FuzzificationConfig",
    "RejectedRecord",
    "IngestResult",
    "project_to_scale",
    "fuzzify_trajectory",
    "build_network",
]


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class ScaleGeometry:
    """Semicircular scale placement in viewport coordinates.

    The arc runs from start_deg (scale value 0) to end_deg (scale value
    scale_max). The default orientation, 180 to 0, is an upper semicircle
    read left to right.
    """

    center_x: float
    center_y: float
    radius: float
    start_deg: float = 180.0
    end_deg: float = 0.0

    def __post_init__(self):
        _finite("center_x", self.center_x)
        _finite("center_y", self.center_y)
        if not (_finite("radius", self.radius) > 0):
            raise DomainError(f"radius must be positive, got {self.radius!r}")
        if _finite("start_deg", self.start_deg) == _finite("end_deg", self.end_deg):
            raise DomainError("start_deg and end_deg must differ")


@dataclass(frozen=True)
class TrajectorySample:
    """One pointer observation: milliseconds and viewport coordinates."""

    t: float
    x: float
    y: float

    def __post_init__(self):
        _finite("t", self.t)
        _finite("x", self.x)
        _finite("y", self.y)


@dataclass(frozen=True)
class QuestionnaireResponse:
    """One rating: who rated whom, the committed value, and the trajectory.

    submitted_at orders duplicate ratings (latest wins); committed_at, when
    known, is the commit-click time on the sample clock, and samples after
    it are ignored. A per-response geometry records the scale placement in
    effect (e.g. after a window resize); when None, the document default
    applies.
    """

    rater: str
    ratee: str
    committed: float
    samples: tuple[TrajectorySample, ...] = ()
    submitted_at: float = 0.0
    committed_at: float | None = None
    geometry: ScaleGeometry | None = None

    def __post_init__(self):
        if not self.rater or not self.ratee:
            raise DomainError("rater and ratee must be nonempty")
        if self.rater == self.ratee:
            raise DomainError(f"self-rating by {self.rater!r} is not allowed")
        _finite("committed", self.committed)
        _finite("submitted_at", self.submitted_at)
        if self.committed_at is not None:
            _finite("committed_at", self.committed_at)
        object.__setattr__(self, "samples", tuple(self.samples))
        last = None
        for i, s in enumerate(self.samples):
            if last is not None and s.t < last:
                raise DomainError(
                    f"sample timestamps must be nondecreasing "
                    f"(sample {i} at t={s.t!r} after t={last!r})"
                )
            last = s.t


@dataclass(frozen=True)
class ResponsesDocument:
    """A full recording session: roster, scale setup, and all responses."""

    scale_max: float
    roster: tuple[str, ...]
    geometry: ScaleGeometry
    responses: tuple[QuestionnaireResponse, ...] = ()
    cadence_hz: float | None = None
    version: int = 1

    def __post_init__(self):
        if not (_finite("scale_max", self.scale_max) > 0):
            raise DomainError(f"scale_max must be positive, got {self.scale_max!r}")
        object.__setattr__(self, "roster", tuple(self.roster))
        object.__setattr__(self, "responses", tuple(self.responses))
        if self.cadence_hz is not None and not (_finite("cadence_hz", self.cadence_hz) > 0):
            raise DomainError(f"cadence_hz must be positive, got {self.cadence_hz!r}")


@dataclass(frozen=True)
class FuzzificationConfig:
    """How a trajectory becomes a TFN.

    q_lo/q_hi: quantiles of the projected samples that become the support.
    dwell_weighting: weight each sample by how long the pointer stayed
        before the next one (uniform weights when off).
    min_spread: minimum total support width, widened symmetrically where
        the scale allows.
    angle_bin_count: reserved for a histogram-based variant; unused.
    """

    q_lo: float = 0.05
    q_hi: float = 0.95
    dwell_weighting: bool = True
    min_spread: float = 0.0
    angle_bin_count: int = 36

    def __post_init__(self):
        if not (0.0 <= self.q_lo <= self.q_hi <= 1.0):
            raise DomainError(
                f"quantiles must satisfy 0 <= q_lo <= q_hi <= 1, "
                f"got ({self.q_lo!r}, {self.q_hi!r})"
            )
        if self.min_spread < 0:
            raise DomainError(f"min_spread must be >= 0, got {self.min_spread!r}")
        if self.angle_bin_count < 1:
            raise DomainError(
                f"angle_bin_count must be >= 1, got {self.angle_bin_count}"
            )


def project_to_scale(
    sample: TrajectorySample, geometry: ScaleGeometry, scale_max: float = 1.0
) -> float:
    """Scale value of one pointer position, in [0, scale_max].

    The angle is taken around the scale center and located linearly within
    the arc; positions off the arc clamp to the nearer end. The exact
    center has no angle and raises DomainError (bulk callers discard such
    samples instead).
    """
    if not (_finite("scale_max", scale_max) > 0):
        raise DomainError(f"scale_max must be positive, got {scale_max!r}")
    dx = sample.x - geometry.center_x
    dy = geometry.center_y - sample.y  # flip to mathematical orientation
    if dx == 0.0 and dy == 0.0:
        raise DomainError("sample at the exact scale center has no angle")
    theta = math.degrees(math.atan2(dy, dx))
    span = geometry.end_deg - geometry.start_deg
    # wrap the offset into the 360-degree window centered on the arc, so
    # off-scale positions clamp to the nearer end
    base = span / 2.0 - 180.0
    delta = (theta - geometry.start_deg - base) % 360.0 + base
    t = delta / span
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return t * scale_max


def _dwell_weights(
    times: Sequence[float], committed_at: float | None
) -> list[float]:
    """Time spent at each sample; the last one gets commit-click dwell when
    known, otherwise the median of the other dwells."""
    if len(times) == 1:
        return [1.0]
    dwells = [t2 - t1 for t1, t2 in zip(times, times[1:])]
    if committed_at is not None and committed_at >= times[-1]:
        last = committed_at - times[-1]
    else:
        positive = sorted(d for d in dwells if d > 0)
        last = positive[len(positive) // 2] if positive else 1.0
    return dwells + [last]


def _weighted_quantile(values: np.ndarray, weights: np.ndarray, q: float) -> float:
    """Smallest value whose cumulative weight reaches q of the total."""
    order = np.argsort(values, kind="stable")
    v = values[order]
    cum = np.cumsum(weights[order])
    total = cum[-1]
    i = int(np.searchsorted(cum, q * total, side="left"))
    if i >= len(v):
        i = len(v) - 1
    return float(v[i])


def fuzzify_trajectory(
    response: QuestionnaireResponse,
    config: FuzzificationConfig = FuzzificationConfig(),
    *,
    scale_max: float = 1.0,
    geometry: ScaleGeometry | None = None,
) -> TFN:
    """Turn one response into a TFN on [0, scale_max].

    The mode is the committed value. The support spans the q_lo..q_hi
    weighted quantiles of the projected trajectory, widened if needed to
    contain the mode (the support always contains it). Samples after the
    commit click and samples at the exact scale center are dropped; when
    nothing usable remains the result is degenerate at the committed value
    and an IngestionWarning is emitted.
    """
    committed = _finite("committed", response.committed)
    if not (0.0 <= committed <= scale_max):
        raise DomainError(
            f"committed value {committed!r} outside [0, {scale_max!r}]"
        )
    geom = response.geometry or geometry
    if geom is None:
        raise DomainError("no scale geometry available for the response")

    samples = response.samples
    if response.committed_at is not None:
        samples = tuple(s for s in samples if s.t <= response.committed_at)

    projected: list[float] = []
    times: list[float] = []
    dropped = 0
    for s in samples:
        if s.x == geom.center_x and s.y == geom.center_y:
            dropped += 1
            continue
        projected.append(project_to_scale(s, geom, scale_max))
        times.append(s.t)
    if dropped:
        warnings.warn(
            f"{response.rater}->{response.ratee}: discarded {dropped} "
            f"sample(s) at the scale center",
            IngestionWarning,
            stacklevel=2,
        )

    if not projected:
        warnings.warn(
            f"{response.rater}->{response.ratee}: no usable samples, "
            f"degenerate value at {committed!r}",
            IngestionWarning,
            stacklevel=2,
        )
        left = right = committed
    else:
        if config.dwell_weighting:
            weights = np.asarray(
                _dwell_weights(times, response.committed_at), dtype=np.float64
            )
            if not weights.sum() > 0:
                weights = np.ones(len(projected))
        else:
            weights = np.ones(len(projected))
        values = np.asarray(projected, dtype=np.float64)
        left = min(_weighted_quantile(values, weights, config.q_lo), committed)
        right = max(_weighted_quantile(values, weights, config.q_hi), committed)

    if right - left < config.min_spread:
        pad = (config.min_spread - (right - left)) / 2.0
        left = max(0.0, left - pad)
        right = min(scale_max, right + pad)
    return TFN(left, committed, right)


@dataclass(frozen=True)
class RejectedRecord:
    """A response build_network refused, with its position in the document."""

    position: int
    rater: str
    ratee: str
    reason: str


@dataclass(frozen=True)
class IngestResult:
    network: FuzzyDigraph
    rejected: tuple[RejectedRecord, ...] = ()


def build_network(
    doc: ResponsesDocument,
    roster: Sequence[str] | None = None,
    config: FuzzificationConfig = FuzzificationConfig(),
) -> IngestResult:
    """Fuzzify every response and assemble the directed network.

    Responses naming people outside the roster are collected as rejected
    records. Duplicate (rater, ratee) pairs keep the highest submitted_at
    (document order breaks remaining ties) and emit an IngestionWarning.
    A response that fuzzifies to exactly (0, 0, 0) declares the absence of
    a relationship and produces no edge.
    """
    members = tuple(roster) if roster is not None else doc.roster
    member_set = set(members)
    rejected: list[RejectedRecord] = []
    chosen: dict[tuple[str, str], tuple[float, int, QuestionnaireResponse]] = {}

    for pos, resp in enumerate(doc.responses):
        unknown = [p for p in (resp.rater, resp.ratee) if p not in member_set]
        if unknown:
            rejected.append(
                RejectedRecord(
                    position=pos,
                    rater=resp.rater,
                    ratee=resp.ratee,
                    reason=f"unknown roster member(s): {', '.join(unknown)}",
                )
            )
            continue
        key = (resp.rater, resp.ratee)
        if key in chosen:
            warnings.warn(
                f"duplicate response {resp.rater}->{resp.ratee}; "
                f"keeping the latest submission",
                IngestionWarning,
                stacklevel=2,
            )
            if (resp.submitted_at, pos) < chosen[key][:2]:
                continue
        chosen[key] = (resp.submitted_at, pos, resp)

    edges: dict[tuple[str, str], TFN] = {}
    for key in sorted(chosen):
        resp = chosen[key][2]
        value = fuzzify_trajectory(
            resp, config, scale_max=doc.scale_max, geometry=doc.geometry
        )
        if value.left == 0.0 and value.mode == 0.0 and value.right == 0.0:
            continue  # declared absence of a relationship
        edges[key] = value

    network = FuzzyDigraph(members, edges, scale_max=doc.scale_max)
    return IngestResult(network=network, rejected=tuple(rejected))
