"""Aggregation operators: t-norms, t-conorms, and the OWA family.

The ordered weighted averaging (OWA) operator sorts its arguments in
descending order before taking the weighted sum, so the weights address
positions ("the largest", "the second largest", ...) rather than arguments.
The fuzzy variant (FOWA) does the same for triangular fuzzy numbers, sorting
by a ranking method (centre of gravity by default) and combining with TFN
addition and nonnegative scaling. Descending order is used everywhere, so
the weight vector (1, 0, ..., 0) always selects the maximum and
(0, ..., 0, 1) the minimum, for crisp and fuzzy inputs alike.

Weight vectors carry an attitude: orness measures how far the operator leans
toward the maximum, andness toward the minimum, and mediality toward the
plain mean. The distance between two weight vectors is measured between
their attitude levels, d(w, w') = |sum_i k_i (w_i - w'_i)| with
k_i = (n - i) / (n - 1), which makes d(w, w_min) + d(w, w_max) = 1 for every
w and ties orness(w) = 1 - d(w, w_max) together exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .tfn import TFN, RankingMethod, cog, rank_descending

__all__ = [
    "TNorm",
    "TConorm",
    "ASSOCIATED_PAIRS",
    "tnorm",
    "tconorm",
    "WeightVector",
    "owa",
    "fowa",
    "orness",
    "andness",
    "weight_distance",
    "mediality",
    "ProximityProfile",
    "proximity_profile",
]

_SUM_TOL = 1e-9


class TNorm(enum.Enum):
    STANDARD_MIN = "standard_min"
    ALGEBRAIC_PRODUCT = "algebraic_product"
    BOUNDED_DIFFERENCE = "bounded_difference"
    DRASTIC = "drastic"


class TConorm(enum.Enum):
    STANDARD_MAX = "standard_max"
    ALGEBRAIC_SUM = "algebraic_sum"
    BOUNDED_SUM = "bounded_sum"
    DRASTIC = "drastic"


#: t-norm / t-conorm pairs satisfying a (x) b + a (+) b = a + b identically.
#: The drastic pair is NOT associated: for interior a, b it gives 0 + 1.
ASSOCIATED_PAIRS: tuple[tuple[TNorm, TConorm], ...] = (
    (TNorm.STANDARD_MIN, TConorm.STANDARD_MAX),
    (TNorm.ALGEBRAIC_PRODUCT, TConorm.ALGEBRAIC_SUM),
    (TNorm.BOUNDED_DIFFERENCE, TConorm.BOUNDED_SUM),
)


def _check_unit(name: str, value: float) -> float:
    value = float(value)
    if not (0.0 <= value <= 1.0):
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def tnorm(kind: TNorm, a: float, b: float) -> float:
    """Evaluate a t-norm on membership degrees a, b in [0, 1]."""
    a = _check_unit("a", a)
    b = _check_unit("b", b)
    if kind is TNorm.STANDARD_MIN:
        return a if a < b else b
    if kind is TNorm.ALGEBRAIC_PRODUCT:
        return a * b
    if kind is TNorm.BOUNDED_DIFFERENCE:
        if a == 1.0:  # adding 1 and subtracting it again costs an ulp,
            return b  # so the neutral element is handled up front
        if b == 1.0:
            return a
        return max(0.0, a + b - 1.0)
    if kind is TNorm.DRASTIC:
        # 0 whenever both arguments are below 1.
        if a < 1.0 and b < 1.0:
            return 0.0
        return a if a < b else b
    raise DomainError(f"unknown t-norm {kind!r}")


def tconorm(kind: TConorm, a: float, b: float) -> float:
    """Evaluate a t-conorm on membership degrees a, b in [0, 1]."""
    a = _check_unit("a", a)
    b = _check_unit("b", b)
    if kind is TConorm.STANDARD_MAX:
        return a if a > b else b
    if kind is TConorm.ALGEBRAIC_SUM:
        return a + b - a * b
    if kind is TConorm.BOUNDED_SUM:
        return min(1.0, a + b)
    if kind is TConorm.DRASTIC:
        # 1 whenever both arguments are above 0.
        if a > 0.0 and b > 0.0:
            return 1.0
        return a if a > b else b
    raise DomainError(f"unknown t-conorm {kind!r}")


@dataclass(frozen=True)
class WeightVector:
    """OWA weights: nonnegative entries in [0, 1] summing to 1.

    The sum is checked within 1e-9 to absorb float normalisation noise.
    """

    weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.weights) == 0:
            raise DomainError("weight vector must have at least one entry")
        ws = tuple(_check_unit("weight", w) for w in self.weights)
        total = math.fsum(ws)
        if abs(total - 1.0) > _SUM_TOL:
            raise DomainError(f"weights must sum to 1, got {total!r}")
        object.__setattr__(self, "weights", ws)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @classmethod
    def preset(cls, name: str, n: int) -> "WeightVector":
        """Named weight families: 'max', 'min', and 'mean' of length n."""
        if n < 1:
            raise DomainError(f"preset length must be >= 1, got {n}")
        if name == "max":
            return cls((1.0,) + (0.0,) * (n - 1))
        if name == "min":
            return cls((0.0,) * (n - 1) + (1.0,))
        if name == "mean":
            return cls((1.0 / n,) * n)
        raise DomainError(f"unknown weight preset {name!r}")


def _as_weights(w: WeightVector | Sequence[float]) -> WeightVector:
    return w if isinstance(w, WeightVector) else WeightVector(tuple(w))


def owa(w: WeightVector | Sequence[float], values: Sequence[float]) -> float:
    """Ordered weighted average of crisp values in [0, 1].

    Sorts the values in descending order and takes the dot product with the
    weights, so owa((1,0,...), v) is max(v) and owa((0,...,1), v) is min(v).

    The weight vector is treated as normalized, so n equal values aggregate
    to exactly that value; the dot product would be off by an ulp whenever
    the stored weights do not sum to exactly 1.
    """
    w = _as_weights(w)
    if len(values) != len(w):
        raise DomainError(
            f"expected {len(w)} values to match the weight vector, got {len(values)}"
        )
    vs = sorted((_check_unit("value", v) for v in values), reverse=True)
    if vs[0] == vs[-1]:
        return vs[0]
    return math.fsum(wi * vi for wi, vi in zip(w, vs))


def fowa(
    w: WeightVector | Sequence[float],
    values: Sequence[TFN],
    ranking: RankingMethod = cog,
) -> TFN:
    """Fuzzy OWA: rank TFNs in descending order, then weight and add.

    Ranking is by the supplied method (centre of gravity by default) and is
    stable, so ties keep their input order. Equal weights reduce to the
    componentwise arithmetic mean.
    """
    w = _as_weights(w)
    if len(values) != len(w):
        raise DomainError(
            f"expected {len(w)} TFNs to match the weight vector, got {len(values)}"
        )
    order = rank_descending(values, ranking)
    acc = TFN(0.0, 0.0, 0.0)
    for wi, idx in zip(w, order):
        acc = acc + values[idx].scale(wi)
    return acc


def _attitude_level(w: WeightVector) -> Fraction:
    # exact rational arithmetic over the represented (normalized) vector:
    # stored weights sum to 1 only within float noise, so dividing by their
    # exact sum is what makes the fixed points 0, 1/2, and 1 come out exact
    n = len(w)
    total = Fraction(0)
    mass = Fraction(0)
    for i, wi in enumerate(w.weights, start=1):
        f = Fraction(wi)
        total += (n - i) * f
        mass += f
    return total / ((n - 1) * mass)


def orness(w: WeightVector | Sequence[float]) -> float:
    """Degree in [0, 1] to which the weights act like a maximum.

    orness = sum_{i<n} (n - i) w_i / (n - 1); 1 for the max weights, 0 for
    the min weights, 1/2 for the mean. Undefined for n = 1.
    """
    w = _as_weights(w)
    if len(w) < 2:
        raise DomainError("orness requires at least two weights")
    return float(_attitude_level(w))


def andness(w: WeightVector | Sequence[float]) -> float:
    """Complement of orness: how much the weights act like a minimum."""
    return 1.0 - orness(w)


def weight_distance(
    w: WeightVector | Sequence[float], w2: WeightVector | Sequence[float]
) -> float:
    """Distance between the attitude levels of two weight vectors.

    d(w, w') = |sum_i k_i (w_i - w'_i)| with k_i = (n - i)/(n - 1), i.e. the
    absolute difference of orness levels. Satisfies d in [0, 1], d = 1
    exactly for the {min, max} pair, and d(w, w_min) + d(w, w_max) = 1.
    """
    w = _as_weights(w)
    w2 = _as_weights(w2)
    if len(w) != len(w2):
        raise DomainError(f"weight vectors differ in length: {len(w)} vs {len(w2)}")
    if len(w) < 2:
        raise DomainError("weight distance requires at least two weights")
    return float(abs(_attitude_level(w) - _attitude_level(w2)))


def mediality(w: WeightVector | Sequence[float]) -> float:
    """Closeness to the mean weights: 1 - d(w, w_mean), 1 at the mean itself."""
    w = _as_weights(w)
    if len(w) < 2:
        raise DomainError("mediality requires at least two weights")
    return 1.0 - weight_distance(w, WeightVector.preset("mean", len(w)))


@dataclass(frozen=True)
class ProximityProfile:
    """Attitude summary of a weight vector."""

    orness: float
    andness: float
    mediality: float


def proximity_profile(w: WeightVector | Sequence[float]) -> ProximityProfile:
    w = _as_weights(w)
    o = orness(w)
    return ProximityProfile(orness=o, andness=1.0 - o, mediality=mediality(w))
