"""Triangular fuzzy numbers and their ranking.

A triangular fuzzy number (TFN) is the triple (left, mode, right) with
left <= mode <= right, read as a piecewise-linear membership function that
rises from 0 at `left` to 1 at `mode` and falls back to 0 at `right`.
Degenerate triples (left == mode == right) are first-class citizens and
behave as crisp scalars, so crisp networks are the zero-spread special case
of fuzzy ones throughout the package.

Ranking reduces a TFN to a real number. The shipped method is the centre
of gravity of the membership function; anything with the same signature can
be plugged in where a `ranking` argument is accepted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError

__all__ = [
    "TFN",
    "TriangularFuzzyNumber",
    "cog",
    "rank_descending",
    "RankingMethod",
]

# A ranking method maps a TFN to the real number used for comparisons.
RankingMethod = Callable[["TriangularFuzzyNumber"], float]


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """Triple (left, mode, right) with left <= mode <= right, all finite."""

    left: float
    mode: float
    right: float

    def __post_init__(self):
        left = _check_finite("left", self.left)
        mode = _check_finite("mode", self.mode)
        right = _check_finite("right", self.right)
        if not (left <= mode <= right):
            raise DomainError(
                f"TFN endpoints must satisfy left <= mode <= right, "
                f"got ({left!r}, {mode!r}, {right!r})"
            )
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "right", right)

    # -- shape ---------------------------------------------------------

    @property
    def is_degenerate(self) -> bool:
        """True when the support is a single point (a crisp scalar)."""
        return self.left == self.right

    @property
    def left_spread(self) -> float:
        return self.mode - self.left

    @property
    def right_spread(self) -> float:
        return self.right - self.mode

    @property
    def total_spread(self) -> float:
        return self.right - self.left

    # -- membership and defuzzification ---------------------------------

    def membership(self, x: float) -> float:
        """Degree to which the point x belongs to the fuzzy number.

        Piecewise linear: 0 outside [left, right], 1 at the mode, linear in
        between. For the degenerate case the membership is the indicator of
        the mode.
        """
        x = _check_finite("x", x)
        if x < self.left or x > self.right:
            return 0.0
        if x == self.mode:
            return 1.0
        if x < self.mode:
            return (x - self.left) / (self.mode - self.left)
        return (self.right - x) / (self.right - self.mode)

    def cog(self) -> float:
        """Centre of gravity of the membership function.

        Closed form (left + mode + right) / 3 for a genuine triangle; the
        degenerate case returns the mode directly so crisp values survive
        defuzzification bit-for-bit.
        """
        if self.is_degenerate:
            return self.mode
        return (self.left + self.mode + self.right) / 3.0

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "TriangularFuzzyNumber") -> "TriangularFuzzyNumber":
        if not isinstance(other, TriangularFuzzyNumber):
            return NotImplemented
        return TriangularFuzzyNumber(
            self.left + other.left,
            self.mode + other.mode,
            self.right + other.right,
        )

    def scale(self, c: float) -> "TriangularFuzzyNumber":
        """Multiply by a nonnegative crisp scalar."""
        c = _check_finite("c", c)
        if c < 0:
            raise DomainError(f"scale factor must be nonnegative, got {c!r}")
        return TriangularFuzzyNumber(c * self.left, c * self.mode, c * self.right)

    def __mul__(self, c: float):
        if isinstance(c, (int, float)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def normalize(self, scale_max: float) -> "TriangularFuzzyNumber":
        """Map a TFN on [0, scale_max] onto the unit interval."""
        scale_max = _check_finite("scale_max", scale_max)
        if scale_max <= 0:
            raise DomainError(f"scale_max must be positive, got {scale_max!r}")
        if self.left < 0 or self.right > scale_max:
            raise DomainError(
                f"support [{self.left!r}, {self.right!r}] not within [0, {scale_max!r}]"
            )
        return TriangularFuzzyNumber(
            self.left / scale_max, self.mode / scale_max, self.right / scale_max
        )

    def __str__(self):
        return f"({self.left!r}; {self.mode!r}; {self.right!r})"


TFN = TriangularFuzzyNumber


def cog(a: TriangularFuzzyNumber) -> float:
    """Functional spelling of TFN.cog, usable as a ranking method."""
    return a.cog()


def rank_descending(
    values: Sequence[TriangularFuzzyNumber],
    ranking: RankingMethod = cog,
) -> list[int]:
    """Indices of `values` ordered from highest to lowest rank value.

    The sort is stable: values with equal rank keep their input order, so
    the result is a deterministic permutation of range(len(values)).
    """
    keys = [ranking(v) for v in values]
    return sorted(range(len(values)), key=keys.__getitem__, reverse=True)
