"""Per-adverb behaviour generation models and the curve visualisation mapping.

An adverb denotes a region of one behaviour dimension. The region is
recovered from positive and negative exemplars: kernel density estimates of
both sets are compared on a regular grid over [0, 1], the grid points that
look more positive than negative form the region, and a Gaussian generator
is fitted to that region's mean and spread. Negatives alone therefore carve
out excluded parts of the dimension before any positive has been seen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .domain import BehaviourPoint
from .errors import OutOfRange

DEFAULT_GRID_SIZE = 101
DEFAULT_BANDWIDTH = 0.1

# Moments of the uniform distribution on [0, 1]; used when no region is found.
FALLBACK_MU = 0.5
FALLBACK_SIGMA = 1.0 / math.sqrt(12.0)

MIN_DOTS = 5
MAX_DOTS = 50
LOW_ENERGY_COLOUR = (139, 0, 0)
HIGH_ENERGY_COLOUR = (255, 255, 0)


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def kde_on_grid(values: list[float], grid: np.ndarray, bandwidth: float) -> np.ndarray:
    """Gaussian KDE of ``values`` evaluated at ``grid``; uniform 1 when empty."""
    if not values:
        return np.ones_like(grid)
    points = np.asarray(values, dtype=float)
    diffs = grid[:, None] - points[None, :]
    kernels = np.exp(-(diffs**2) / (2.0 * bandwidth**2)) / (bandwidth * math.sqrt(2.0 * math.pi))
    return kernels.mean(axis=1)


class AdverbModel:
    """Gaussian generator for one adverb on one behaviour dimension."""

    def __init__(
        self,
        adverb: str,
        dimension: str,
        grid_size: int = DEFAULT_GRID_SIZE,
        bandwidth: float = DEFAULT_BANDWIDTH,
    ):
        self.adverb = adverb
        self.dimension = dimension
        self.grid_size = grid_size
        self.bandwidth = bandwidth
        self.positives: list[float] = []
        self.negatives: list[float] = []
        self.mu = FALLBACK_MU
        self.sigma = FALLBACK_SIGMA

    def _check(self, value: float) -> None:
        if not 0.0 <= value <= 1.0:
            raise OutOfRange(f"dimension value out of [0, 1]: {value!r}")

    def add_positive(self, value: float) -> None:
        self._check(value)
        self.positives.append(float(value))
        self.refit()

    def add_negative(self, value: float) -> None:
        self._check(value)
        self.negatives.append(float(value))
        self.refit()

    def goodness(self, grid: np.ndarray) -> np.ndarray:
        f_pos = kde_on_grid(self.positives, grid, self.bandwidth)
        f_neg = kde_on_grid(self.negatives, grid, self.bandwidth)
        return f_pos / (f_pos + f_neg)

    def refit(self) -> tuple[float, float]:
        """Refit (mu, sigma) from the grid points classified as good."""
        grid = np.linspace(0.0, 1.0, self.grid_size)
        good = grid[self.goodness(grid) > 0.5]
        if len(good) <= 1:
            self.mu, self.sigma = FALLBACK_MU, FALLBACK_SIGMA
        else:
            # Population standard deviation: the region is the whole fit target.
            self.mu = float(good.mean())
            self.sigma = float(good.std())
        return self.mu, self.sigma

    def sample(self, rng: np.random.Generator) -> float:
        value = rng.normal(self.mu, self.sigma)
        return float(min(1.0, max(0.0, value)))


@dataclass(frozen=True)
class CurveSpec:
    """Drawing instructions for one behaviour point.

    Speed sets how many dots trace the curve, energy sets their colour on a
    dark-red-to-yellow ramp, and direction places the curve's control point.
    """

    dot_count: int
    dot_colour: tuple[int, int, int]
    control_point: tuple[float, float]
    dots: tuple[tuple[float, float], ...]

    def to_payload(self) -> dict:
        return {
            "dotCount": self.dot_count,
            "dotColour": list(self.dot_colour),
            "controlPoint": list(self.control_point),
            "dots": [[x, y] for x, y in self.dots],
        }


def render_curve(point: BehaviourPoint) -> CurveSpec:
    """Map a behaviour point to the dots of its quadratic Bezier curve."""
    dot_count = _round_half_up(MIN_DOTS + (MAX_DOTS - MIN_DOTS) * point.speed)
    colour = tuple(
        _round_half_up(lo + (hi - lo) * point.energy)
        for lo, hi in zip(LOW_ENERGY_COLOUR, HIGH_ENERGY_COLOUR)
    )
    control = (0.5, point.direction)
    ts = np.linspace(0.0, 1.0, dot_count)
    # Quadratic Bezier from (0, 0) to (1, 0) through the control point.
    xs = 2.0 * (1.0 - ts) * ts * control[0] + ts**2
    ys = 2.0 * (1.0 - ts) * ts * control[1]
    dots = tuple((float(x), float(y)) for x, y in zip(xs, ys))
    return CurveSpec(dot_count, colour, control, dots)  # type: ignore[arg-type]
