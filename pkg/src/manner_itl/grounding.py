"""Colour grounding: per-colour binary classifiers over raw RGB.

Each colour concept keeps a weighted exemplar set. The class-conditional
likelihood is a weighted kernel density estimate

    p(rgb | colour) = (1 / sum_i w_i) * sum_i w_i * phi(rgb - rgb_i)

with an isotropic Gaussian kernel phi over the 3-D RGB cube. The posterior
combines that likelihood with a fixed prior against a uniform background
density, so colours stay independent binary classifiers (an object may be
both maroon and red) and no negative colour exemplars are ever needed.
"""

from __future__ import annotations

import math

import numpy as np

from .domain import RgbValue
from .errors import InvalidWeight

DEFAULT_PRIOR = 0.2
DEFAULT_BANDWIDTH = 25.0

# Uniform density of the "not this colour" hypothesis over the RGB cube.
BACKGROUND_DENSITY = 256.0 ** -3


class GroundingModel:
    """Weighted-KDE colour classifiers sharing one prior and bandwidth."""

    def __init__(self, prior: float = DEFAULT_PRIOR, bandwidth: float = DEFAULT_BANDWIDTH):
        if not 0.0 < prior < 1.0:
            raise ValueError(f"prior must lie in (0, 1): {prior!r}")
        if bandwidth <= 0.0:
            raise ValueError(f"bandwidth must be positive: {bandwidth!r}")
        self.prior = prior
        self.bandwidth = bandwidth
        self._datasets: dict[str, list[tuple[float, RgbValue]]] = {}

    @property
    def known_colours(self) -> list[str]:
        return list(self._datasets)

    def ensure_colour(self, name: str) -> None:
        """Create an empty dataset for a colour; idempotent."""
        self._datasets.setdefault(name, [])

    def exemplar_count(self, name: str) -> int:
        return len(self._datasets.get(name, ()))

    def add_exemplar(self, colour: str, weight: float, rgb: RgbValue) -> None:
        if not 0.0 < weight <= 1.0:
            raise InvalidWeight(f"exemplar weight must lie in (0, 1]: {weight!r}")
        self.ensure_colour(colour)
        self._datasets[colour].append((weight, rgb))

    def likelihood(self, colour: str, rgb: RgbValue) -> float | None:
        """Weighted-KDE density at ``rgb``; None when the dataset is empty."""
        dataset = self._datasets.get(colour, [])
        if not dataset:
            return None
        weights = np.array([w for w, _ in dataset])
        points = np.array([p.as_tuple() for _, p in dataset], dtype=float)
        query = np.array(rgb.as_tuple(), dtype=float)
        sq_dist = np.sum((points - query) ** 2, axis=1)
        h = self.bandwidth
        kernel = np.exp(-sq_dist / (2.0 * h * h)) / ((2.0 * math.pi) ** 1.5 * h**3)
        return float(np.dot(weights, kernel) / weights.sum())

    def posterior(self, colour: str, rgb: RgbValue) -> float:
        """P(colour | rgb); exactly the prior while the dataset is empty."""
        likelihood = self.likelihood(colour, rgb)
        if likelihood is None:
            return self.prior
        numerator = likelihood * self.prior
        return numerator / (numerator + BACKGROUND_DENSITY * (1.0 - self.prior))
