from __future__ import annotations

import functools
from enum import Enum

import numpy as np
from scipy.special import roots_jacobi


class RadialRule(Enum):
    GAUSS_JACOBI = 'gauss_jacobi'


class QuadratureConfig:
    """Tensor rule for circle means and weighted area integrals.

    Angles use the trapezoid rule with ``n_angles`` points (spectrally
    accurate for smooth periodic integrands). Area integrals against
    (alpha + 1)(1 - |z|^2)^alpha dA substitute t = r^2 and use ``n_radii``
    Gauss-Jacobi nodes for the weight (1 - t)^alpha on [0, 1]. ``r_max``
    bounds the radii used for functions that do not extend to the closed disk.
    """

    def __init__(
        self,
        n_angles: int = 1024,
        n_radii: int = 256,
        r_max: float = 1.0 - 1e-6,
        radial_rule: RadialRule = RadialRule.GAUSS_JACOBI,
    ):
        if n_angles < 64 or n_angles & (n_angles - 1):
            raise ValueError(f'n_angles must be a power of two >= 64, got {n_angles}')
        if n_radii < 1:
            raise ValueError(f'n_radii must be positive, got {n_radii}')
        if not 0.0 < r_max <= 1.0 - 1e-6:
            raise ValueError(f'r_max must lie in (0, 1 - 1e-6], got {r_max}')
        self._n_angles = n_angles
        self._n_radii = n_radii
        self._r_max = r_max
        self._radial_rule = RadialRule(radial_rule)

    @property
    def n_angles(self) -> int:
        return self._n_angles

    @property
    def n_radii(self) -> int:
        return self._n_radii

    @property
    def r_max(self) -> float:
        return self._r_max

    @property
    def radial_rule(self) -> RadialRule:
        return self._radial_rule

    def __repr__(self):
        return (
            f'QuadratureConfig(n_angles={self._n_angles}, n_radii={self._n_radii}, '
            f'r_max={self._r_max})'
        )

    def circle(self, r: float = 1.0) -> np.ndarray:
        return r * np.exp(2j * np.pi * np.arange(self._n_angles) / self._n_angles)

    def radial_nodes(self, alpha: float) -> tuple[np.ndarray, np.ndarray]:
        # radii and probability weights for (alpha + 1)(1 - r^2)^alpha 2r dr
        return _radial_nodes(self._n_radii, float(alpha))

    def refined(self) -> QuadratureConfig:
        return QuadratureConfig(
            self._n_angles * 2, self._n_radii * 2, self._r_max, self._radial_rule
        )


@functools.lru_cache(maxsize=32)
def _radial_nodes(n: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    if alpha <= -1.0:
        raise ValueError(f'alpha must exceed -1, got {alpha}')
    # weight (1 - x)^alpha on [-1, 1], mapped to t = (1 + x) / 2
    x, w = roots_jacobi(n, alpha, 0.0)
    t = 0.5 * (1.0 + x)
    radii = np.sqrt(t)
    weights = w / np.sum(w)
    radii.flags.writeable = False
    weights.flags.writeable = False
    return radii, weights


def gauss_legendre(n: int, lower: float, upper: float) -> tuple[np.ndarray, np.ndarray]:
    x, w = roots_jacobi(n, 0.0, 0.0)
    half = 0.5 * (upper - lower)
    return lower + half * (x + 1.0), half * w
