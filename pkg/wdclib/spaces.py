# %%
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Mapping, Optional, Sequence

import numpy as np

from .analytic import ProbeFunction, _as_points, monomial
from .errors import WrongSpace
from .grid import DiskGrid, shell_level
from .quadrature import QuadratureConfig
from .weight import Weight

logger = logging.getLogger(__name__)

HARDY_LADDER = 20


# %%
class SpaceKind(Enum):
    HINF = 'HINF'
    GROWTH = 'GROWTH'
    BERGMAN = 'BERGMAN'
    HARDY = 'HARDY'


class SpaceSpec:
    def __init__(
        self, kind: SpaceKind, p: Optional[float] = None, alpha: Optional[float] = None
    ):
        kind = SpaceKind(kind)
        if kind in (SpaceKind.BERGMAN, SpaceKind.HARDY):
            if p is None or not p > 0:
                raise ValueError(f'{kind.value} needs p > 0, got p={p}')
            p = float(p)
        else:
            p = None
        if kind is SpaceKind.GROWTH:
            if alpha is None or not alpha > 0:
                raise ValueError(f'GROWTH needs alpha > 0, got alpha={alpha}')
        elif kind is SpaceKind.BERGMAN:
            if alpha is None or not alpha > -1:
                raise ValueError(f'BERGMAN needs alpha > -1, got alpha={alpha}')
        else:
            alpha = None
        self._kind = kind
        self._p = p
        self._alpha = None if alpha is None else float(alpha)

    @staticmethod
    def hinf() -> SpaceSpec:
        return SpaceSpec(SpaceKind.HINF)

    @staticmethod
    def growth(alpha: float) -> SpaceSpec:
        return SpaceSpec(SpaceKind.GROWTH, alpha=alpha)

    @staticmethod
    def bergman(p: float, alpha: float) -> SpaceSpec:
        return SpaceSpec(SpaceKind.BERGMAN, p=p, alpha=alpha)

    @staticmethod
    def hardy(p: float) -> SpaceSpec:
        return SpaceSpec(SpaceKind.HARDY, p=p)

    @property
    def kind(self) -> SpaceKind:
        return self._kind

    @property
    def p(self) -> Optional[float]:
        return self._p

    @property
    def alpha(self) -> Optional[float]:
        return self._alpha

    @property
    def gamma(self) -> float:
        return gamma(self)

    @property
    def is_sup_type(self) -> bool:
        return self._kind in (SpaceKind.HINF, SpaceKind.GROWTH)

    @property
    def label(self) -> str:
        if self._kind is SpaceKind.HINF:
            return 'H^inf'
        if self._kind is SpaceKind.GROWTH:
            return f'A^-{self._alpha:g}'
        if self._kind is SpaceKind.BERGMAN:
            return f'A^{self._p:g}_{self._alpha:g}'
        return f'H^{self._p:g}'

    def weight(self) -> Weight:
        if self._kind is SpaceKind.HINF:
            return Weight.unit()
        if self._kind is SpaceKind.GROWTH:
            return Weight.power(self._alpha)
        raise WrongSpace('weight', self._kind.value)

    def __eq__(self, other):
        return (
            isinstance(other, SpaceSpec)
            and other._kind is self._kind
            and other._p == self._p
            and other._alpha == self._alpha
        )

    def __hash__(self):
        return hash((self._kind, self._p, self._alpha))

    def __repr__(self):
        return f'SpaceSpec({self.label})'

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = dict(kind=self._kind.value)
        if self._p is not None:
            result['p'] = self._p
        if self._alpha is not None:
            result['alpha'] = self._alpha
        return result

    @staticmethod
    def from_dict(data: Mapping[str, Any]) -> SpaceSpec:
        kind = SpaceKind(str(data.get('kind', '')).upper())
        return SpaceSpec(kind, p=data.get('p'), alpha=data.get('alpha'))


def gamma(space: SpaceSpec) -> float:
    kind = space.kind
    if kind is SpaceKind.HINF:
        return 0.0
    if kind is SpaceKind.GROWTH:
        return space.alpha
    if kind is SpaceKind.BERGMAN:
        return (space.alpha + 2.0) / space.p
    return 1.0 / space.p


# %%
def _evaluate(f, z) -> np.ndarray:
    with np.errstate(all='ignore'):
        return np.asarray(f(z), dtype=complex)


def circle_mean(f, r: float, p: float, quad: QuadratureConfig) -> float:
    values = np.abs(_evaluate(f, quad.circle(r))) ** p
    return float(np.mean(values))


def hardy_ladder(f, quad: QuadratureConfig) -> np.ndarray:
    radii = 1.0 - 2.0 ** -np.arange(1, HARDY_LADDER + 1, dtype=float)
    if getattr(f, 'extends_to_boundary', False):
        return np.append(radii, 1.0)
    return np.append(radii[radii < quad.r_max], quad.r_max)


def hardy_norm(f, p: float, quad: Optional[QuadratureConfig] = None) -> float:
    if not p > 0:
        raise ValueError(f'p must be positive, got {p}')
    quad = quad or QuadratureConfig()
    means = np.array([circle_mean(f, r, p, quad) for r in hardy_ladder(f, quad)])
    if not np.all(np.isfinite(means)):
        raise ValueError('non-finite evaluation in hardy_norm')
    return float(np.max(means) ** (1.0 / p))


def bergman_norm(
    f, p: float, alpha: float, quad: Optional[QuadratureConfig] = None
) -> float:
    if not p > 0:
        raise ValueError(f'p must be positive, got {p}')
    if not alpha > -1:
        raise ValueError(f'alpha must exceed -1, got {alpha}')
    quad = quad or QuadratureConfig()
    radii, weights = quad.radial_nodes(alpha)
    circle = quad.circle(1.0)
    values = np.abs(_evaluate(f, radii[:, None] * circle[None, :])) ** p
    if not np.all(np.isfinite(values)):
        raise ValueError('non-finite evaluation in bergman_norm')
    # all Gauss-Jacobi nodes are interior, so there is no tail beyond the last one
    integral = float(np.dot(weights, values.mean(axis=1)))
    return integral ** (1.0 / p)


# %%
@dataclass(frozen=True)
class SupResult:
    value: float
    location: complex
    finite: bool

    def __float__(self):
        return self.value


def _polar(u: np.ndarray, theta: np.ndarray) -> np.ndarray:
    return (1.0 - 2.0 ** (-u)) * np.exp(1j * theta)


def _weighted(f, weight: Weight, z: np.ndarray) -> np.ndarray:
    values = weight(z) * np.abs(_evaluate(f, z))
    # 0 * inf at a boundary zero of the weight counts as a divergence
    return np.where(np.isnan(values), np.inf, values)


def weighted_sup_norm(
    f,
    weight: Weight,
    grid: Optional[DiskGrid] = None,
    *,
    refine_levels: int = 8,
    boundary: Optional[bool] = None,
) -> SupResult:
    """sup nu(z)|f(z)| over a shell grid, refined around the maximiser.

    The boundary circle is sampled too when ``boundary`` is true (default:
    when f and the weight extend continuously to the closed disk). Each of
    the ``refine_levels`` passes samples a 5 x 5 patch in (log-shell level,
    angle) around the running maximiser with half the previous spacing.
    """
    grid = grid or DiskGrid(sub_shells=4)
    if boundary is None:
        boundary = getattr(f, 'extends_to_boundary', False) and weight.extends_to_boundary

    z, _ = grid.points()
    if boundary:
        z = np.concatenate([z, grid.boundary_points()])
    values = _weighted(f, weight, z)
    if not np.all(np.isfinite(values)):
        where = int(np.flatnonzero(~np.isfinite(values))[0])
        logger.debug('weighted_sup_norm: non-finite value at %s', z[where])
        return SupResult(np.inf, complex(z[where]), False)

    best = int(np.argmax(values))
    value, location = float(values[best]), complex(z[best])

    on_boundary = abs(location) == 1.0
    du = grid.radial_step
    dtheta = 2.0 * np.pi / (grid.angles if on_boundary else _count_near(grid, location))
    steps = np.arange(-2, 3, dtype=float)
    for _ in range(refine_levels):
        du *= 0.5
        dtheta *= 0.5
        theta = np.angle(location) + dtheta * steps
        if on_boundary:
            patch = np.exp(1j * theta)
        else:
            u = shell_level(abs(location)) + du * steps
            u = u[u > 0.0]
            if u.size == 0:
                continue
            patch = _polar(u[:, None], theta[None, :]).ravel()
        patch_values = _weighted(f, weight, patch)
        if not np.all(np.isfinite(patch_values)):
            return SupResult(np.inf, complex(patch[~np.isfinite(patch_values)][0]), False)
        i = int(np.argmax(patch_values))
        if patch_values[i] > value:
            value, location = float(patch_values[i]), complex(patch[i])
    return SupResult(value, location, True)


def _count_near(grid: DiskGrid, z: complex) -> int:
    if z == 0:
        return grid.counts[min(1, len(grid) - 1)]
    i = int(np.argmin(np.abs(grid.radii - abs(z))))
    return max(grid.counts[i], 1)


def norm(
    f,
    space: SpaceSpec,
    quad: Optional[QuadratureConfig] = None,
    grid: Optional[DiskGrid] = None,
    *,
    refine_levels: int = 8,
) -> float:
    if space.kind is SpaceKind.HARDY:
        return hardy_norm(f, space.p, quad)
    if space.kind is SpaceKind.BERGMAN:
        return bergman_norm(f, space.p, space.alpha, quad)
    return weighted_sup_norm(
        f, space.weight(), grid, refine_levels=refine_levels
    ).value


# %%
@dataclass(frozen=True)
class ExponentFit:
    slope: float
    intercept: float
    residual: float
    n: tuple[int, ...] = field(default=())
    norms: tuple[float, ...] = field(default=())


def monomial_norm_exponent(
    space: SpaceSpec,
    n_list: Sequence[int] = tuple(2**j for j in range(2, 9)),
    quad: Optional[QuadratureConfig] = None,
    grid: Optional[DiskGrid] = None,
) -> ExponentFit:
    n = np.asarray(n_list, dtype=int)
    norms = np.array([norm(monomial(int(m)), space, quad, grid) for m in n])
    x, y = np.log(n), np.log(norms)
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.max(np.abs(y - (slope * x + intercept))))
    logger.debug('monomial_norm_exponent: %s slope=%.4f', space.label, slope)
    return ExponentFit(
        float(slope), float(intercept), residual, tuple(int(m) for m in n),
        tuple(float(v) for v in norms),
    )


@dataclass(frozen=True)
class GrowthBound:
    value: float
    trace: tuple[float, ...]
    stable: bool


def growth_bound_constant(
    space: SpaceSpec,
    k: int,
    probes: Iterable,
    grid: Optional[DiskGrid] = None,
    quad: Optional[QuadratureConfig] = None,
    *,
    refine_levels: int = 8,
    tolerance: float = 0.05,
) -> GrowthBound:
    # best C in |f^(k)(z)| (1-|z|^2)^(k+gamma) <= C ||f||_X; stable once refinement agrees
    grid = grid or DiskGrid(12, 256, sub_shells=2)
    weight = Weight.power(k + gamma(space))
    probes = list(probes)

    norms = []
    for f in probes:
        value = norm(f, space, quad, grid)
        norms.append(value)

    trace = []
    for level_grid in (grid, grid.refined()):
        best = 0.0
        for f, size in zip(probes, norms):
            if size < 1e-12:
                continue
            result = weighted_sup_norm(
                f.derivative(k), weight, level_grid, refine_levels=refine_levels
            )
            if not result.finite:
                return GrowthBound(np.inf, tuple(trace) + (np.inf,), False)
            best = max(best, result.value / size)
        trace.append(best)

    coarse, fine = trace
    stable = abs(fine - coarse) <= tolerance * max(fine, 1e-300)
    if not stable:
        logger.warning(
            'growth_bound_constant: %s k=%d unstable under refinement (%g -> %g)',
            space.label, k, coarse, fine,
        )
    return GrowthBound(fine, tuple(trace), stable)


def unit_bound_sweep(
    space: SpaceSpec,
    a_points: Sequence[complex],
    k_max: int = 3,
    quad: Optional[QuadratureConfig] = None,
    grid: Optional[DiskGrid] = None,
) -> np.ndarray:
    # rows are k, columns are a
    g = gamma(space)
    result = np.empty((k_max + 1, len(a_points)))
    for k in range(k_max + 1):
        for i, a in enumerate(_as_points(a_points)):
            result[k, i] = norm(ProbeFunction(complex(a), g, k), space, quad, grid)
    logger.debug('unit_bound_sweep: %s max=%.8f', space.label, result.max())
    return result
