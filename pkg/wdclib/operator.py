# %%
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .analytic import ProbeFunction, TaylorFunction, _as_points, _restore, monomial, zero
from .config import NumericsConfig
from .errors import SelfMapViolation
from .grid import DiskGrid, a_grid
from .quadrature import QuadratureConfig
from .spaces import SpaceSpec, norm, weighted_sup_norm
from .weight import Weight

logger = logging.getLogger(__name__)

# |tau(z)| from here on counts as touching the boundary
BOUNDARY_EPS = 1e-12
SELF_MAP_TOLERANCE = 1e-9


# %%
@dataclass(frozen=True)
class SelfMapCheck:
    tau_sup: float
    strict: bool
    location: complex


def self_map_check(
    tau,
    grid: Optional[DiskGrid] = None,
    *,
    tolerance: float = SELF_MAP_TOLERANCE,
    refine_levels: int = 8,
) -> SelfMapCheck:
    # strict means sup |tau| < 1, so every boundary limit vanishes
    result = weighted_sup_norm(tau, Weight.unit(), grid, refine_levels=refine_levels)
    if not result.finite or result.value > 1.0 + tolerance:
        raise SelfMapViolation(result.value, tolerance)
    strict = result.value < 1.0 - tolerance
    logger.debug('self_map_check: sup|tau|=%.12g strict=%s', result.value, strict)
    return SelfMapCheck(result.value, strict, result.location)


def _is_zero(u) -> bool:
    return isinstance(u, TaylorFunction) and u.is_zero


# %%
class OperatorSpec:
    # S f = sum_k u_k f^(k) o tau

    def __init__(
        self,
        symbols: Sequence,
        tau,
        *,
        self_map: Optional[SelfMapCheck] = None,
        grid: Optional[DiskGrid] = None,
        tolerance: float = SELF_MAP_TOLERANCE,
    ):
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError('an operator needs at least the symbol u_0')
        self._symbols = symbols
        self._tau = tau
        self._self_map = self_map or self_map_check(tau, grid, tolerance=tolerance)

    @property
    def n(self) -> int:
        return len(self._symbols) - 1

    @property
    def symbols(self) -> tuple:
        return self._symbols

    @property
    def tau(self):
        return self._tau

    @property
    def self_map(self) -> SelfMapCheck:
        return self._self_map

    @property
    def tau_sup(self) -> float:
        return self._self_map.tau_sup

    @property
    def strict(self) -> bool:
        return self._self_map.strict

    @property
    def is_zero(self) -> bool:
        return all(_is_zero(u) for u in self._symbols)

    def symbol(self, k: int):
        return self._symbols[k]

    def single_term(self, k: int) -> OperatorSpec:
        if not 0 <= k <= self.n:
            raise ValueError(f'k must lie in 0..{self.n}, got {k}')
        symbols = [u if j == k else zero() for j, u in enumerate(self._symbols)]
        return OperatorSpec(symbols, self._tau, self_map=self._self_map)

    def image(self, f) -> OperatorImage:
        return OperatorImage(self, f)

    def __call__(self, f, z):
        return apply(self, f, z)

    def __repr__(self):
        return f'OperatorSpec(n={self.n}, tau_sup={self.tau_sup:.6g}, strict={self.strict})'


def weighted_composition(u, tau, **kwargs) -> OperatorSpec:
    return OperatorSpec([u], tau, **kwargs)


class OperatorImage:
    def __init__(self, operator: OperatorSpec, f):
        self._operator = operator
        self._f = f

    @property
    def extends_to_boundary(self) -> bool:
        parts = (self._f, self._operator.tau) + self._operator.symbols
        return all(getattr(g, 'extends_to_boundary', False) for g in parts)

    def __call__(self, z):
        return apply(self._operator, self._f, z)


def apply(S: OperatorSpec, f, z):
    w = _as_points(z)
    t = np.asarray(S.tau(w), dtype=complex)
    touching = np.abs(t) >= 1.0 - BOUNDARY_EPS
    converges = getattr(f, 'extends_to_boundary', False)

    total = np.zeros(np.broadcast(w, t).shape, dtype=complex)
    for k, u in enumerate(S.symbols):
        if _is_zero(u):
            continue
        with np.errstate(all='ignore'):
            term = np.asarray(u(w), dtype=complex) * f.derivative(k)(t)
        total = total + term
    if not converges and np.any(touching):
        total = np.where(touching, np.inf, total)
    return _restore(total, z)


def target_norm(
    S: OperatorSpec,
    f,
    weight: Weight,
    grid: Optional[DiskGrid] = None,
    *,
    refine_levels: int = 8,
) -> float:
    # inf when S f fails to evaluate
    return weighted_sup_norm(S.image(f), weight, grid, refine_levels=refine_levels).value


# %%
def default_probes(
    S: OperatorSpec, space: SpaceSpec, config: Optional[NumericsConfig] = None
) -> list:
    # monomials p_n (n <= 64) and f_a sigma_a^k (k <= n)
    config = config or NumericsConfig()
    probes: list = [monomial(m) for m in range(65)]
    g = space.gamma
    for shell in a_grid(config.a_shells, config.a_angles, config.a_max):
        for a in shell:
            probes.extend(ProbeFunction(complex(a), g, k) for k in range(S.n + 1))
    return probes


def operator_norm_lower_bound(
    S: OperatorSpec,
    space: SpaceSpec,
    weight: Weight,
    probes: Iterable,
    quad: Optional[QuadratureConfig] = None,
    grid: Optional[DiskGrid] = None,
    *,
    refine_levels: int = 8,
) -> float:
    best = 0.0
    for f in probes:
        size = norm(f, space, quad, grid, refine_levels=refine_levels)
        if size < 1e-12:
            continue
        best = max(best, target_norm(S, f, weight, grid, refine_levels=refine_levels) / size)
    return best
