from __future__ import annotations

import dataclasses
import logging
import os
from dataclasses import dataclass
from typing import Any, Mapping, Optional

logger = logging.getLogger(__name__)

SEED_VARIABLE = 'WDC_SEED'
# the monomial tail needs a few dyadic decades past the transient
MIN_NMAX = 128


def _seed_from_environment() -> Optional[int]:
    value = os.environ.get(SEED_VARIABLE)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        logger.warning('ignoring non-integer %s=%r', SEED_VARIABLE, value)
        return None


@dataclass(frozen=True)
class NumericsConfig:
    # shells J of radii 1 - 2^-j with angles K each; nmax is the largest monomial degree
    # the a-grid has a_shells radii capped at a_max and a_angles arguments

    shells: int = 16
    angles: int = 1024
    nmax: int = 256
    a_shells: int = 9
    a_angles: int = 8
    a_max: float = 0.999
    n_radii: int = 256
    sub_shells: int = 4
    refine_levels: int = 8
    growth_threshold: float = 0.05
    flat_threshold: float = 1e-3
    window: int = 4
    zero_tolerance: float = 1e-3
    self_map_tolerance: float = 1e-9
    seed: Optional[int] = dataclasses.field(default_factory=_seed_from_environment)

    def __post_init__(self):
        if self.shells < self.window + 1:
            raise ValueError(f'shells must be at least window + 1, got {self.shells}')
        if self.angles < 64 or self.angles & (self.angles - 1):
            raise ValueError(f'angles must be a power of two >= 64, got {self.angles}')
        if self.nmax < MIN_NMAX:
            raise ValueError(f'nmax must be at least {MIN_NMAX}, got {self.nmax}')
        if not 0.0 < self.a_max < 1.0:
            raise ValueError(f'a_max must lie in (0, 1), got {self.a_max}')
        if self.a_shells < 3 or self.a_angles < 1:
            raise ValueError('a-grid needs at least 3 shells and 1 angle')

    def with_overrides(self, **overrides: Any) -> NumericsConfig:
        unknown = set(overrides) - {f.name for f in dataclasses.fields(self)}
        if unknown:
            raise ValueError(f'unknown config keys: {sorted(unknown)}')
        return dataclasses.replace(self, **overrides)

    @staticmethod
    def from_dict(values: Mapping[str, Any]) -> NumericsConfig:
        return NumericsConfig().with_overrides(**values)

    def to_dict(self) -> dict[str, Any]:
        result = dataclasses.asdict(self)
        result.pop('seed')
        return result
