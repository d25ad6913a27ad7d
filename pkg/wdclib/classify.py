# %%
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Sequence

import numpy as np

logger = logging.getLogger(__name__)

# below this every value of a sequence is treated as an exact zero
ZERO_FLOOR = 1e-300
# ratio of consecutive increments that counts as geometric convergence
CONTRACTION = 0.75


# %%
class Classification(Enum):
    FINITE = 'FINITE'
    DIVERGENT = 'DIVERGENT'
    INCONCLUSIVE = 'INCONCLUSIVE'


class Verdict(Enum):
    YES = 'YES'
    NO = 'NO'
    INCONCLUSIVE = 'INCONCLUSIVE'


@dataclass(frozen=True)
class Estimate:
    # trace is the refinement sequence the value was read from

    value: float
    classification: Classification
    trace: tuple[float, ...] = field(default=())

    @property
    def is_divergent(self) -> bool:
        return self.classification is Classification.DIVERGENT

    @property
    def is_finite(self) -> bool:
        return self.classification is Classification.FINITE

    def to_dict(self) -> dict[str, Any]:
        return dict(
            value=self.value,
            classification=self.classification.value,
            trace=list(self.trace),
        )

    @staticmethod
    def zero(trace: Sequence[float] = ()) -> Estimate:
        return Estimate(0.0, Classification.FINITE, tuple(float(v) for v in trace))

    @staticmethod
    def divergent(trace: Sequence[float] = ()) -> Estimate:
        return Estimate(np.inf, Classification.DIVERGENT, tuple(float(v) for v in trace))


def _log_increments(tail: np.ndarray) -> np.ndarray:
    return np.diff(np.log(tail))


def _contracting(d: np.ndarray) -> bool:
    steps = np.abs(d)
    return bool(np.all(steps[1:] <= CONTRACTION * steps[:-1] + ZERO_FLOOR))


def classify_sequence(
    values: Sequence[float],
    *,
    growth_threshold: float = 0.05,
    flat_threshold: float = 1e-3,
    window: int = 4,
) -> Estimate:
    """Classify a refinement sequence of running suprema or partial integrals.

    The last ``window`` log-increments decide. Increments that contract
    geometrically or stay below ``flat_threshold`` settle (FINITE), even
    while still large; increments that all reach ``growth_threshold``
    otherwise are sustained growth (DIVERGENT). Anything else is
    INCONCLUSIVE. The value is the last entry of the sequence.
    """
    x = np.asarray(values, dtype=float)
    trace = tuple(float(v) for v in x)
    if x.size == 0:
        raise ValueError('cannot classify an empty sequence')
    if not np.all(np.isfinite(x)):
        return Estimate.divergent(trace)
    if np.all(np.abs(x) <= ZERO_FLOOR):
        return Estimate.zero(trace)
    if x.size < window + 1:
        return Estimate(float(x[-1]), Classification.INCONCLUSIVE, trace)

    tail = x[-(window + 1) :]
    if np.any(tail <= ZERO_FLOOR):
        return Estimate(float(x[-1]), Classification.INCONCLUSIVE, trace)

    d = _log_increments(tail)
    if np.max(d) <= flat_threshold or _contracting(d):
        classification = Classification.FINITE
    elif np.min(d) >= growth_threshold:
        classification = Classification.DIVERGENT
    else:
        classification = Classification.INCONCLUSIVE
        logger.debug('classify_sequence: inconclusive increments %s', d)
    value = np.inf if classification is Classification.DIVERGENT else float(x[-1])
    return Estimate(value, classification, trace)


def _aitken(x0: float, x1: float, x2: float) -> float:
    denominator = x2 - 2.0 * x1 + x0
    if abs(denominator) <= 1e-14 * max(abs(x0), abs(x1), abs(x2)):
        return x2
    return x2 - (x2 - x1) ** 2 / denominator


def extrapolate_limit(
    values: Sequence[float],
    *,
    growth_threshold: float = 0.05,
    flat_threshold: float = 1e-3,
    window: int = 4,
) -> Estimate:
    """Estimate the limit of a sequence along a refinement ladder.

    Sustained decay over the window gives 0, sustained growth is DIVERGENT,
    unless the increments contract geometrically. Otherwise the limit is the Aitken extrapolate of the last
    three values, kept between 0 and the last value for nonincreasing
    sequences and not below the last value for nondecreasing ones. The
    estimate is FINITE once the increments are flat or contract
    geometrically.
    """
    x = np.asarray(values, dtype=float)
    trace = tuple(float(v) for v in x)
    if x.size == 0:
        raise ValueError('cannot extrapolate an empty sequence')
    if not np.all(np.isfinite(x)):
        return Estimate.divergent(trace)
    if np.all(np.abs(x) <= ZERO_FLOOR) or abs(x[-1]) <= ZERO_FLOOR:
        return Estimate.zero(trace)
    if x.size < 3:
        return Estimate(float(x[-1]), Classification.INCONCLUSIVE, trace)

    tail = x[-min(window + 1, x.size) :]
    if np.all(tail > ZERO_FLOOR):
        d = _log_increments(tail)
        # power-law and geometric trends keep their increments; a
        # contracting window is converging to a nonzero limit
        if tail.size == window + 1 and not _contracting(d):
            if np.max(d) <= -growth_threshold:
                return Estimate.zero(trace)
            if np.min(d) >= growth_threshold:
                return Estimate.divergent(trace)
    else:
        d = np.diff(tail)

    x0, x1, x2 = (float(v) for v in x[-3:])
    if x0 >= x1 >= x2:
        limit = min(max(_aitken(x0, x1, x2), 0.0), x2)
    elif x0 <= x1 <= x2:
        limit = max(_aitken(x0, x1, x2), x2)
    else:
        limit = x2

    if np.max(np.abs(d)) <= flat_threshold or _contracting(d):
        classification = Classification.FINITE
    else:
        classification = Classification.INCONCLUSIVE
        logger.debug('extrapolate_limit: no settled trend in %s', d)
    return Estimate(float(limit), classification, trace)


def combine_verdicts(verdicts: Sequence[Verdict]) -> Verdict:
    if any(v is Verdict.NO for v in verdicts):
        return Verdict.NO
    if all(v is Verdict.YES for v in verdicts):
        return Verdict.YES
    return Verdict.INCONCLUSIVE


def verdict_from(estimate: Estimate) -> Verdict:
    if estimate.classification is Classification.FINITE:
        return Verdict.YES
    if estimate.classification is Classification.DIVERGENT:
        return Verdict.NO
    return Verdict.INCONCLUSIVE
