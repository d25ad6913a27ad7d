# %%
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Mapping, Optional, Sequence

import numpy as np
import pandas as pd
import xarray as xr

from .analytic import ProbeFunction, _as_points, monomial
from .classify import (
    Classification,
    Estimate,
    Verdict,
    classify_sequence,
    combine_verdicts,
    extrapolate_limit,
    verdict_from,
)
from .config import NumericsConfig
from .errors import WrongSpace
from .grid import DiskGrid, a_grid, shell_radius
from .operator import OperatorSpec, apply, target_norm
from .quadrature import gauss_legendre
from .spaces import SpaceSpec
from .weight import Weight

logger = logging.getLogger(__name__)

AREA_NODES = 16
MAJORANT_AREA_NODES = 8


# %%
class MeasureKind(Enum):
    BOUNDARY = 'BOUNDARY'
    AREA = 'AREA'


class MeasureSpec:
    # BOUNDARY is normalised arclength, AREA(beta) is (beta + 1)(1 - |z|^2)^beta dA

    def __init__(self, kind: MeasureKind, q: float, beta: Optional[float] = None):
        kind = MeasureKind(kind)
        if not q > 0:
            raise ValueError(f'q must be positive, got {q}')
        if kind is MeasureKind.AREA:
            if beta is None or not beta > -1:
                raise ValueError(f'AREA needs beta > -1, got beta={beta}')
            beta = float(beta)
        else:
            beta = None
        self._kind = kind
        self._q = float(q)
        self._beta = beta

    @staticmethod
    def boundary(q: float) -> MeasureSpec:
        return MeasureSpec(MeasureKind.BOUNDARY, q)

    @staticmethod
    def area(q: float, beta: float) -> MeasureSpec:
        return MeasureSpec(MeasureKind.AREA, q, beta)

    @property
    def kind(self) -> MeasureKind:
        return self._kind

    @property
    def q(self) -> float:
        return self._q

    @property
    def beta(self) -> Optional[float]:
        return self._beta

    @property
    def label(self) -> str:
        if self._kind is MeasureKind.BOUNDARY:
            return f'L^{self._q:g}(m)'
        return f'L^{self._q:g}(A_{self._beta:g})'

    def __eq__(self, other):
        return (
            isinstance(other, MeasureSpec)
            and other._kind is self._kind
            and other._q == self._q
            and other._beta == self._beta
        )

    def __repr__(self):
        return f'MeasureSpec({self.label})'

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = dict(kind=self._kind.value, q=self._q)
        if self._beta is not None:
            result['beta'] = self._beta
        return result

    @staticmethod
    def from_dict(data: Mapping[str, Any]) -> MeasureSpec:
        kind = MeasureKind(str(data.get('kind', '')).upper())
        return MeasureSpec(kind, data.get('q', 0.0), data.get('beta'))


# %%
def criterion_density(
    S: OperatorSpec, space: SpaceSpec, weight: Optional[Weight], k: int, z
):
    # nu = 1 when weight is None; |tau(z)| = 1 gives inf unless u_k vanishes there
    w = _as_points(z)
    u = S.symbol(k)
    numerator = np.abs(np.asarray(u(w), dtype=complex))
    if weight is not None:
        numerator = numerator * weight(w)
    exponent = k + space.gamma
    if exponent == 0:
        density = numerator * np.ones(np.shape(w))
    else:
        base = 1.0 - np.abs(np.asarray(S.tau(w), dtype=complex)) ** 2
        with np.errstate(divide='ignore', invalid='ignore'):
            density = numerator / np.maximum(base, 0.0) ** exponent
        density = np.where(numerator == 0, 0.0, density)
    return float(density) if np.ndim(density) == 0 and not isinstance(z, np.ndarray) else density


def order_density(S: OperatorSpec, space: SpaceSpec, k: int, z):
    return criterion_density(S, space, None, k, z)


def _density_sum(S, space, weight, z) -> np.ndarray:
    return sum(criterion_density(S, space, weight, k, z) for k in range(S.n + 1))


def criteria_grid(config: NumericsConfig) -> DiskGrid:
    return DiskGrid(config.shells, config.angles)


def sup_grid(config: NumericsConfig) -> DiskGrid:
    return DiskGrid(config.shells, config.angles, sub_shells=config.sub_shells)


def _classify(values, config: NumericsConfig) -> Estimate:
    return classify_sequence(
        values,
        growth_threshold=config.growth_threshold,
        flat_threshold=config.flat_threshold,
        window=config.window,
    )


def _extrapolate(values, config: NumericsConfig) -> Estimate:
    return extrapolate_limit(
        values,
        growth_threshold=config.growth_threshold,
        flat_threshold=config.flat_threshold,
        window=config.window,
    )


def _shell_maxima(grid: DiskGrid, density: Callable) -> np.ndarray:
    z, _ = grid.points()
    values = density(z)
    starts = np.concatenate([[0], np.cumsum(grid.counts)[:-1]])
    values = np.where(np.isnan(values), np.inf, values)
    return np.maximum.reduceat(values, starts)


# %%
def _running_sup(density: Callable, config: NumericsConfig) -> Estimate:
    per_shell = _shell_maxima(criteria_grid(config), density)
    return _classify(np.maximum.accumulate(per_shell), config)


def boundedness_Mk(
    S: OperatorSpec,
    space: SpaceSpec,
    weight: Weight,
    k: int,
    config: Optional[NumericsConfig] = None,
) -> Estimate:
    config = config or NumericsConfig()
    estimate = _running_sup(lambda z: criterion_density(S, space, weight, k, z), config)
    logger.debug('boundedness_Mk: k=%d %s', k, estimate.classification.value)
    return estimate


def boundedness_sum(
    S: OperatorSpec, space: SpaceSpec, weight: Weight, config: Optional[NumericsConfig] = None
) -> Estimate:
    config = config or NumericsConfig()
    return _running_sup(lambda z: _density_sum(S, space, weight, z), config)


def _boundary_limit(
    S: OperatorSpec,
    density: Callable,
    config: NumericsConfig,
    bounded: Optional[Estimate],
) -> Estimate:
    if S.strict:
        return Estimate.zero()
    if bounded is not None and bounded.is_divergent:
        return Estimate.divergent()

    z, _ = criteria_grid(config).points()
    values = density(z)
    values = np.where(np.isnan(values), np.inf, values)
    modulus = np.abs(np.asarray(S.tau(z), dtype=complex))

    sups = []
    for j in range(1, config.shells + 1):
        inside = modulus > shell_radius(j)
        if not np.any(inside):
            break
        sups.append(float(np.max(values[inside])))
    if not sups:
        return Estimate.zero()
    return _extrapolate(sups, config)


def compactness_Gk(
    S: OperatorSpec,
    space: SpaceSpec,
    weight: Weight,
    k: int,
    config: Optional[NumericsConfig] = None,
    bounded: Optional[Estimate] = None,
) -> Estimate:
    # trace: sups over {|tau(z)| > 1 - 2^-j}, stopping at the first empty set
    config = config or NumericsConfig()
    return _boundary_limit(
        S, lambda z: criterion_density(S, space, weight, k, z), config, bounded
    )


def compactness_sum(
    S: OperatorSpec,
    space: SpaceSpec,
    weight: Weight,
    config: Optional[NumericsConfig] = None,
    bounded: Optional[Estimate] = None,
) -> Estimate:
    config = config or NumericsConfig()
    return _boundary_limit(S, lambda z: _density_sum(S, space, weight, z), config, bounded)


# %%
class Mode(Enum):
    SUP = 'SUP'
    LIMIT = 'LIMIT'


def testfn_sweep(
    S: OperatorSpec,
    space: SpaceSpec,
    weight: Weight,
    k: int,
    config: Optional[NumericsConfig] = None,
) -> np.ndarray:
    # shell 0 is a = 0
    config = config or NumericsConfig()
    if not 0 <= k <= S.n:
        raise ValueError(f'k must lie in 0..{S.n}, got {k}')
    grid = sup_grid(config)
    g = space.gamma
    maxima = []
    for shell in a_grid(config.a_shells, config.a_angles, config.a_max):
        values = [
            target_norm(
                S, ProbeFunction(complex(a), g, k), weight, grid,
                refine_levels=config.refine_levels,
            )
            for a in shell
        ]
        maxima.append(max(values))
    logger.debug('testfn_sweep: k=%d maxima=%s', k, maxima)
    return np.array(maxima)


def _testfn_estimate(maxima: np.ndarray, mode: Mode, config: NumericsConfig) -> Estimate:
    if Mode(mode) is Mode.SUP:
        return _classify(np.maximum.accumulate(maxima), config)
    return _extrapolate(maxima, config)


def testfn_condition(
    S: OperatorSpec,
    space: SpaceSpec,
    weight: Weight,
    k: int,
    mode: Mode = Mode.SUP,
    config: Optional[NumericsConfig] = None,
) -> Estimate:
    config = config or NumericsConfig()
    return _testfn_estimate(testfn_sweep(S, space, weight, k, config), mode, config)


def _check_sup_type(space: SpaceSpec, operation: str):
    if not space.is_sup_type:
        raise WrongSpace(operation, space.kind.value)


def monomial_sweep(
    S: OperatorSpec,
    space: SpaceSpec,
    weight: Weight,
    config: Optional[NumericsConfig] = None,
) -> np.ndarray:
    config = config or NumericsConfig()
    _check_sup_type(space, 'monomial_condition')
    grid = sup_grid(config)
    g = space.gamma
    return np.array(
        [
            n**g * target_norm(S, monomial(n), weight, grid, refine_levels=config.refine_levels)
            for n in range(1, config.nmax + 1)
        ]
    )


def dyadic_checkpoints(nmax: int) -> np.ndarray:
    n = 2 ** np.arange(int(np.log2(nmax)) + 1)
    return n if n[-1] == nmax else np.append(n, nmax)


def _monomial_estimate(values: np.ndarray, mode: Mode, config: NumericsConfig) -> Estimate:
    index = dyadic_checkpoints(len(values)) - 1
    if Mode(mode) is Mode.SUP:
        return _classify(np.maximum.accumulate(values)[index], config)
    trend = _extrapolate(values[index], config)
    if trend.classification is Classification.DIVERGENT or trend.value == 0.0:
        return trend
    return Estimate(float(np.mean(values[-10:])), trend.classification, trend.trace)


def monomial_condition(
    S: OperatorSpec,
    space: SpaceSpec,
    weight: Weight,
    mode: Mode = Mode.SUP,
    config: Optional[NumericsConfig] = None,
) -> Estimate:
    config = config or NumericsConfig()
    return _monomial_estimate(monomial_sweep(S, space, weight, config), mode, config)


# %%
def _lq_estimate(
    density: Callable, measure: MeasureSpec, config: NumericsConfig, nodes: int = AREA_NODES
) -> Estimate:
    q = measure.q
    circle = np.exp(2j * np.pi * np.arange(config.angles) / config.angles)
    radii = [shell_radius(j) for j in range(config.shells + 1)]

    if measure.kind is MeasureKind.BOUNDARY:
        means = []
        for r in radii[1:]:
            values = density(r * circle)
            means.append(float(np.mean(np.where(np.isnan(values), np.inf, values) ** q)))
        estimate = _extrapolate(means, config)
    else:
        beta = measure.beta
        partial, total = [], 0.0
        for lower, upper in zip(radii[:-1], radii[1:]):
            r, w = gauss_legendre(nodes, lower, upper)
            values = density(r[:, None] * circle[None, :])
            values = np.where(np.isnan(values), np.inf, values) ** q
            radial = (beta + 1.0) * (1.0 - r * r) ** beta * 2.0 * r * w
            total += float(np.dot(radial, values.mean(axis=1)))
            partial.append(total)
        estimate = _classify(partial, config)

    if estimate.is_divergent:
        return estimate
    return Estimate(estimate.value ** (1.0 / q), estimate.classification, estimate.trace)


def order_bounded_Qk(
    S: OperatorSpec,
    space: SpaceSpec,
    measure: MeasureSpec,
    k: int,
    config: Optional[NumericsConfig] = None,
) -> Estimate:
    # trace holds q-th powers: partial disk integrals (AREA) or circle means (BOUNDARY)
    config = config or NumericsConfig()
    return _lq_estimate(lambda z: order_density(S, space, k, z), measure, config)


def order_bounded_sum(
    S: OperatorSpec,
    space: SpaceSpec,
    measure: MeasureSpec,
    config: Optional[NumericsConfig] = None,
) -> Estimate:
    config = config or NumericsConfig()
    return _lq_estimate(lambda z: _density_sum(S, space, None, z), measure, config)


class MajorantFamily(Enum):
    TESTFN = 'TESTFN'
    MONOMIAL = 'MONOMIAL'


def _testfn_majorant(S: OperatorSpec, space: SpaceSpec, k: int, config: NumericsConfig):
    g = space.gamma
    anchors = np.concatenate(a_grid(config.a_shells, config.a_angles, config.a_max))

    def majorant(z):
        w = _as_points(z)
        best = np.zeros(w.shape)
        with np.errstate(all='ignore'):
            for a in anchors:
                best = np.maximum(best, np.abs(apply(S, ProbeFunction(a, g, k), w)))
            # the test function anchored at tau(z) attains the density bound at z
            t = np.asarray(S.tau(w), dtype=complex)
            inside = np.abs(t) < 1.0
            anchored = np.abs(apply(S, ProbeFunction(np.where(inside, t, 0.0), g, k), w))
        return np.where(inside, np.maximum(best, anchored), np.inf)

    return majorant


def _monomial_majorant(S: OperatorSpec, space: SpaceSpec, config: NumericsConfig):
    g = space.gamma

    def majorant(z):
        w = _as_points(z)
        best = np.zeros(w.shape)
        with np.errstate(all='ignore'):
            for n in range(1, config.nmax + 1):
                best = np.maximum(best, n**g * np.abs(apply(S, monomial(n), w)))
        return best

    return majorant


def order_bounded_majorant(
    S: OperatorSpec,
    space: SpaceSpec,
    measure: MeasureSpec,
    family: MajorantFamily,
    k: int = 0,
    config: Optional[NumericsConfig] = None,
) -> Estimate:
    # MONOMIAL needs H^inf or A^-alpha; TESTFN also anchors a = tau(z)
    config = config or NumericsConfig()
    family = MajorantFamily(family)
    if family is MajorantFamily.MONOMIAL:
        _check_sup_type(space, 'order_bounded_majorant')
        majorant = _monomial_majorant(S, space, config)
    else:
        majorant = _testfn_majorant(S, space, k, config)
    return _lq_estimate(majorant, measure, config, nodes=MAJORANT_AREA_NODES)


# %%
@dataclass(frozen=True)
class CriterionReport:
    n: int
    gamma: float
    space: SpaceSpec
    weight: Weight
    measure: Optional[MeasureSpec]
    tau_sup: float
    strict: bool
    M: tuple[Estimate, ...]
    M_sum: Estimate
    G: tuple[Estimate, ...]
    G_sum: Estimate
    testfn_sup: tuple[Estimate, ...]
    testfn_limit: tuple[Estimate, ...]
    monomial_sup: Optional[Estimate]
    monomial_limit: Optional[Estimate]
    Q: Optional[tuple[Estimate, ...]]
    Q_sum: Optional[Estimate]
    majorant_testfn: Optional[tuple[Estimate, ...]]
    majorant_monomial: Optional[Estimate]
    bounded: Verdict
    compact: Verdict
    order_bounded: Optional[Verdict]
    config: NumericsConfig = field(default_factory=NumericsConfig)

    def to_dict(self) -> dict[str, Any]:
        def many(estimates):
            return None if estimates is None else [e.to_dict() for e in estimates]

        def one(estimate):
            return None if estimate is None else estimate.to_dict()

        return dict(
            n=self.n,
            gamma=self.gamma,
            space=self.space.to_dict(),
            weight=self.weight.to_dict(),
            measure=None if self.measure is None else self.measure.to_dict(),
            tau_sup=self.tau_sup,
            strict=self.strict,
            M=many(self.M),
            M_sum=one(self.M_sum),
            G=many(self.G),
            G_sum=one(self.G_sum),
            testfn_sup=many(self.testfn_sup),
            testfn_limit=many(self.testfn_limit),
            monomial_sup=one(self.monomial_sup),
            monomial_limit=one(self.monomial_limit),
            Q=many(self.Q),
            Q_sum=one(self.Q_sum),
            majorant_testfn=many(self.majorant_testfn),
            majorant_monomial=one(self.majorant_monomial),
            verdicts=dict(
                bounded=self.bounded.value,
                compact=self.compact.value,
                order_bounded=None if self.order_bounded is None else self.order_bounded.value,
            ),
            config=self.config.to_dict(),
        )

    def to_dataframe(self) -> pd.DataFrame:
        def value(estimates, k):
            return np.nan if estimates is None else estimates[k].value

        def label(estimates, k):
            return None if estimates is None else estimates[k].classification.value

        records = [
            dict(
                k=k,
                M_k=self.M[k].value,
                M_k_class=self.M[k].classification.value,
                G_k=self.G[k].value,
                G_k_class=self.G[k].classification.value,
                Q_k=value(self.Q, k),
                Q_k_class=label(self.Q, k),
                testfn_sup=self.testfn_sup[k].value,
                testfn_limit=self.testfn_limit[k].value,
                monomial_sup=np.nan if self.monomial_sup is None else self.monomial_sup.value,
                monomial_limit=(
                    np.nan if self.monomial_limit is None else self.monomial_limit.value
                ),
                bounded=self.bounded.value,
                compact=self.compact.value,
                order_bounded=None if self.order_bounded is None else self.order_bounded.value,
            )
            for k in range(self.n + 1)
        ]
        return pd.DataFrame.from_records(records)

    def to_dataset(self) -> xr.Dataset:
        def traces(estimates, dim):
            length = max(len(e.trace) for e in estimates)
            data = np.full((len(estimates), length), np.nan)
            for i, e in enumerate(estimates):
                data[i, : len(e.trace)] = e.trace
            return (('k', dim), data)

        ks = np.arange(self.n + 1)
        data_vars = {
            'M': ('k', [e.value for e in self.M]),
            'M_trace': traces(self.M, 'shell'),
            'G': ('k', [e.value for e in self.G]),
            'G_trace': traces(self.G, 'delta'),
            'testfn_sup': ('k', [e.value for e in self.testfn_sup]),
            'testfn_limit': ('k', [e.value for e in self.testfn_limit]),
            'testfn_trace': traces(self.testfn_limit, 'a_shell'),
        }
        if self.Q is not None:
            data_vars['Q'] = ('k', [e.value for e in self.Q])
            data_vars['Q_trace'] = traces(self.Q, 'q_shell')
        attrs = dict(
            space=self.space.label,
            weight=self.weight.label,
            gamma=self.gamma,
            tau_sup=self.tau_sup,
            bounded=self.bounded.value,
            compact=self.compact.value,
        )
        if self.order_bounded is not None:
            attrs['order_bounded'] = self.order_bounded.value
        return xr.Dataset(data_vars, coords=dict(k=ks), attrs=attrs)


def _vanishes(estimate: Estimate, scale: Estimate, config: NumericsConfig) -> bool:
    bound = config.zero_tolerance * max(1.0, scale.value if scale.is_finite else 1.0)
    return estimate.is_finite and estimate.value <= bound


def _compact_verdict(
    bounded: Verdict, limits: Sequence[Estimate], scales: Sequence[Estimate], config
) -> Verdict:
    if bounded is Verdict.NO:
        return Verdict.NO
    if any(e.is_divergent for e in limits):
        return Verdict.NO
    if any(
        e.is_finite and not _vanishes(e, s, config) for e, s in zip(limits, scales)
    ):
        return Verdict.NO
    if bounded is Verdict.YES and all(
        _vanishes(e, s, config) for e, s in zip(limits, scales)
    ):
        return Verdict.YES
    return Verdict.INCONCLUSIVE


def compute_report(
    S: OperatorSpec,
    space: SpaceSpec,
    weight: Weight,
    measure: Optional[MeasureSpec] = None,
    config: Optional[NumericsConfig] = None,
) -> CriterionReport:
    config = config or NumericsConfig()
    ks = range(S.n + 1)
    logger.debug('compute_report: n=%d space=%s weight=%s', S.n, space.label, weight.label)

    M = tuple(boundedness_Mk(S, space, weight, k, config) for k in ks)
    M_sum = boundedness_sum(S, space, weight, config)
    G = tuple(compactness_Gk(S, space, weight, k, config, M[k]) for k in ks)
    G_sum = compactness_sum(S, space, weight, config, M_sum)

    sweeps = [testfn_sweep(S, space, weight, k, config) for k in ks]
    testfn_sup = tuple(_testfn_estimate(s, Mode.SUP, config) for s in sweeps)
    testfn_limit = tuple(_testfn_estimate(s, Mode.LIMIT, config) for s in sweeps)

    monomial_sup = monomial_limit = None
    if space.is_sup_type:
        values = monomial_sweep(S, space, weight, config)
        monomial_sup = _monomial_estimate(values, Mode.SUP, config)
        monomial_limit = _monomial_estimate(values, Mode.LIMIT, config)

    Q = Q_sum = majorant_testfn = majorant_monomial = None
    order_bounded = None
    if measure is not None:
        Q = tuple(order_bounded_Qk(S, space, measure, k, config) for k in ks)
        Q_sum = order_bounded_sum(S, space, measure, config)
        majorant_testfn = tuple(
            order_bounded_majorant(S, space, measure, MajorantFamily.TESTFN, k, config)
            for k in ks
        )
        if space.is_sup_type:
            majorant_monomial = order_bounded_majorant(
                S, space, measure, MajorantFamily.MONOMIAL, 0, config
            )
        order_bounded = combine_verdicts([verdict_from(e) for e in Q])

    bounded = combine_verdicts([verdict_from(e) for e in M])
    compact = _compact_verdict(bounded, G, M, config)

    for name, estimates in (('M', M), ('G', G), ('Q', Q or ())):
        for k, e in enumerate(estimates):
            if e.classification is Classification.INCONCLUSIVE:
                logger.warning('compute_report: %s_%d is inconclusive', name, k)
    logger.info(
        'compute_report: bounded=%s compact=%s order_bounded=%s',
        bounded.value, compact.value, None if order_bounded is None else order_bounded.value,
    )
    return CriterionReport(
        n=S.n,
        gamma=space.gamma,
        space=space,
        weight=weight,
        measure=measure,
        tau_sup=S.tau_sup,
        strict=S.strict,
        M=M,
        M_sum=M_sum,
        G=G,
        G_sum=G_sum,
        testfn_sup=testfn_sup,
        testfn_limit=testfn_limit,
        monomial_sup=monomial_sup,
        monomial_limit=monomial_limit,
        Q=Q,
        Q_sum=Q_sum,
        majorant_testfn=majorant_testfn,
        majorant_monomial=majorant_monomial,
        bounded=bounded,
        compact=compact,
        order_bounded=order_bounded,
        config=config,
    )


# %%
class AuditOutcome(Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    EXCLUDED = 'EXCLUDED'
    UNDECIDED = 'UNDECIDED'


@dataclass(frozen=True)
class AuditRecord:
    property: str
    left: str
    right: str
    left_verdict: Optional[Verdict]
    right_verdict: Optional[Verdict]
    outcome: AuditOutcome
    evidence: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return dict(
            property=self.property,
            left=self.left,
            right=self.right,
            left_verdict=None if self.left_verdict is None else self.left_verdict.value,
            right_verdict=None if self.right_verdict is None else self.right_verdict.value,
            outcome=self.outcome.value,
            evidence=self.evidence,
        )


def _evidence(estimates) -> Any:
    if estimates is None:
        return None
    if isinstance(estimates, Estimate):
        return estimates.value
    return [e.value for e in estimates]


def _conditions(report: CriterionReport) -> dict[str, dict[str, tuple]]:
    # a verdict of None marks an exclusion
    config = report.config
    sup_type = report.space.is_sup_type

    c = report.bounded
    bounded = {
        'b': (verdict_from(report.M_sum), _evidence(report.M_sum)),
        'c': (c, _evidence(report.M)),
        'd': (
            combine_verdicts([verdict_from(e) for e in report.testfn_sup]),
            _evidence(report.testfn_sup),
        ),
    }
    if sup_type:
        bounded['e'] = (verdict_from(report.monomial_sup), _evidence(report.monomial_sup))

    compact = {
        'ii': (
            _compact_verdict(c, [report.G_sum], [report.M_sum], config),
            _evidence(report.G_sum),
        ),
        'iii': (report.compact, _evidence(report.G)),
    }
    if report.gamma == 0:
        # f_a sigma_a^k tends to a unimodular constant times sigma_a^k, not to 0
        compact['iv'] = (None, _evidence(report.testfn_limit))
    else:
        compact['iv'] = (
            _compact_verdict(c, report.testfn_limit, report.testfn_sup, config),
            _evidence(report.testfn_limit),
        )
    if sup_type:
        compact['v'] = (
            _compact_verdict(c, [report.monomial_limit], [report.monomial_sup], config),
            _evidence(report.monomial_limit),
        )

    result = {'bounded': bounded, 'compact': compact}
    if report.Q is not None:
        order = {
            'ii': (verdict_from(report.Q_sum), _evidence(report.Q_sum)),
            'iii': (report.order_bounded, _evidence(report.Q)),
            'iv': (
                combine_verdicts([verdict_from(e) for e in report.majorant_testfn]),
                _evidence(report.majorant_testfn),
            ),
        }
        if report.majorant_monomial is not None:
            order['v'] = (
                verdict_from(report.majorant_monomial),
                _evidence(report.majorant_monomial),
            )
        result['order_bounded'] = order
    return result


def equivalence_audit(report: CriterionReport) -> list[AuditRecord]:
    records = []
    for prop, conditions in _conditions(report).items():
        names = list(conditions)
        for i, left in enumerate(names):
            for right in names[i + 1 :]:
                lv, le = conditions[left]
                rv, re_ = conditions[right]
                if lv is None or rv is None:
                    outcome = AuditOutcome.EXCLUDED
                    logger.warning(
                        'equivalence_audit: %s (%s, %s) excludes the degenerate '
                        'gamma = 0 test-function probe', prop, left, right,
                    )
                elif Verdict.INCONCLUSIVE in (lv, rv):
                    outcome = AuditOutcome.UNDECIDED
                elif lv is rv:
                    outcome = AuditOutcome.PASS
                else:
                    outcome = AuditOutcome.FAIL
                records.append(
                    AuditRecord(prop, left, right, lv, rv, outcome, {left: le, right: re_})
                )
    return records
