# %%
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence

import dask
from toolz.curried import map

from . import analytic
from .analytic import TaylorFunction
from .classify import Verdict
from .config import NumericsConfig
from .criteria import CriterionReport, MeasureSpec, compute_report, sup_grid
from .errors import ScenarioParseError, ScenarioValidationError, SelfMapViolation
from .operator import OperatorSpec, self_map_check
from .spaces import SpaceSpec
from .weight import Weight

logger = logging.getLogger(__name__)

PROPERTIES = ('bounded', 'compact', 'order_bounded')


# %%
def _real(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _complex(value: Any, path: str) -> complex:
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(map(_real, value)):
        return complex(float(value[0]), float(value[1]))
    if _real(value):
        return complex(float(value))
    raise ScenarioValidationError(path, 'COMPLEX_NUMBER', f'expected [re, im] or a real, got {value!r}')


def _pair(value: complex) -> list[float]:
    return [float(value.real), float(value.imag)]


def _builtin(data: Mapping[str, Any], path: str) -> TaylorFunction:
    name = data['builtin']
    params = {key: value for key, value in data.items() if key != 'builtin'}
    try:
        if name in ('identity', 'zero'):
            return analytic.BUILTINS[name]()
        if name in ('scaled_identity', 'constant'):
            return analytic.BUILTINS[name](_complex(params['c'], f'{path}.c'))
        if name == 'automorphism':
            return analytic.automorphism(_complex(params['a'], f'{path}.a'))
        if name == 'polynomial':
            return analytic.polynomial(_coefficients(params['coeffs'], f'{path}.coeffs'))
        if name == 'monomial':
            return analytic.monomial(int(params['n']))
    except KeyError as error:
        raise ScenarioValidationError(
            f'{path}.{error.args[0]}', 'MISSING_FIELD', f'builtin {name!r} needs it'
        ) from None
    except ScenarioValidationError:
        raise
    except (TypeError, ValueError) as error:
        raise ScenarioValidationError(path, 'PARAMETER_RANGE', str(error)) from None
    raise ScenarioValidationError(
        f'{path}.builtin', 'UNKNOWN_BUILTIN', f'{name!r} is not one of {sorted(analytic.BUILTINS)}'
    )


def _coefficients(values: Any, path: str) -> list[complex]:
    if not isinstance(values, list) or not values:
        raise ScenarioValidationError(path, 'COEFFICIENTS', 'expected a non-empty list')
    return [_complex(v, f'{path}[{i}]') for i, v in enumerate(values)]


def parse_function(data: Any, path: str) -> TaylorFunction:
    if isinstance(data, Mapping):
        if 'builtin' not in data:
            raise ScenarioValidationError(f'{path}.builtin', 'MISSING_FIELD', 'missing')
        return _builtin(data, path)
    coeffs = _coefficients(data, path)
    try:
        return TaylorFunction(coeffs)
    except ValueError as error:
        raise ScenarioValidationError(path, 'COEFFICIENTS', str(error)) from None


def canonical_function(data: Any) -> Any:
    # every number as [re, im]
    if isinstance(data, Mapping):
        result = {}
        for key, value in data.items():
            if key in ('c', 'a'):
                result[key] = _pair(_complex(value, key))
            elif key == 'coeffs':
                result[key] = [_pair(c) for c in _coefficients(value, key)]
            else:
                result[key] = value
        return result
    return [_pair(c) for c in _coefficients(data, 'coeffs')]


def parse_builtin_spec(text: str) -> TaylorFunction:
    # name or name:arg,arg,...
    name, _, args = text.partition(':')
    values = [float(v) for v in args.split(',')] if args else []
    if name in ('identity', 'zero'):
        return analytic.BUILTINS[name]()
    if name == 'monomial' and len(values) == 1:
        return analytic.monomial(int(values[0]))
    if name in ('scaled_identity', 'constant', 'automorphism') and 1 <= len(values) <= 2:
        c = complex(values[0], values[1] if len(values) == 2 else 0.0)
        return analytic.BUILTINS[name](c)
    if name == 'polynomial' and values:
        return analytic.polynomial(values)
    raise ValueError(f'cannot parse function {text!r}')


# %%
class Scenario:
    def __init__(
        self,
        name: str,
        operator: OperatorSpec,
        source_space: SpaceSpec,
        target_weight: Weight,
        *,
        order_bound_target: Optional[MeasureSpec] = None,
        expected: Optional[Mapping[str, Verdict]] = None,
        config: Optional[NumericsConfig] = None,
        description: Optional[Mapping[str, Any]] = None,
    ):
        self._name = name
        self._operator = operator
        self._source_space = source_space
        self._target_weight = target_weight
        self._order_bound_target = order_bound_target
        self._expected = dict(expected or {})
        self._config = config or NumericsConfig()
        self._description = dict(description or {})

    @property
    def name(self) -> str:
        return self._name

    @property
    def operator(self) -> OperatorSpec:
        return self._operator

    @property
    def source_space(self) -> SpaceSpec:
        return self._source_space

    @property
    def target_weight(self) -> Weight:
        return self._target_weight

    @property
    def order_bound_target(self) -> Optional[MeasureSpec]:
        return self._order_bound_target

    @property
    def expected(self) -> dict[str, Verdict]:
        return self._expected

    @property
    def config(self) -> NumericsConfig:
        return self._config

    def __repr__(self):
        return f'Scenario({self._name}: {self._source_space.label} -> {self._target_weight.label})'

    def __eq__(self, other):
        return isinstance(other, Scenario) and other.to_dict() == self.to_dict()

    def to_dict(self) -> dict[str, Any]:
        operator = self._description.get('operator', {})
        result: dict[str, Any] = dict(
            name=self._name,
            operator=dict(
                symbols=[canonical_function(s) for s in operator.get('symbols', [])],
                tau=canonical_function(operator.get('tau', [0.0])),
            ),
            source_space=self._source_space.to_dict(),
            target_weight=self._target_weight.to_dict(),
        )
        if self._order_bound_target is not None:
            result['order_bound_target'] = self._order_bound_target.to_dict()
        if self._expected:
            result['expected'] = {key: v.value for key, v in self._expected.items()}
        overrides = self._description.get('config')
        if overrides:
            result['config'] = dict(overrides)
        return result


def _required(data: Mapping[str, Any], key: str, path: str) -> Any:
    if key not in data:
        raise ScenarioValidationError(f'{path}.{key}', 'MISSING_FIELD', 'missing')
    return data[key]


def _construct(factory, data: Mapping[str, Any], path: str):
    if not isinstance(data, Mapping):
        raise ScenarioValidationError(path, 'TYPE', 'expected an object')
    try:
        return factory(data)
    except (KeyError, TypeError) as error:
        raise ScenarioValidationError(path, 'MISSING_FIELD', str(error)) from None
    except ValueError as error:
        raise ScenarioValidationError(path, 'PARAMETER_RANGE', str(error)) from None


def parse_scenario(
    data: Mapping[str, Any],
    path: str,
    config: Optional[NumericsConfig] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> Scenario:
    # overrides win over the scenario's own config
    if not isinstance(data, Mapping):
        raise ScenarioValidationError(path, 'TYPE', 'expected an object')
    name = _required(data, 'name', path)
    if not isinstance(name, str) or not name:
        raise ScenarioValidationError(f'{path}.name', 'TYPE', 'expected a non-empty string')

    try:
        scenario_config = (config or NumericsConfig()).with_overrides(
            **dict(data.get('config') or {})
        )
        scenario_config = scenario_config.with_overrides(**dict(overrides or {}))
    except (TypeError, ValueError) as error:
        raise ScenarioValidationError(f'{path}.config', 'CONFIG', str(error)) from None

    space = _construct(SpaceSpec.from_dict, _required(data, 'source_space', path), f'{path}.source_space')
    weight = _construct(Weight.from_dict, _required(data, 'target_weight', path), f'{path}.target_weight')
    measure = None
    if data.get('order_bound_target') is not None:
        measure = _construct(
            MeasureSpec.from_dict, data['order_bound_target'], f'{path}.order_bound_target'
        )

    operator = _required(data, 'operator', path)
    if not isinstance(operator, Mapping):
        raise ScenarioValidationError(f'{path}.operator', 'TYPE', 'expected an object')
    symbols_data = _required(operator, 'symbols', f'{path}.operator')
    if not isinstance(symbols_data, list) or not symbols_data:
        raise ScenarioValidationError(
            f'{path}.operator.symbols', 'SYMBOL_COUNT', 'expected u_0..u_n'
        )
    if 'n' in operator and (isinstance(operator['n'], bool) or not isinstance(operator['n'], int)):
        raise ScenarioValidationError(f'{path}.operator.n', 'TYPE', 'expected an integer')
    if 'n' in operator and operator['n'] != len(symbols_data) - 1:
        raise ScenarioValidationError(
            f'{path}.operator.n', 'SYMBOL_COUNT',
            f'n = {operator["n"]} needs {operator["n"] + 1} symbols, got {len(symbols_data)}',
        )
    symbols = [
        parse_function(s, f'{path}.operator.symbols[{i}]') for i, s in enumerate(symbols_data)
    ]
    tau = parse_function(_required(operator, 'tau', f'{path}.operator'), f'{path}.operator.tau')
    try:
        check = self_map_check(
            tau,
            sup_grid(scenario_config),
            tolerance=scenario_config.self_map_tolerance,
            refine_levels=scenario_config.refine_levels,
        )
    except SelfMapViolation as error:
        raise ScenarioValidationError(
            f'{path}.operator.tau', 'SELF_MAP_VIOLATION', str(error)
        ) from None

    expected_data = data.get('expected') or {}
    if not isinstance(expected_data, Mapping):
        raise ScenarioValidationError(f'{path}.expected', 'TYPE', 'expected an object')
    expected = {}
    for key, value in expected_data.items():
        if key not in PROPERTIES:
            raise ScenarioValidationError(
                f'{path}.expected.{key}', 'EXPECTED_VERDICT', f'unknown property {key!r}'
            )
        if value not in ('YES', 'NO'):
            raise ScenarioValidationError(
                f'{path}.expected.{key}', 'EXPECTED_VERDICT', f'expected YES or NO, got {value!r}'
            )
        expected[key] = Verdict(value)
    if 'order_bounded' in expected and measure is None:
        raise ScenarioValidationError(
            f'{path}.expected.order_bounded',
            'EXPECTED_VERDICT',
            'an order_bounded verdict needs an order_bound_target',
        )

    return Scenario(
        name,
        OperatorSpec(symbols, tau, self_map=check),
        space,
        weight,
        order_bound_target=measure,
        expected=expected,
        config=scenario_config,
        description=data,
    )


def parse_scenarios(
    text: str,
    source: str = '<string>',
    config: Optional[NumericsConfig] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> list[Scenario]:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise ScenarioParseError(source, error.msg, error.lineno, error.colno) from None

    if not isinstance(document, Mapping) or not isinstance(document.get('scenarios'), list):
        raise ScenarioValidationError('scenarios', 'TYPE', 'expected {"scenarios": [...]}', source)

    scenarios = []
    names = set()
    for i, data in enumerate(document['scenarios']):
        path = f'scenarios[{i}]'
        try:
            scenario = parse_scenario(data, path, config, overrides)
        except ScenarioValidationError as error:
            raise ScenarioValidationError(
                error.path, error.invariant, error.message, source
            ) from None
        if scenario.name in names:
            raise ScenarioValidationError(
                f'{path}.name', 'DUPLICATE_NAME', f'{scenario.name!r} appears twice', source
            )
        names.add(scenario.name)
        scenarios.append(scenario)
    logger.debug('parse_scenarios: %s: %d scenarios', source, len(scenarios))
    return scenarios


def load_scenarios(
    path: str | Path,
    config: Optional[NumericsConfig] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> list[Scenario]:
    path = Path(path)
    return parse_scenarios(path.read_text(encoding='utf-8'), str(path), config, overrides)


def dump_scenarios(scenarios: Sequence[Scenario]) -> str:
    return json.dumps({'scenarios': [s.to_dict() for s in scenarios]}, indent=2, sort_keys=True)


# %%
class ScenarioResult:
    def __init__(self, scenario: Scenario, report: CriterionReport):
        self._scenario = scenario
        self._report = report
        actual = dict(
            bounded=report.bounded,
            compact=report.compact,
            order_bounded=report.order_bounded,
        )
        self._mismatches = {
            key: (expected, actual[key])
            for key, expected in scenario.expected.items()
            if actual[key] is not expected
        }

    @property
    def scenario(self) -> Scenario:
        return self._scenario

    @property
    def report(self) -> CriterionReport:
        return self._report

    @property
    def mismatches(self) -> dict[str, tuple[Verdict, Optional[Verdict]]]:
        return self._mismatches

    @property
    def passed(self) -> bool:
        return not self._mismatches

    def to_dict(self) -> dict[str, Any]:
        return dict(
            name=self._scenario.name,
            scenario=self._scenario.to_dict(),
            report=self._report.to_dict(),
            status='PASS' if self.passed else 'FAIL',
            mismatches={
                key: dict(expected=e.value, actual=None if a is None else a.value)
                for key, (e, a) in self._mismatches.items()
            },
        )

    def summary(self) -> str:
        verdicts = ' '.join(
            f'{key}={getattr(self._report, key).value}'
            for key in PROPERTIES
            if getattr(self._report, key) is not None
        )
        status = 'PASS' if self.passed else 'FAIL'
        return f'{status} {self._scenario.name}: {verdicts}'


def run_report(scenario: Scenario) -> ScenarioResult:
    logger.debug('run_report: %s', scenario.name)
    report = compute_report(
        scenario.operator,
        scenario.source_space,
        scenario.target_weight,
        scenario.order_bound_target,
        scenario.config,
    )
    result = ScenarioResult(scenario, report)
    if not result.passed:
        logger.warning('run_report: %s mismatches %s', scenario.name, sorted(result.mismatches))
    return result


def run_reports(scenarios: Sequence[Scenario], parallel: bool = True) -> list[ScenarioResult]:
    # results keep input order
    if not parallel:
        return list(map(run_report, scenarios))
    tasks = [dask.delayed(run_report)(s) for s in scenarios]
    return list(dask.compute(*tasks, scheduler='threads'))


def probe(scenario: Scenario, f, z: complex) -> complex:
    point = analytic.DiskPoint(z)
    return complex(scenario.operator(f, point.z))
