from .analytic import (
    DiskPoint,
    Mobius,
    ProbeFunction,
    TaylorFunction,
    derivative,
    evaluate,
    mobius,
    monomial,
    proof_probe,
    pseudo_distance,
    test_function,
)
from .classify import Classification, Estimate, Verdict
from .config import NumericsConfig
from .criteria import (
    CriterionReport,
    MeasureSpec,
    boundedness_Mk,
    compactness_Gk,
    compute_report,
    criterion_density,
    equivalence_audit,
    monomial_condition,
    order_bounded_Qk,
    testfn_condition,
)
from .errors import (
    ScenarioParseError,
    ScenarioValidationError,
    SelfMapViolation,
    WdcError,
    WrongSpace,
)
from .grid import DiskGrid
from .operator import OperatorSpec, apply, operator_norm_lower_bound, self_map_check, target_norm
from .quadrature import QuadratureConfig
from .scenario import Scenario, load_scenarios, run_report
from .spaces import SpaceSpec, bergman_norm, gamma, hardy_norm, norm, weighted_sup_norm
from .version import __version__
from .weight import Weight

__all__ = [
    '__version__',
    'Classification',
    'CriterionReport',
    'DiskGrid',
    'DiskPoint',
    'Estimate',
    'MeasureSpec',
    'Mobius',
    'NumericsConfig',
    'OperatorSpec',
    'ProbeFunction',
    'QuadratureConfig',
    'Scenario',
    'ScenarioParseError',
    'ScenarioValidationError',
    'SelfMapViolation',
    'SpaceSpec',
    'TaylorFunction',
    'Verdict',
    'WdcError',
    'Weight',
    'WrongSpace',
    'apply',
    'bergman_norm',
    'boundedness_Mk',
    'compactness_Gk',
    'compute_report',
    'criterion_density',
    'derivative',
    'equivalence_audit',
    'evaluate',
    'gamma',
    'hardy_norm',
    'load_scenarios',
    'mobius',
    'monomial',
    'monomial_condition',
    'norm',
    'operator_norm_lower_bound',
    'order_bounded_Qk',
    'proof_probe',
    'pseudo_distance',
    'run_report',
    'self_map_check',
    'target_norm',
    'test_function',
    'testfn_condition',
    'weighted_sup_norm',
]
