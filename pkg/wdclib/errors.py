from __future__ import annotations

from typing import Optional


class WdcError(ValueError):
    pass


class SelfMapViolation(WdcError):
    def __init__(self, tau_sup: float, tolerance: float):
        super().__init__(
            f'not a self-map of the disk: sup|tau| = {tau_sup:.12g} > 1 + {tolerance:g}'
        )
        self.tau_sup = tau_sup
        self.tolerance = tolerance


class WrongSpace(WdcError):
    def __init__(self, operation: str, kind: str):
        super().__init__(f'{operation} is only defined for HINF and GROWTH, got {kind}')
        self.operation = operation
        self.kind = kind


class ScenarioParseError(WdcError):
    def __init__(self, source: str, message: str, line: int, column: int):
        super().__init__(f'{source}:{line}:{column}: {message}')
        self.source = source
        self.line = line
        self.column = column


class ScenarioValidationError(WdcError):
    def __init__(
        self, path: str, invariant: str, message: str, source: Optional[str] = None
    ):
        location = f'{source}: {path}' if source else path
        super().__init__(f'{location}: {invariant}: {message}')
        self.path = path
        self.invariant = invariant
        self.message = message
        self.source = source
