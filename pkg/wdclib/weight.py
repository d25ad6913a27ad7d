# %%
from __future__ import annotations

from enum import Enum
from typing import Any, Mapping, Optional, Sequence

import numpy as np
from scipy.interpolate import PchipInterpolator


# %%
class WeightForm(Enum):
    POWER = 'POWER'
    SAMPLED = 'SAMPLED'


class Weight:
    # POWER(beta) is (1 - |z|^2)^beta; SAMPLED is a monotone PCHIP fit of (r_i, nu_i)

    def __init__(
        self,
        form: WeightForm,
        *,
        beta: Optional[float] = None,
        radii: Optional[Sequence[float]] = None,
        values: Optional[Sequence[float]] = None,
        label: Optional[str] = None,
    ):
        self._form = WeightForm(form)
        self._beta = None
        self._radii = None
        self._values = None
        self._interpolant = None

        if self._form is WeightForm.POWER:
            if beta is None or not beta >= 0:
                raise ValueError(f'power weight needs beta >= 0, got {beta}')
            self._beta = float(beta)
        else:
            r = np.asarray(radii, dtype=float)
            v = np.asarray(values, dtype=float)
            if r.ndim != 1 or r.shape != v.shape or r.size < 2:
                raise ValueError('sampled weight needs matching radii and values')
            if r[0] != 0.0 or r[-1] != 1.0 or np.any(np.diff(r) <= 0):
                raise ValueError('sampled radii must increase strictly from 0 to 1')
            if np.any(v[:-1] <= 0) or v[-1] < 0 or not np.all(np.isfinite(v)):
                raise ValueError('sampled weight must be positive inside the disk')
            self._radii = r
            self._values = v
            self._interpolant = PchipInterpolator(r, v, extrapolate=False)

        self._label = label or self._default_label()

    def _default_label(self):
        if self._form is WeightForm.POWER:
            return f'(1-|z|^2)^{self._beta:g}'
        return f'sampled[{len(self._radii)}]'

    @staticmethod
    def power(beta: float, label: Optional[str] = None) -> Weight:
        return Weight(WeightForm.POWER, beta=beta, label=label)

    @staticmethod
    def unit() -> Weight:
        return Weight.power(0.0, label='1')

    @staticmethod
    def sampled(
        radii: Sequence[float], values: Sequence[float], label: Optional[str] = None
    ) -> Weight:
        return Weight(WeightForm.SAMPLED, radii=radii, values=values, label=label)

    @property
    def form(self) -> WeightForm:
        return self._form

    @property
    def beta(self) -> Optional[float]:
        return self._beta

    @property
    def label(self) -> str:
        return self._label

    @property
    def extends_to_boundary(self) -> bool:
        return True

    def __call__(self, z) -> np.ndarray:
        r = np.minimum(np.abs(np.asarray(z)), 1.0)
        if self._form is WeightForm.POWER:
            if self._beta == 0.0:
                return np.ones_like(r)
            return (1.0 - r * r) ** self._beta
        return self._interpolant(r)

    def __repr__(self):
        return f'Weight({self._form.value}; {self._label})'

    def __eq__(self, other):
        if not isinstance(other, Weight) or other._form is not self._form:
            return False
        if self._form is WeightForm.POWER:
            return self._beta == other._beta
        return np.array_equal(self._radii, other._radii) and np.array_equal(
            self._values, other._values
        )

    def to_dict(self) -> dict[str, Any]:
        if self._form is WeightForm.POWER:
            return dict(form=self._form.value, beta=self._beta, label=self._label)
        return dict(
            form=self._form.value,
            radii=self._radii.tolist(),
            values=self._values.tolist(),
            label=self._label,
        )

    @staticmethod
    def from_dict(data: Mapping[str, Any]) -> Weight:
        form = WeightForm(str(data.get('form', '')).upper())
        if form is WeightForm.POWER:
            return Weight.power(float(data['beta']), data.get('label'))
        return Weight.sampled(data['radii'], data['values'], data.get('label'))
